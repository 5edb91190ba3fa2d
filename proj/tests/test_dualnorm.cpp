#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "support.hpp"
#include "tsirelson_lab/dualnorm.hpp"
#include "tsirelson_lab/exact_lp.hpp"

using namespace tsirelson_lab;

namespace {

const Admissibility kRules[] = {Admissibility::schreier(), Admissibility::schreier_plus_one()};

FinVec v(std::vector<std::pair<Index, Rational>> p) { return FinVec::from_pairs(std::move(p)); }

// Checks both halves of the certificate with test-side arithmetic only.
void verify_certificate(const FinVec& y, const DualNormResult& r, Admissibility rule) {
  REQUIRE(r.bounds.is_exact());
  CHECK(testsupport::brute_tsirelson(r.norming_point, rule) <= 1);
  CHECK(pairing(y, r.norming_point) == r.bounds.lower);
  Rational total = 0;
  FinVec cover;
  for (const auto& m : r.multipliers) {
    CHECK(m.weight > 0);
    total += m.weight;
    cover = cover + m.weight * m.functional.abs();
    CHECK(m.functional.sup_norm() <= 1);
    CHECK(abs_value(pairing(m.functional, r.norming_point)) <= 1);
  }
  CHECK(total == r.bounds.upper);
  for (const auto& e : y.entries()) CHECK(cover.coeff(e.index) >= abs_value(e.coeff));
}

}  // namespace

TEST_CASE("exact LP basics") {
  // max x + y s.t. x <= 2, y <= 3, x + y <= 4
  ExactLp lp({Rational(1), Rational(1)});
  const Rational r1[] = {1, 0}, r2[] = {0, 1}, r3[] = {1, 1};
  lp.add_row(r1, 2);
  lp.add_row(r2, 3);
  REQUIRE(lp.solve() == LpStatus::optimal);
  CHECK(lp.objective_value() == 5);
  lp.add_row(r3, 4);
  REQUIRE(lp.solve() == LpStatus::optimal);
  CHECK(lp.objective_value() == 4);
  const auto d = lp.dual();
  CHECK(d[0] * 2 + d[1] * 3 + d[2] * 4 == 4);

  ExactLp unbounded({Rational(1)});
  const Rational neg[] = {-1};
  unbounded.add_row(neg, 0);
  CHECK(unbounded.solve() == LpStatus::unbounded);

  // max -x subject to x <= -1, x >= 0
  ExactLp infeasible({Rational(-1)});
  const Rational one[] = {1};
  infeasible.add_row(one, -1);
  CHECK(infeasible.solve() == LpStatus::infeasible);
}

TEST_CASE("pairing") {
  CHECK(pairing(FinVec::basis(1), FinVec::basis(1)) == 1);
  CHECK(pairing(FinVec::basis(2), FinVec::basis(1)) == 0);
  CHECK(pairing(v({{1, 2}, {3, 1}}), v({{1, 1}, {3, 1}})) == 3);
}

TEST_CASE("dual norm examples") {
  for (const auto rule : kRules) {
    CAPTURE(rule.name());
    CHECK(dual_norm(FinVec::basis(1), rule).value() == 1);
    CHECK(dual_norm(FinVec::indicator(4, 6), rule).value() == 2);
    CHECK(dual_norm(FinVec{}, rule).value() == 0);
    CHECK(dual_norm_exact_small(FinVec::basis(1), rule) == 1);
    CHECK(dual_norm_exact_small(FinVec::indicator(2, 3), rule) == 2);
  }
  for (Index n = 1; n <= 12; ++n) CHECK(dual_norm(FinVec::basis(n, -1)).value() == 1);
  const DualNormResult r = dual_norm_certified(FinVec::indicator(4, 6));
  CHECK(tsirelson_norm(r.norming_point) == 1);
  CHECK(pairing(FinVec::indicator(4, 6), r.norming_point) == 2);
}

TEST_CASE("window bound: the rule decides the first coordinate") {
  for (Index n = 2; n <= 6; ++n) {
    CHECK(dual_norm(FinVec::indicator(n, 2 * n), Admissibility::schreier_plus_one()).value() == 2);
    CHECK(dual_norm(FinVec::indicator(n, 2 * n), Admissibility::schreier()).value() == 2 + Rational(2) / n);
    CHECK(dual_norm(FinVec::indicator(n + 1, 2 * n), Admissibility::schreier()).value() == 2);
  }
}

TEST_CASE("window bound on the +-1 pool at n = 3 (exhaustive)") {
  Rational worst = 0;
  for (const auto& a : testsupport::ternary_vectors(4)) {
    if (a.is_zero()) continue;
    const FinVec y = shift_support(a, a.min_index() + 2);
    if (y.max_index() > 6) continue;
    worst = std::max(worst, Rational(dual_norm(y).value() / y.sup_norm()));
  }
  CHECK(worst == 2);
}

TEST_CASE("certificates verify independently") {
  testsupport::Rng rng(41);
  for (const auto rule : kRules) {
    for (int trial = 0; trial < 40; ++trial) {
      const FinVec y = rng.sparse(10, 7);
      verify_certificate(y, dual_norm_certified(y, rule), rule);
    }
  }
}

TEST_CASE("cutting plane agrees with the enumeration route") {
  testsupport::Rng rng(43);
  for (const auto rule : kRules) {
    for (int trial = 0; trial < 60; ++trial) {
      const Index lo = 1 + rng.below(5);
      const FinVec y = rng.vector_on(lo, lo + 1 + rng.below(7));
      CAPTURE(to_string(y));
      CHECK(dual_norm(y, rule).value() == dual_norm_exact_small(y, rule));
    }
  }
  CHECK_THROWS_AS(dual_norm_exact_small(FinVec::indicator(1, 9)), std::length_error);
}

TEST_CASE("maximal tree functionals are norming and pairwise incomparable") {
  testsupport::Rng rng(71);
  for (const auto rule : kRules) {
    const auto fs = maximal_tree_functionals(IndexInterval(2, 6), rule);
    CHECK_FALSE(fs.empty());
    for (int trial = 0; trial < 20; ++trial) {
      const FinVec x = rng.vector_on(2, 6).abs();
      const Rational nx = testsupport::brute_tsirelson(x, rule);
      for (const auto& f : fs) CHECK(pairing(f, x) <= nx);
    }
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        if (f == g) continue;
        bool ge = true;
        for (Index i = 2; i <= 6; ++i) ge = ge && f.coeff(i) >= g.coeff(i);
        CHECK_FALSE(ge);
      }
    }
  }
}

TEST_CASE("duality and unconditionality") {
  testsupport::Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const FinVec y = rng.sparse(10, 6), x = rng.sparse(10, 6);
    const Rational ny = dual_norm(y).upper;
    CHECK(abs_value(pairing(y, x)) <= ny * tsirelson_norm(x));
    CHECK(dual_norm(y.abs()).value() == ny);
    CHECK(dual_norm(-y).value() == ny);
    CHECK(y.sup_norm() <= ny);
    CHECK(ny <= y.l1_norm());
  }
}

TEST_CASE("moving the support to the left never lowers the dual norm") {
  testsupport::Rng rng(53);
  for (const auto rule : kRules) {
    for (int trial = 0; trial < 40; ++trial) {
      const FinVec y = rng.sparse(11, 6);
      CHECK(dual_norm(shift_support(y, 1), rule).value() >= dual_norm(y, rule).value());
      if (y.min_index() > 1) {
        CHECK(dual_norm(shift_support(y, y.min_index() - 1), rule).value() >= dual_norm(y, rule).value());
      }
    }
  }
}

TEST_CASE("partition domination, shifted and unshifted blocks") {
  testsupport::Rng rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const FinVec y = rng.sparse(10, 7);
    std::vector<Index> cuts{0};
    for (Index c = 1; c < y.max_index(); ++c) {
      if (rng.below(2) == 0) cuts.push_back(c);
    }
    cuts.push_back(y.max_index());
    std::vector<std::pair<Index, Rational>> unshifted, shifted;
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      const FinVec block = restrict(y, IndexInterval(cuts[j] + 1, cuts[j + 1]));
      if (block.is_zero()) continue;
      unshifted.emplace_back(j + 1, dual_norm(block).value());
      shifted.emplace_back(j + 1, dual_norm(shift_support(block, 1)).value());
    }
    const Rational lhs = dual_norm(y).value();
    const Rational rhs_unshifted = dual_norm(v(unshifted)).value();
    CHECK(lhs <= rhs_unshifted);
    CHECK(rhs_unshifted <= dual_norm(v(shifted)).value());
  }
}

TEST_CASE("the cutting plane with an l1 oracle reproduces the sup norm") {
  testsupport::Rng rng(61);
  const L1Engine l1;
  for (int trial = 0; trial < 50; ++trial) {
    const FinVec y = rng.sparse(12, 8);
    const DualNormResult r = dual_norm_cutting_plane(y, l1);
    CHECK(r.bounds.value() == y.sup_norm());
  }
  const LinfEngine linf;
  const FinVec y = v({{1, 1}, {3, -2}, {4, Rational(1, 2)}});
  CHECK(dual_norm_cutting_plane(y, linf).bounds.value() == y.l1_norm());
}

TEST_CASE("dual engine flags, cache and zero deletion") {
  const DualTsirelsonEngine ts;
  CHECK(ts.flags().one_unconditional);
  CHECK(ts.flags().zero_deletion_nondecreasing);
  const FinVec y = v({{2, 1}, {3, -1}});
  CHECK(ts.eval(y).value() == ts.eval(y.abs()).value());
  CHECK(ts.cache_size() == 1);
  const DualTsirelsonEngine copy = ts;
  copy.eval(FinVec::basis(4));
  CHECK(ts.cache_size() == 2);
  testsupport::Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const FinVec x = rng.sparse(9, 6);
    for (Index z = 1; z < x.max_index(); ++z) {
      if (x.coeff(z) != 0) continue;
      std::vector<std::pair<Index, Rational>> left;
      for (const auto& e : x.entries()) left.emplace_back(e.index > z ? e.index - 1 : e.index, e.coeff);
      CHECK(ts.eval(v(left)).value() >= ts.eval(x).value());
    }
  }
}
