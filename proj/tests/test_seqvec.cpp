#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "support.hpp"
#include "tsirelson_lab/dualnorm.hpp"
#include "tsirelson_lab/jamesify.hpp"
#include "tsirelson_lab/lp_norm.hpp"

using namespace tsirelson_lab;

namespace {
FinVec v(std::vector<std::pair<Index, Rational>> p) { return FinVec::from_pairs(std::move(p)); }
}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("FinVec construction keeps a canonical form") {
  const FinVec x = v({{3, 2}, {1, -1}, {2, 0}});
  CHECK(x.size() == 2);
  CHECK(x.support() == std::vector<Index>{1, 3});
  CHECK(x.coeff(2) == 0);
  CHECK(x == v({{1, -1}, {3, 2}}));
  CHECK_THROWS_AS(v({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(v({{2, 1}, {2, 3}}), std::invalid_argument);
  CHECK(FinVec::indicator(2, 4) == v({{2, 1}, {3, 1}, {4, 1}}));
  CHECK((x - x).is_zero());
  CHECK(x.sup_norm() == 2);
  CHECK(x.l1_norm() == 3);
}

TEST_CASE("restrict") {
  CHECK(restrict(FinVec::indicator(1, 3), IndexInterval(2, 3)) == FinVec::indicator(2, 3));
  CHECK(restrict(FinVec::indicator(1, 3), IndexInterval(5, 9)).is_zero());
  CHECK(restrict(v({{4, 1}, {5, 2}, {6, 3}}), IndexInterval(5, 5)) == FinVec::basis(5, 2));
  CHECK_THROWS_AS(IndexInterval(3, 2), std::invalid_argument);
}

TEST_CASE("shift_support") {
  CHECK(shift_support(v({{4, 1}, {6, 1}}), 1) == FinVec::indicator(1, 2));
  CHECK(shift_support(v({{4, 1}, {6, 5}}), 4) == v({{4, 1}, {5, 5}}));
  CHECK(shift_support(FinVec::basis(2, 3), 7) == FinVec::basis(7, 3));
}

TEST_CASE("restrict is idempotent and contractive for every unconditional engine") {
  testsupport::Rng rng(11);
  const L1Engine l1;
  const LinfEngine linf;
  const TsirelsonEngine t;
  const DualTsirelsonEngine ts;
  const std::vector<const NormEngine*> engines{&l1, &linf, &t, &ts};
  for (int trial = 0; trial < 40; ++trial) {
    const FinVec x = rng.sparse(9, 6);
    const Index lo = 1 + rng.below(9);
    const IndexInterval e(lo, lo + rng.below(4));
    const FinVec r = restrict(x, e);
    CHECK(restrict(r, e) == r);
    for (const auto* eng : engines) CHECK(eng->eval(r).upper <= eng->eval(x).lower);
  }
}

TEST_CASE("lp_norm examples and bracket quality") {
  CHECK(lp_norm(FinVec::indicator(1, 2), LpExponent::finite(1)).lo == 2);
  CHECK(lp_norm(FinVec::basis(5, 3), LpExponent::infinity()).hi == 3);
  const RealInterval two = lp_norm(FinVec::indicator(1, 4), LpExponent::finite(2));
  CHECK(two.lo <= 2);
  CHECK(two.hi >= 2);
  const RealInterval r = lp_norm(FinVec::indicator(1, 2), LpExponent::finite(Rational(3, 2)));
  // 2^(2/3)
  CHECK(r.lo * r.lo * r.lo <= 4);
  CHECK(r.hi * r.hi * r.hi >= 4);
  CHECK(r.width() < Rational(mpz_class(1), mpz_class("1000000000000")));
  CHECK_THROWS_AS(LpExponent::finite(Rational(1, 2)), std::invalid_argument);
  CHECK(lp_power_sum(v({{1, 1}, {2, -2}}), 2) == 5);
}

TEST_CASE("lp_norm satisfies the norm axioms on random triples") {
  testsupport::Rng rng(5);
  const std::vector<LpExponent> qs{LpExponent::finite(1), LpExponent::finite(2), LpExponent::finite(Rational(5, 2)),
                                   LpExponent::infinity()};
  for (int trial = 0; trial < 60; ++trial) {
    const FinVec x = rng.sparse(8, 5), y = rng.sparse(8, 5);
    const Rational s = rng.coeff();
    for (const auto& q : qs) {
      const RealInterval nx = lp_norm(x, q), ny = lp_norm(y, q), nxy = lp_norm(x + y, q), nsx = lp_norm(s * x, q);
      CHECK(nxy.lo <= nx.hi + ny.hi);
      CHECK(nsx.lo <= abs_value(s) * nx.hi);
      CHECK(nsx.hi >= abs_value(s) * nx.lo);
      CHECK(nx.lo > 0);
    }
  }
  CHECK(lp_norm(FinVec{}, LpExponent::finite(Rational(7, 3))).hi == 0);
}

TEST_CASE("JSON round trip and diagnostics") {
  const FinVec x = v({{2, Rational(-1, 3)}, {5, 4}});
  CHECK(vector_from_json(to_json(x)) == x);
  CHECK(vector_from_json(nlohmann::json::parse(R"([[2,"-1/3"],[5,"4"]])")) == x);
  try {
    vector_from_json(nlohmann::json::parse(R"([[1,"1"],[0,"2"]])"));
    FAIL("index 0 accepted");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("entry 1") != std::string::npos);
  }
  CHECK_THROWS_AS(vector_from_json(nlohmann::json::parse(R"([[1,"a"]])")), std::invalid_argument);
  CHECK_THROWS_AS(vector_from_json(nlohmann::json::parse(R"({"x": 1})")), std::invalid_argument);
}

TEST_CASE("eventually constant sequences") {
  const EventuallyConstantSeq x({Rational(1), Rational(2), Rational(2)}, 2);
  CHECK(x.canonical().stabilization_index() == 1);
  CHECK(x == x.canonical());
  CHECK(x.coeff(10) == 2);
  CHECK(x.partial_sum(3) == v({{1, 1}, {2, 2}, {3, 2}}));
  const EventuallyConstantSeq e = EventuallyConstantSeq::embed(FinVec::basis(3, 5));
  CHECK(e.tail_value() == 0);
  CHECK(e.coeff(3) == 5);
  CHECK((x + e).coeff(3) == 7);
  CHECK((Rational(2) * x).tail_value() == 4);
}
