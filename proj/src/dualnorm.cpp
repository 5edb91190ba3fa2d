#include "tsirelson_lab/dualnorm.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "tsirelson_lab/exact_lp.hpp"

namespace tsirelson_lab {
namespace {

std::vector<Rational> row_on(const FinVec& f, const std::vector<Index>& positions) {
  std::vector<Rational> row;
  row.reserve(positions.size());
  for (Index p : positions) row.push_back(f.coeff(p));
  return row;
}

// Functional with coefficients 2^{-depth[i]}; kAbsent marks a zero.
using DepthVector = std::vector<std::uint8_t>;
constexpr std::uint8_t kAbsent = 0xff;

bool dominates(const DepthVector& f, const DepthVector& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g[i] == kAbsent) continue;
    if (f[i] == kAbsent || f[i] > g[i]) return false;
  }
  return true;
}

std::vector<DepthVector> maximal_only(std::set<DepthVector> candidates) {
  std::vector<DepthVector> all(candidates.begin(), candidates.end());
  std::vector<DepthVector> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
      dominated = j != i && dominates(all[j], all[i]) && (all[j] != all[i]);
    }
    if (!dominated) kept.push_back(all[i]);
  }
  return kept;
}

class TreeFunctionalEnumerator {
 public:
  TreeFunctionalEnumerator(const IndexInterval& hull, Admissibility rule) : hull_(hull), rule_(rule) {}

  const std::vector<DepthVector>& functionals(Index lo, Index hi) {
    const auto key = std::make_pair(lo, hi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<DepthVector> found;
    for (Index i = lo; i <= hi; ++i) {
      DepthVector leaf(hull_.length(), kAbsent);
      leaf[i - hull_.lo()] = 0;
      found.insert(std::move(leaf));
    }
    const IndexInterval window(lo, hi);
    for (std::size_t k = 2; k <= window.length(); ++k) {
      for_each_admissible_partition(window, k, rule_, [&](const IntervalPartition& p) {
        std::vector<const std::vector<DepthVector>*> choices;
        for (const auto& part : p.parts()) choices.push_back(&functionals(part.lo(), part.hi()));
        DepthVector acc(hull_.length(), kAbsent);
        combine(choices, 0, acc, found);
      });
    }
    return memo_.emplace(key, maximal_only(std::move(found))).first->second;
  }

 private:
  void combine(const std::vector<const std::vector<DepthVector>*>& choices, std::size_t j, DepthVector& acc,
               std::set<DepthVector>& out) {
    if (j == choices.size()) {
      out.insert(acc);
      return;
    }
    for (const auto& f : *choices[j]) {
      DepthVector next = acc;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != kAbsent) next[i] = static_cast<std::uint8_t>(f[i] + 1);
      }
      combine(choices, j + 1, next, out);
    }
  }

  IndexInterval hull_;
  Admissibility rule_;
  std::map<std::pair<Index, Index>, std::vector<DepthVector>> memo_;
};

FinVec to_functional(const DepthVector& d, Index first) {
  std::vector<std::pair<Index, Rational>> pairs;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == kAbsent) continue;
    Rational c = 1;
    mpq_div_2exp(c.get_mpq_t(), c.get_mpq_t(), d[i]);
    pairs.emplace_back(first + i, c);
  }
  return FinVec::from_pairs(std::move(pairs));
}

std::string cache_key(const FinVec& x) {
  std::string key;
  for (const auto& e : x.entries()) {
    key += std::to_string(e.index);
    key += ':';
    key += abs_value(e.coeff).get_str();
    key += ';';
  }
  return key;
}

}  // namespace

DualNormResult dual_norm_cutting_plane(const FinVec& y, const NormingOracle& oracle, std::size_t max_iterations) {
  DualNormResult result{NormBounds::exact(0), {}, {}, 0};
  if (y.is_zero()) return result;

  const std::vector<Index> positions = y.support();
  std::vector<Rational> objective;
  for (const auto& e : y.entries()) objective.push_back(abs_value(e.coeff));
  ExactLp lp(objective);
  std::vector<FinVec> row_functionals;
  std::set<std::vector<Rational>> seen;
  for (Index p : positions) {
    const FinVec leaf = FinVec::basis(p);
    auto row = row_on(leaf, positions);
    lp.add_row(row, 1);
    seen.insert(std::move(row));
    row_functionals.push_back(leaf);
  }

  Rational lower = 0;
  FinVec best_point;
  for (;;) {
    ++result.iterations;
    if (lp.solve() != LpStatus::optimal) throw std::logic_error("cutting-plane LP did not reach an optimum");
    const Rational upper = lp.objective_value();
    const auto values = lp.primal();
    std::vector<std::pair<Index, Rational>> pairs;
    for (std::size_t i = 0; i < positions.size(); ++i) pairs.emplace_back(positions[i], values[i]);
    const FinVec point = FinVec::from_pairs(std::move(pairs));
    const Rational point_norm = oracle.norm(point);

    if (point_norm <= 1) {
      lower = upper;
      best_point = point;
    } else {
      Rational scaled = upper / point_norm;
      if (scaled > lower) {
        lower = std::move(scaled);
        best_point = Rational(1) / point_norm * point;
      }
    }

    if (point_norm <= 1 || result.iterations >= max_iterations) {
      result.bounds = {lower, upper};
      const auto weights = lp.dual();
      for (std::size_t r = 0; r < weights.size(); ++r) {
        if (weights[r] != 0) result.multipliers.push_back({weights[r], row_functionals[r]});
      }
      break;
    }

    const FinVec f = oracle.norming_functional(point);
    auto row = row_on(f, positions);
    if (!seen.insert(row).second) throw std::logic_error("separation oracle repeated a constraint");
    lp.add_row(row, 1);
    row_functionals.push_back(f);
  }

  // Carry the signs of y onto the norming point so that <y, x> = lower.
  std::vector<std::pair<Index, Rational>> signed_point;
  for (const auto& e : best_point.entries()) {
    signed_point.emplace_back(e.index, y.coeff(e.index) < 0 ? Rational(-e.coeff) : e.coeff);
  }
  result.norming_point = FinVec::from_pairs(std::move(signed_point));
  return result;
}

DualNormResult dual_norm_certified(const FinVec& y, Admissibility rule) {
  return dual_norm_cutting_plane(y, TsirelsonEngine(rule));
}

NormBounds dual_norm(const FinVec& y, Admissibility rule) { return dual_norm_certified(y, rule).bounds; }

std::vector<FinVec> maximal_tree_functionals(const IndexInterval& hull, Admissibility rule) {
  if (hull.length() > kExactSmallMaxHull) {
    throw std::length_error("support hull of length " + std::to_string(hull.length()) + " exceeds " +
                            std::to_string(kExactSmallMaxHull));
  }
  TreeFunctionalEnumerator enumerator(hull, rule);
  std::vector<FinVec> out;
  for (const auto& d : enumerator.functionals(hull.lo(), hull.hi())) out.push_back(to_functional(d, hull.lo()));
  return out;
}

Rational dual_norm_exact_small(const FinVec& y, Admissibility rule) {
  if (y.is_zero()) return 0;
  const IndexInterval hull(y.min_index(), y.max_index());
  const auto all = maximal_tree_functionals(hull, rule);
  const std::vector<Index> positions = y.support();

  // Restrict to supp(y) and drop what became dominated or duplicated.
  std::set<std::vector<Rational>> restricted_set;
  for (const auto& f : all) {
    auto row = row_on(f, positions);
    if (std::any_of(row.begin(), row.end(), [](const Rational& c) { return c != 0; })) restricted_set.insert(std::move(row));
  }
  std::vector<std::vector<Rational>> columns;
  for (const auto& f : restricted_set) {
    bool dominated = false;
    for (const auto& g : restricted_set) {
      if (&f == &g || f == g) continue;
      bool ge = true;
      for (std::size_t i = 0; i < f.size() && ge; ++i) ge = g[i] >= f[i];
      if (ge) {
        dominated = true;
        break;
      }
    }
    if (!dominated) columns.push_back(f);
  }

  // maximize -sum w  subject to  -F^T w <= -|y|, w >= 0 (dual simplex start).
  ExactLp lp(std::vector<Rational>(columns.size(), Rational(-1)));
  std::vector<Rational> target;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    std::vector<Rational> row;
    row.reserve(columns.size());
    for (const auto& col : columns) row.push_back(-col[i]);
    target.push_back(abs_value(y.coeff(positions[i])));
    lp.add_row(row, -target.back());
  }
  if (lp.solve() != LpStatus::optimal) throw std::logic_error("covering LP did not reach an optimum");
  const Rational value = -lp.objective_value();

  // Certificate check: the row multipliers form a point x >= 0 with
  // f(x) <= 1 for every maximal functional and <|y|, x> = value.
  const auto x = lp.dual();
  Rational paired = 0;
  for (std::size_t i = 0; i < x.size(); ++i) paired += target[i] * x[i];
  bool feasible = paired == value;
  for (const auto& f : all) {
    Rational s = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) s += f.coeff(positions[i]) * x[i];
    feasible = feasible && s <= 1;
  }
  if (!feasible) throw std::logic_error("exact dual norm failed its optimality certificate");
  return value;
}

DualTsirelsonEngine::DualTsirelsonEngine(Admissibility rule) : rule_(rule), cache_(std::make_shared<Cache>()) {}

NormBounds DualTsirelsonEngine::eval(const FinVec& x) const {
  const std::string key = cache_key(x);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->values.find(key); it != cache_->values.end()) return NormBounds::exact(it->second);
  }
  const NormBounds b = dual_norm(x, rule_);
  if (b.is_exact()) {
    std::lock_guard lock(cache_->mutex);
    cache_->values.emplace(key, b.lower);
  }
  return b;
}

std::size_t DualTsirelsonEngine::cache_size() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->values.size();
}

}  // namespace tsirelson_lab
