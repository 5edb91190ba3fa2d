#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "tsirelson_lab/norm_engine.hpp"
#include "tsirelson_lab/seqvec.hpp"
#include "tsirelson_lab/tsirelson.hpp"

namespace tsirelson_lab {

/// A functional with its LP multiplier in an upper-bound certificate.
struct WeightedFunctional {
  Rational weight;
  FinVec functional;
};

/// Outcome of a cutting-plane dual norm computation, with both halves of
/// the optimality certificate:
///  - norming_point x has primal norm <= 1 and <y, x> = bounds.lower;
///  - the multipliers are nonnegative, each functional is a norming
///    functional of the primal norm, sum_f w_f |f_i| >= |y_i| for every i,
///    and sum_f w_f = bounds.upper.
struct DualNormResult {
  NormBounds bounds;
  FinVec norming_point;
  std::vector<WeightedFunctional> multipliers;
  std::size_t iterations = 0;
};

/// sup{ <y, x> : ||x|| <= 1 } for the primal norm behind `oracle`, which
/// must be 1-unconditional and dominate the sup norm. Keeps a growing set of
/// constraints f(x) <= 1 starting from x_i <= 1, maximizes <|y|, x> over them
/// exactly, and adds the oracle's norming functional of the optimizer while
/// that optimizer has norm > 1. Stops with lower == upper once the optimizer
/// is feasible; if max_iterations is hit first the gap is left open.
DualNormResult dual_norm_cutting_plane(const FinVec& y, const NormingOracle& oracle, std::size_t max_iterations = 100000);

/// ||y||_{T*} with its certificate.
DualNormResult dual_norm_certified(const FinVec& y, Admissibility rule = Admissibility::library_default());

/// ||y||_{T*}.
NormBounds dual_norm(const FinVec& y, Admissibility rule = Admissibility::library_default());

/// Hull length accepted by dual_norm_exact_small.
inline constexpr std::size_t kExactSmallMaxHull = 8;

/// Independent route to ||y||_{T*}: enumerates every norming tree
/// functional on the support hull of y (arbitrary admissible interval
/// families, no dynamic program), keeps the coordinatewise maximal ones,
/// and solves the covering problem
///   min sum_f w_f  subject to  sum_f w_f f >= |y|,  w >= 0
/// exactly. The optimum is cross-checked against its LP dual before it is
/// returned. Throws std::length_error when the hull exceeds kExactSmallMaxHull.
Rational dual_norm_exact_small(const FinVec& y, Admissibility rule = Admissibility::library_default());

/// Coordinatewise-maximal positive norming tree functionals supported in
/// `hull`, as used by dual_norm_exact_small.
std::vector<FinVec> maximal_tree_functionals(const IndexInterval& hull, Admissibility rule = Admissibility::library_default());

/// ||.||_{T*} as a NormEngine. Results are memoized in a shared, write-once
/// cache keyed by the absolute coefficient pattern; the cache never changes
/// an answer, only its cost.
class DualTsirelsonEngine final : public NormEngine {
 public:
  explicit DualTsirelsonEngine(Admissibility rule = Admissibility::library_default());

  Admissibility rule() const { return rule_; }
  std::string name() const override { return "T*"; }
  EngineFlags flags() const override { return {true, true, true, true}; }
  NormBounds eval(const FinVec& x) const override;
  std::size_t cache_size() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, Rational> values;
  };

  Admissibility rule_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace tsirelson_lab
