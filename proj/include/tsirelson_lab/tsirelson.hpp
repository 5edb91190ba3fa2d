#pragma once

// Exact Tsirelson norm on finitely supported vectors.
//
// The norm is the fixed point of
//
//   ||x||_T = max( max_i |x_i| , 1/2 * max sum_{j=1..k} ||E_j x||_T )
//
// where the inner max runs over admissible families E_1 < E_2 < ... < E_k.
// Admissibility is the rule k <= min E_1 + slack (slack 0 is the classical
// Schreier rule, see Admissibility).
//
// Why intervals suffice. The norm is 1-unconditional, so restricting x to a
// larger set never lowers ||E x||_T. Replacing each E_j by the interval
// [min E_j, max E_j] keeps the family ordered, keeps min E_1 (hence
// admissibility) and can only raise every term, so the maximum over interval
// families equals the maximum over arbitrary finite sets. For the same
// reason each E_j may be shrunk to the hull of supp(x) inside it, which is
// what the evaluator does: it works on support ranks instead of raw indices.
//
// Why k = 1 is skipped. A one-part family contributes ||E_1 x||_T / 2 with
// E_1 a subset of the current window, which is at most half of a value
// already dominated by the window's own norm.
//
// Evaluation is a dynamic program over support-rank intervals [a, b]:
//   v(a, b)    = norm of x restricted to ranks a..b,
//   tile(m, a, b) = best sum of v over m consecutive rank blocks covering a..b.
// For k parts the first block starts at the first rank whose index is at
// least k - slack; starting earlier than required never hurts because v is
// monotone under enlarging the window. All parts of a k >= 2 family are
// strictly shorter than the window, so processing windows by length is
// well-founded.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tsirelson_lab/norm_engine.hpp"
#include "tsirelson_lab/rational.hpp"
#include "tsirelson_lab/seqvec.hpp"

namespace tsirelson_lab {

/// Which families E_1 < ... < E_k count as admissible: k <= min E_1 + slack.
class Admissibility {
 public:
  /// k <= min E_1.
  static constexpr Admissibility schreier() { return Admissibility(0); }
  /// k <= min E_1 + 1. Library default: with it the window bound
  /// ||sum_{j=n}^{2n} a_j t_j||_{T*} <= 2 max |a_j| holds on all n+1
  /// coordinates of [n, 2n]; under schreier() it only holds on [n+1, 2n].
  static constexpr Admissibility schreier_plus_one() { return Admissibility(1); }
  static constexpr Admissibility library_default() { return schreier_plus_one(); }

  /// "schreier" or "schreier+1"; throws std::invalid_argument otherwise.
  static Admissibility from_name(std::string_view name);
  std::string name() const;

  unsigned slack() const { return slack_; }
  bool admits(std::size_t k, Index first_min) const { return k <= first_min + slack_; }
  /// Smallest min E_1 allowed for a k-part family.
  Index min_first_index(std::size_t k) const { return k > slack_ + 1 ? k - slack_ : 1; }

  friend bool operator==(Admissibility, Admissibility) = default;

 private:
  constexpr explicit Admissibility(unsigned slack) : slack_(slack) {}
  unsigned slack_;
};

/// Ordered, pairwise disjoint intervals E_1 < ... < E_k that satisfy the
/// admissibility rule. The constructor enforces both.
class IntervalPartition {
 public:
  IntervalPartition(std::vector<IndexInterval> parts, Admissibility rule);

  const std::vector<IndexInterval>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }

  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;

 private:
  std::vector<IndexInterval> parts_;
};

/// Norming functional in tree form: a leaf is +-e_i^*, a node is
/// 1/2 * (sum of its children) with one child per part of an admissible
/// partition, each child supported inside its part.
class EvaluationTree {
 public:
  static EvaluationTree leaf(Index index, int sign);
  static EvaluationTree node(IntervalPartition partition, std::vector<EvaluationTree> children);

  bool is_leaf() const { return !partition_.has_value(); }
  Index leaf_index() const { return index_; }
  int leaf_sign() const { return sign_; }
  const IntervalPartition& partition() const { return *partition_; }
  const std::vector<EvaluationTree>& children() const { return children_; }

  /// The functional as a coefficient vector.
  FinVec flatten() const;
  std::size_t depth() const;

  nlohmann::json to_json() const;
  /// Rebuilds and re-validates a tree under `rule`; throws
  /// std::invalid_argument when the JSON does not describe a valid tree.
  static EvaluationTree from_json(const nlohmann::json& j, Admissibility rule);

 private:
  Index index_ = 0;
  int sign_ = 1;
  std::optional<IntervalPartition> partition_;
  std::vector<EvaluationTree> children_;
};

/// Memo table of the dynamic program for one vector. Immutable once built.
class TsirelsonEvaluator {
 public:
  TsirelsonEvaluator(const FinVec& x, Admissibility rule = Admissibility::library_default());

  Rational norm() const;
  /// ||restrict(x, [lo, hi])||_T for any interval.
  Rational restricted_norm(const IndexInterval& window) const;
  /// Tree whose flattened functional f has f(x) = ||x||_T. x must be nonzero.
  EvaluationTree maximizer() const;

 private:
  struct Choice {
    std::size_t parts = 0;   // 0 marks a leaf
    std::size_t first = 0;   // leaf rank, or first rank of the tiling
  };

  const Rational& v(std::size_t a, std::size_t b) const { return value_[a * n_ + b]; }
  std::size_t tile_at(std::size_t m, std::size_t a, std::size_t b) const { return (m * n_ + a) * n_ + b; }
  EvaluationTree build(std::size_t a, std::size_t b) const;

  FinVec x_;
  Admissibility rule_;
  std::size_t n_ = 0;
  std::vector<Index> idx_;
  std::vector<Rational> value_;
  std::vector<Choice> choice_;
  std::vector<Rational> tile_;
  std::vector<std::size_t> tile_split_;
};

Rational tsirelson_norm(const FinVec& x, Admissibility rule = Admissibility::library_default());

/// Throws std::invalid_argument for the zero vector.
EvaluationTree tsirelson_maximizer(const FinVec& x, Admissibility rule = Admissibility::library_default());

/// Streams every admissible family of exactly k nonempty ordered disjoint
/// subintervals of `window` (gaps allowed), in lexicographic order of the
/// endpoint list. Requires k >= 2.
void for_each_admissible_partition(const IndexInterval& window, std::size_t k, Admissibility rule,
                                   const std::function<void(const IntervalPartition&)>& visit);
std::vector<IntervalPartition> admissible_partitions(const IndexInterval& window, std::size_t k,
                                                     Admissibility rule = Admissibility::library_default());

class TsirelsonEngine final : public NormEngine, public NormingOracle {
 public:
  explicit TsirelsonEngine(Admissibility rule = Admissibility::library_default()) : rule_(rule) {}

  Admissibility rule() const { return rule_; }
  std::string name() const override { return "T"; }
  // Moving support to the right can only enlarge the admissible families, so
  // deleting a zero coordinate may lower the norm.
  EngineFlags flags() const override { return {true, true, true, false}; }
  NormBounds eval(const FinVec& x) const override { return NormBounds::exact(norm(x)); }
  Rational norm(const FinVec& x) const override { return tsirelson_norm(x, rule_); }
  FinVec norming_functional(const FinVec& x) const override;

 private:
  Admissibility rule_;
};

}  // namespace tsirelson_lab
