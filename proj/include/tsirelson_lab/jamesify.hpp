#pragma once

// James transform of a sequence norm:
//
//   ||a||_J = sup over k and p_1 < p_2 < ... < p_{2k} of
//             || sum_{j=1..k} (a_{p_{2j-1}} - a_{p_{2j}}) t_j ||_base
//
// Over the dual Tsirelson norm this is the Tsirelson*-James norm.
//
// Finite search lemma. Let M = max supp(a) and split 1..M into maximal runs
// of equal coefficients, followed by the zero run M+1, M+2, ... . Suppose the
// base norm never decreases when a zero coordinate is deleted
// (EngineFlags::zero_deletion_nondecreasing). Then
//  * pairs with a zero difference can be dropped;
//  * once they are gone, no pair lies inside one run, so a run contributes
//    at most two consecutive indices, and two only as the end of one pair
//    followed by the start of the next;
//  * the zero run beyond M can only hold the final index (a start there
//    would force a zero pair).
// Moving every chosen index to the first (or second) index of its run keeps
// all coefficient values and the strict order. Hence the sup is a max over
// selections built from at most two indices per run of 1..M and the single
// index M+1 as a final end point, so k <= ceil((M+1)/2).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tsirelson_lab/norm_engine.hpp"
#include "tsirelson_lab/seqvec.hpp"
#include "tsirelson_lab/tsirelson.hpp"

namespace tsirelson_lab {

/// Strictly increasing positive indices p_1 < ... < p_{2k}, k >= 1.
class PairSelection {
 public:
  explicit PairSelection(std::vector<Index> indices);

  const std::vector<Index>& indices() const { return indices_; }
  std::size_t pair_count() const { return indices_.size() / 2; }

  friend bool operator==(const PairSelection&, const PairSelection&) = default;

 private:
  std::vector<Index> indices_;
};

/// sum_j (a_{p_{2j-1}} - a_{p_{2j}}) t_j, zero coordinates dropped.
FinVec difference_vector(const FinVec& a, const PairSelection& p);

struct JamesResult {
  NormBounds value;
  /// Maximizing selection; empty for the zero vector.
  std::optional<PairSelection> selection;
  FinVec difference;
  std::size_t evaluations = 0;
};

class JamesEngine final : public NormEngine {
 public:
  /// Throws std::invalid_argument unless the base is 1-unconditional and
  /// zero-deletion monotone (the finite search lemma needs both).
  explicit JamesEngine(std::shared_ptr<const NormEngine> base);

  /// James transform of the dual Tsirelson norm.
  static JamesEngine tsirelson_james(Admissibility rule = Admissibility::library_default());

  const NormEngine& base() const { return *base_; }
  std::string name() const override { return "J(" + base_->name() + ")"; }
  EngineFlags flags() const override;
  NormBounds eval(const FinVec& a) const override { return evaluate(a).value; }

  /// Norm with its maximizing selection. Branch-and-bound prunes with the
  /// bound ||d||_base <= ||d||_1 when the base has a unit basis; base norms
  /// are memoized per call by |difference| pattern.
  JamesResult evaluate(const FinVec& a) const;

 private:
  std::shared_ptr<const NormEngine> base_;
};

NormBounds james_norm(const FinVec& a, const NormEngine& base);

/// lim_j x_j, the tail value.
Rational alpha_limit(const EventuallyConstantSeq& x);

struct BidualNorm {
  NormBounds value;
  /// n at which the partial-sum norms are attained (and stay constant).
  std::size_t attained_at = 0;
};

/// sup_n || sum_{j<=n} x_j e_j ||_J. The partial-sum norms are nondecreasing,
/// and by the finite search lemma they are constant from n = s + 2 on, where
/// s is the (shortest) stabilization index: from there the run structure of
/// the partial sums no longer changes. The value is taken at s + 2 and the
/// next three partial sums are evaluated to confirm it; a mismatch throws
/// std::logic_error.
BidualNorm bidual_norm(const EventuallyConstantSeq& x, const JamesEngine& engine);

/// U(x) = (-lambda, x_1 - lambda, x_2 - lambda, ...), lambda = alpha_limit(x).
/// The image has tail value 0.
EventuallyConstantSeq u_map(const EventuallyConstantSeq& x);

/// The bidual element with every coordinate equal to 1.
EventuallyConstantSeq x0_double_star();

}  // namespace tsirelson_lab
