#pragma once

#include <cstdint>
#include <vector>

#include "tsirelson_lab/norm_engine.hpp"
#include "tsirelson_lab/seqvec.hpp"

namespace tsirelson_lab {

/// Blocks u_1, u_2, ... with supp(u_j) inside [k_j + 1, k_{j+1}],
/// k_1 = 0 < k_2 < ... . The boundary list has one more entry than there
/// are blocks.
class BlockSequence {
 public:
  BlockSequence() : boundaries_{0} {}
  /// Throws std::invalid_argument when a block is zero, leaves its window,
  /// or the boundaries are not strictly increasing from 0.
  BlockSequence(std::vector<FinVec> blocks, std::vector<Index> boundaries, bool normalized = false);
  /// Tightest boundaries: k_{j+1} = max supp(u_j).
  static BlockSequence from_blocks(std::vector<FinVec> blocks, bool normalized = false);
  /// e_1, ..., e_count.
  static BlockSequence basis(std::size_t count);

  const std::vector<FinVec>& blocks() const { return blocks_; }
  const std::vector<Index>& boundaries() const { return boundaries_; }
  std::size_t size() const { return blocks_.size(); }
  const FinVec& operator[](std::size_t j) const { return blocks_[j]; }
  bool normalized() const { return normalized_; }
  /// Largest boundary, hence an upper bound on every block index.
  Index span_end() const { return boundaries_.back(); }

  /// Empty when every invariant holds (including engine.eval(u_j) == 1 when
  /// flagged normalized), otherwise a description of the first violation.
  std::string invariant_violation(const NormEngine& engine) const;

  friend bool operator==(const BlockSequence&, const BlockSequence&) = default;

 private:
  std::vector<FinVec> blocks_;
  std::vector<Index> boundaries_;
  bool normalized_ = false;
};

/// u_j / ||u_j||. Throws std::invalid_argument on a zero block or an inexact
/// engine norm.
BlockSequence normalize(const BlockSequence& u, const NormEngine& engine);

/// {1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3}
std::vector<Rational> default_coefficient_pool();

/// `count` normalized blocks in consecutive windows of width 1..max_block_width.
/// Inside its window a block is a random nonzero combination drawn from
/// `pool`; about a third of the blocks are pushed to the right end of their
/// window. Deterministic in the arguments. Tractable sizes: total span <= 12
/// for the T_J* engine, far larger for l1 and l_inf.
BlockSequence random_block_sequence(std::uint64_t seed, std::size_t count, std::size_t max_block_width,
                                    const std::vector<Rational>& pool, const NormEngine& engine);

/// sum_j a_j u_j. Throws std::invalid_argument when supp(a) leaves [1, size].
FinVec combine(const BlockSequence& u, const FinVec& a);

}  // namespace tsirelson_lab
