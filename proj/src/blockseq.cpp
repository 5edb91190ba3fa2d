#include "tsirelson_lab/blockseq.hpp"

#include <random>
#include <stdexcept>

namespace tsirelson_lab {

BlockSequence::BlockSequence(std::vector<FinVec> blocks, std::vector<Index> boundaries, bool normalized)
    : blocks_(std::move(blocks)), boundaries_(std::move(boundaries)), normalized_(normalized) {
  if (boundaries_.size() != blocks_.size() + 1 || boundaries_.front() != 0) {
    throw std::invalid_argument("boundaries must be k_1 = 0 < ... < k_{n+1} for n blocks");
  }
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (boundaries_[j] >= boundaries_[j + 1]) throw std::invalid_argument("boundaries must increase strictly");
    if (blocks_[j].is_zero()) throw std::invalid_argument("block " + std::to_string(j + 1) + " is zero");
    if (blocks_[j].min_index() <= boundaries_[j] || blocks_[j].max_index() > boundaries_[j + 1]) {
      throw std::invalid_argument("block " + std::to_string(j + 1) + " leaves its window");
    }
  }
}

BlockSequence BlockSequence::from_blocks(std::vector<FinVec> blocks, bool normalized) {
  std::vector<Index> b{0};
  for (const auto& u : blocks) {
    if (u.is_zero()) throw std::invalid_argument("block " + std::to_string(b.size()) + " is zero");
    b.push_back(u.max_index());
  }
  return BlockSequence(std::move(blocks), std::move(b), normalized);
}

BlockSequence BlockSequence::basis(std::size_t count) {
  std::vector<FinVec> blocks;
  for (Index i = 1; i <= count; ++i) blocks.push_back(FinVec::basis(i));
  return from_blocks(std::move(blocks), true);
}

std::string BlockSequence::invariant_violation(const NormEngine& engine) const {
  if (boundaries_.size() != blocks_.size() + 1 || boundaries_.front() != 0) return "boundary count or k_1";
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const std::string tag = "block " + std::to_string(j + 1);
    if (boundaries_[j] >= boundaries_[j + 1]) return tag + ": boundaries not increasing";
    if (blocks_[j].is_zero()) return tag + ": zero";
    if (blocks_[j].min_index() <= boundaries_[j] || blocks_[j].max_index() > boundaries_[j + 1]) {
      return tag + ": outside window";
    }
    if (j > 0 && blocks_[j - 1].max_index() >= blocks_[j].min_index()) return tag + ": overlaps predecessor";
    if (normalized_) {
      const NormBounds b = engine.eval(blocks_[j]);
      if (!b.is_exact() || b.lower != 1) return tag + ": norm is not 1";
    }
  }
  return {};
}

BlockSequence normalize(const BlockSequence& u, const NormEngine& engine) {
  std::vector<FinVec> scaled;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const NormBounds b = engine.eval(u[j]);
    if (!b.is_exact()) throw std::invalid_argument("engine norm of block " + std::to_string(j + 1) + " is not exact");
    if (b.lower == 0) throw std::invalid_argument("block " + std::to_string(j + 1) + " has norm zero");
    scaled.push_back(Rational(1) / b.lower * u[j]);
  }
  return BlockSequence(std::move(scaled), u.boundaries(), true);
}

std::vector<Rational> default_coefficient_pool() {
  return {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(2), Rational(-2), Rational(1, 3), Rational(-1, 3)};
}

BlockSequence random_block_sequence(std::uint64_t seed, std::size_t count, std::size_t max_block_width,
                                    const std::vector<Rational>& pool, const NormEngine& engine) {
  if (count == 0 || max_block_width == 0) throw std::invalid_argument("count and max_block_width must be positive");
  if (pool.empty()) throw std::invalid_argument("coefficient pool is empty");
  for (const auto& c : pool) {
    if (c == 0) throw std::invalid_argument("coefficient pool must not contain 0");
  }
  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<FinVec> blocks;
  std::vector<Index> boundaries{0};
  for (std::size_t j = 0; j < count; ++j) {
    const Index lo = boundaries.back() + 1;
    const std::size_t width = 1 + below(max_block_width);
    const Index hi = lo + width - 1;
    const bool late = below(3) == 0;
    const std::size_t used = late ? 1 + below(width) : width;
    const Index first = late ? hi - used + 1 : lo;
    std::vector<std::pair<Index, Rational>> pairs;
    for (Index i = first; i < first + used; ++i) {
      // Interior zeros are allowed; the first used index always carries a coefficient.
      if (i != first && below(4) == 0) continue;
      pairs.emplace_back(i, pool[below(pool.size())]);
    }
    blocks.push_back(FinVec::from_pairs(std::move(pairs)));
    boundaries.push_back(hi);
  }
  return normalize(BlockSequence(std::move(blocks), std::move(boundaries)), engine);
}

FinVec combine(const BlockSequence& u, const FinVec& a) {
  FinVec out;
  for (const auto& e : a.entries()) {
    if (e.index < 1 || e.index > u.size()) {
      throw std::invalid_argument("coefficient index " + std::to_string(e.index) + " outside 1.." + std::to_string(u.size()));
    }
    out = out + e.coeff * u[e.index - 1];
  }
  return out;
}

}  // namespace tsirelson_lab
