#pragma once

// Seeded generators and brute-force oracles shared by the tests. The oracles
// deliberately avoid the library's algorithms: arbitrary finite sets instead
// of intervals, full selection enumeration instead of run canonicalization.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "tsirelson_lab/blockseq.hpp"
#include "tsirelson_lab/norm_engine.hpp"
#include "tsirelson_lab/seqvec.hpp"
#include "tsirelson_lab/tsirelson.hpp"

namespace testsupport {

using tsirelson_lab::Admissibility;
using tsirelson_lab::FinVec;
using tsirelson_lab::Index;
using tsirelson_lab::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  Rational coeff() {
    static const std::vector<Rational> pool = tsirelson_lab::default_coefficient_pool();
    return pool[below(pool.size())];
  }
  /// Random entries on [lo, hi], roughly a quarter left empty; may be zero
  /// only if allow_zero.
  FinVec vector_on(Index lo, Index hi, bool allow_zero = false) {
    std::vector<std::pair<Index, Rational>> pairs;
    for (Index i = lo; i <= hi; ++i) {
      if (below(4) != 0) pairs.emplace_back(i, coeff());
    }
    if (pairs.empty() && !allow_zero) pairs.emplace_back(lo + below(hi - lo + 1), coeff());
    return FinVec::from_pairs(std::move(pairs));
  }
  /// Nonzero vector with support inside [1, max_index] and at most max_support entries.
  FinVec sparse(Index max_index, std::size_t max_support) {
    std::vector<std::pair<Index, Rational>> pairs;
    const std::size_t want = 1 + below(max_support);
    std::vector<bool> used(max_index + 1, false);
    while (pairs.size() < want) {
      const Index i = 1 + below(max_index);
      if (used[i]) continue;
      used[i] = true;
      pairs.emplace_back(i, coeff());
    }
    return FinVec::from_pairs(std::move(pairs));
  }

 private:
  std::mt19937_64 gen_;
};

/// ||x||_T by recursion over arbitrary subsets of the support (no interval
/// reduction, k = 1 families included). Support size <= 10.
class BruteTsirelson {
 public:
  BruteTsirelson(const FinVec& x, Admissibility rule) : rule_(rule) {
    for (const auto& e : x.entries()) {
      idx_.push_back(e.index);
      mag_.push_back(tsirelson_lab::abs_value(e.coeff));
    }
  }

  Rational norm() { return idx_.empty() ? Rational(0) : of((1u << idx_.size()) - 1); }

 private:
  Rational of(unsigned mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Rational best = 0;
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (mask >> i & 1u) best = std::max(best, mag_[i]);
    }
    // Families E_1 < ... < E_k of nonempty subsets of `mask`: choose their
    // union u, then cut its sorted elements into consecutive groups.
    for (unsigned u = mask; u != 0; u = (u - 1) & mask) {
      std::vector<std::size_t> elems;
      for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (u >> i & 1u) elems.push_back(i);
      }
      const std::size_t cuts = elems.size() - 1;
      for (unsigned c = 0; c < (1u << cuts); ++c) {
        const std::size_t k = 1 + static_cast<std::size_t>(__builtin_popcount(c));
        if (!rule_.admits(k, idx_[elems.front()])) continue;
        if (k == 1 && u == mask) continue;  // ||x|| / 2 can never win
        Rational sum = 0;
        unsigned group = 0;
        for (std::size_t t = 0; t < elems.size(); ++t) {
          group |= 1u << elems[t];
          if (t == cuts || (c >> t & 1u)) {
            sum += of(group);
            group = 0;
          }
        }
        best = std::max(best, Rational(sum / 2));
      }
    }
    memo_.emplace(mask, best);
    return best;
  }

  Admissibility rule_;
  std::vector<Index> idx_;
  std::vector<Rational> mag_;
  std::map<unsigned, Rational> memo_;
};

inline Rational brute_tsirelson(const FinVec& x, Admissibility rule) { return BruteTsirelson(x, rule).norm(); }

/// James norm by enumerating every selection p_1 < ... < p_{2k} inside
/// [1, max supp(a) + 2].
inline Rational brute_james(const FinVec& a, const tsirelson_lab::NormEngine& base) {
  if (a.is_zero()) return 0;
  const Index top = a.max_index() + 2;
  Rational best = 0;
  for (unsigned mask = 1; mask < (1u << top); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<Index> p;
    for (Index i = 1; i <= top; ++i) {
      if (mask >> (i - 1) & 1u) p.push_back(i);
    }
    std::vector<std::pair<Index, Rational>> d;
    for (std::size_t j = 0; j < p.size() / 2; ++j) d.emplace_back(j + 1, a.coeff(p[2 * j]) - a.coeff(p[2 * j + 1]));
    best = std::max(best, base.eval(FinVec::from_pairs(std::move(d))).upper);
  }
  return best;
}

/// All vectors on 1..len with coefficients in {-1, 0, 1}.
inline std::vector<FinVec> ternary_vectors(std::size_t len) {
  std::vector<FinVec> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::pair<Index, Rational>> pairs;
    std::size_t c = code;
    for (Index i = 1; i <= len; ++i, c /= 3) {
      if (c % 3 != 0) pairs.emplace_back(i, c % 3 == 1 ? 1 : -1);
    }
    out.push_back(FinVec::from_pairs(std::move(pairs)));
  }
  return out;
}

}  // namespace testsupport
