#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tsirelson_lab/rational.hpp"

namespace tsirelson_lab {

/// 1-based basis index.
using Index = std::size_t;

struct Entry {
  Index index;
  Rational coeff;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Closed interval [lo, hi] of basis indices, lo <= hi.
class IndexInterval {
 public:
  IndexInterval(Index lo, Index hi);

  Index lo() const { return lo_; }
  Index hi() const { return hi_; }
  std::size_t length() const { return hi_ - lo_ + 1; }
  bool contains(Index i) const { return lo_ <= i && i <= hi_; }

  friend bool operator==(const IndexInterval&, const IndexInterval&) = default;

 private:
  Index lo_;
  Index hi_;
};

/// Finitely supported vector with exact coefficients. Entries are kept
/// sorted by index and never store a zero coefficient, so equality is
/// structural.
class FinVec {
 public:
  FinVec() = default;

  /// Accepts pairs in any order; zero coefficients are dropped. Throws
  /// std::invalid_argument on index 0 or a repeated index.
  static FinVec from_pairs(std::vector<std::pair<Index, Rational>> pairs);
  static FinVec basis(Index i, const Rational& coeff = 1);
  /// Vector whose coordinate `first + k` is values[k]; zeros are skipped.
  static FinVec from_dense(std::span<const Rational> values, Index first = 1);
  /// Sum of e_j over j in [lo, hi].
  static FinVec indicator(Index lo, Index hi);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  Rational coeff(Index i) const;
  std::vector<Index> support() const;
  /// Smallest / largest support index; the vector must be nonzero.
  Index min_index() const;
  Index max_index() const;

  Rational sup_norm() const;
  Rational l1_norm() const;
  FinVec abs() const;

  FinVec operator-() const;
  friend FinVec operator+(const FinVec& a, const FinVec& b);
  friend FinVec operator-(const FinVec& a, const FinVec& b);
  friend FinVec operator*(const Rational& s, const FinVec& a);
  friend bool operator==(const FinVec&, const FinVec&) = default;

 private:
  std::vector<Entry> entries_;
};

/// x restricted to the indices of `window`.
FinVec restrict(const FinVec& x, const IndexInterval& window);

/// Relabels the k-th support index of x (k = 1, 2, ...) as target_start + k - 1.
FinVec shift_support(const FinVec& x, Index target_start);

/// Sequence that agrees with `head` on 1..s and equals `tail` beyond s,
/// where s = head.size(). Models an element of the bidual through its
/// coordinate sequence.
class EventuallyConstantSeq {
 public:
  EventuallyConstantSeq() = default;
  EventuallyConstantSeq(std::vector<Rational> head, Rational tail);

  static EventuallyConstantSeq embed(const FinVec& x);

  const std::vector<Rational>& head() const { return head_; }
  const Rational& tail_value() const { return tail_; }
  std::size_t stabilization_index() const { return head_.size(); }
  Rational coeff(Index j) const;
  /// sum_{j <= n} x_j e_j
  FinVec partial_sum(std::size_t n) const;
  /// Same sequence with the shortest head.
  EventuallyConstantSeq canonical() const;

  friend EventuallyConstantSeq operator+(const EventuallyConstantSeq& a,
                                         const EventuallyConstantSeq& b);
  friend EventuallyConstantSeq operator*(const Rational& s, const EventuallyConstantSeq& a);
  /// Compares the sequences, not their representations.
  friend bool operator==(const EventuallyConstantSeq& a, const EventuallyConstantSeq& b);

 private:
  std::vector<Rational> head_;
  Rational tail_ = 0;
};

// JSON text forms. A FinVec is {"entries": [[index, "num/den"], ...]};
// vector_from_json also accepts the bare entry array.
nlohmann::json to_json(const FinVec& x);
FinVec vector_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EventuallyConstantSeq& x);

std::string to_string(const FinVec& x);

}  // namespace tsirelson_lab
