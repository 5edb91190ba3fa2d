#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tsirelson_lab/rational.hpp"

namespace tsirelson_lab {

enum class LpStatus { optimal, unbounded, infeasible };

/// Dense exact-rational simplex for
///
///   maximize c.x  subject to  A x <= b,  x >= 0.
///
/// Rows can be appended after a solve; the next solve() then restarts from
/// the previous basis (dual simplex while some basic value is negative,
/// primal simplex afterwards). Both phases use Bland's smallest-index rule,
/// so there is no cycling. A start that is neither primal nor dual feasible
/// is rejected: every problem in this library has b >= 0 or c <= 0.
class ExactLp {
 public:
  explicit ExactLp(std::vector<Rational> objective);

  std::size_t num_vars() const { return n_; }
  std::size_t num_rows() const { return rows_.size(); }

  /// Appends a.x <= b and returns its row id.
  std::size_t add_row(std::span<const Rational> a, const Rational& b);

  LpStatus solve();

  // Valid after solve() returned optimal.
  Rational objective_value() const;
  std::vector<Rational> primal() const;
  /// Optimal multipliers u >= 0 with A^T u >= c and b.u = objective_value().
  std::vector<Rational> dual() const;
  std::size_t pivots() const { return pivots_; }

 private:
  void pivot(std::size_t row, std::size_t col);

  std::size_t n_;
  std::vector<Rational> objective_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;  // c_j - z_j
  std::size_t pivots_ = 0;
};

}  // namespace tsirelson_lab
