#include "tsirelson_lab/exact_lp.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace tsirelson_lab {

ExactLp::ExactLp(std::vector<Rational> objective)
    : n_(objective.size()), objective_(objective), reduced_(std::move(objective)) {}

std::size_t ExactLp::add_row(std::span<const Rational> a, const Rational& b) {
  if (a.size() != n_) throw std::invalid_argument("row width does not match the variable count");
  const std::size_t slack = n_ + rows_.size();
  for (auto& r : rows_) r.emplace_back(0);
  reduced_.emplace_back(0);

  std::vector<Rational> row(slack + 1, Rational(0));
  std::copy(a.begin(), a.end(), row.begin());
  row[slack] = 1;
  Rational value = b;
  // Express the new row in the current nonbasic variables.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational factor = row[basis_[r]];
    if (factor == 0) continue;
    const auto& src = rows_[r];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (src[j] != 0) row[j] -= factor * src[j];
    }
    value -= factor * rhs_[r];
  }
  rows_.push_back(std::move(row));
  rhs_.push_back(std::move(value));
  basis_.push_back(slack);
  return rows_.size() - 1;
}

void ExactLp::pivot(std::size_t row, std::size_t col) {
  ++pivots_;
  auto& p = rows_[row];
  const Rational inv = 1 / p[col];
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] != 0) {
      p[j] *= inv;
      nz.push_back(j);
    }
  }
  rhs_[row] *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r == row || rows_[r][col] == 0) continue;
    const Rational factor = rows_[r][col];
    for (std::size_t j : nz) rows_[r][j] -= factor * p[j];
    rhs_[r] -= factor * rhs_[row];
  }
  if (reduced_[col] != 0) {
    const Rational factor = reduced_[col];
    for (std::size_t j : nz) reduced_[j] -= factor * p[j];
  }
  basis_[row] = col;
}

LpStatus ExactLp::solve() {
  const std::size_t width = reduced_.size();
  for (;;) {
    std::optional<std::size_t> leave;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rhs_[r] < 0 && (!leave || basis_[r] < basis_[*leave])) leave = r;
    }
    if (leave) {
      for (std::size_t j = 0; j < width; ++j) {
        if (reduced_[j] > 0) throw std::logic_error("ExactLp: start is neither primal nor dual feasible");
      }
      const auto& row = rows_[*leave];
      std::optional<std::size_t> enter;
      Rational best;
      for (std::size_t j = 0; j < width; ++j) {
        if (row[j] >= 0) continue;
        Rational ratio = reduced_[j] / row[j];
        if (!enter || ratio < best) {
          enter = j;
          best = std::move(ratio);
        }
      }
      if (!enter) return LpStatus::infeasible;
      pivot(*leave, *enter);
      continue;
    }

    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < width; ++j) {
      if (reduced_[j] > 0) {
        enter = j;
        break;
      }
    }
    if (!enter) return LpStatus::optimal;
    std::optional<std::size_t> out;
    Rational best;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& a = rows_[r][*enter];
      if (a <= 0) continue;
      Rational ratio = rhs_[r] / a;
      if (!out || ratio < best || (ratio == best && basis_[r] < basis_[*out])) {
        out = r;
        best = std::move(ratio);
      }
    }
    if (!out) return LpStatus::unbounded;
    pivot(*out, *enter);
  }
}

std::vector<Rational> ExactLp::primal() const {
  std::vector<Rational> x(n_, Rational(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (basis_[r] < n_) x[basis_[r]] = rhs_[r];
  }
  return x;
}

std::vector<Rational> ExactLp::dual() const {
  std::vector<Rational> u;
  u.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) u.push_back(-reduced_[n_ + i]);
  return u;
}

Rational ExactLp::objective_value() const {
  Rational v = 0;
  const auto x = primal();
  for (std::size_t j = 0; j < n_; ++j) v += objective_[j] * x[j];
  return v;
}

}  // namespace tsirelson_lab
