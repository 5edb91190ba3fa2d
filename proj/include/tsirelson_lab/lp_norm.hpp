#pragma once

#include "tsirelson_lab/rational.hpp"
#include "tsirelson_lab/seqvec.hpp"

namespace tsirelson_lab {

/// Closed interval with rational endpoints enclosing a real number.
struct RealInterval {
  Rational lo;
  Rational hi;

  static RealInterval exact(const Rational& v) { return {v, v}; }
  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// Exponent of an l_q norm: a rational q >= 1 or infinity.
class LpExponent {
 public:
  /// Throws std::invalid_argument when q < 1.
  static LpExponent finite(const Rational& q);
  static LpExponent infinity() { return LpExponent(); }

  bool is_infinite() const { return infinite_; }
  /// Only meaningful for finite exponents.
  const Rational& value() const { return q_; }
  /// True for positive integer q.
  bool is_integer() const { return !infinite_ && q_.get_den() == 1; }

 private:
  LpExponent() = default;
  bool infinite_ = true;
  Rational q_ = 0;
};

/// (sum |x_i|^q)^{1/q}, or max |x_i| for q = infinity. Exact for q in {1, inf};
/// otherwise an outward-rounded enclosure whose width is far below 1e-12.
RealInterval lp_norm(const FinVec& x, const LpExponent& q);

/// sum |x_i|^q for integer q, exactly.
Rational lp_power_sum(const FinVec& x, unsigned long q);

}  // namespace tsirelson_lab
