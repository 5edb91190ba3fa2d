#include "tsirelson_lab/lp_norm.hpp"

#include <mpfr.h>

#include <limits>
#include <stdexcept>

namespace tsirelson_lab {
namespace {

constexpr mpfr_prec_t kPrecision = 192;

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Rational to_rational(mpfr_ptr v) {
  mpz_class mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), v);
  Rational r(mantissa);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

unsigned long to_ulong(const mpz_class& z) {
  if (!z.fits_ulong_p()) throw std::invalid_argument("exponent too large");
  return z.get_ui();
}

// One-sided bound of (sum |x_i|^{r/s})^{s/r}; every step is monotone in its
// argument, so rounding all steps in the same direction gives a safe bound.
Rational directed_norm(const FinVec& x, unsigned long r, unsigned long s, mpfr_rnd_t rnd) {
  Mpfr sum, term;
  for (const auto& e : x.entries()) {
    const Rational a = abs_value(e.coeff);
    mpfr_set_q(term.get(), a.get_mpq_t(), rnd);
    mpfr_pow_ui(term.get(), term.get(), r, rnd);
    mpfr_rootn_ui(term.get(), term.get(), s, rnd);
    mpfr_add(sum.get(), sum.get(), term.get(), rnd);
  }
  mpfr_pow_ui(sum.get(), sum.get(), s, rnd);
  mpfr_rootn_ui(sum.get(), sum.get(), r, rnd);
  return to_rational(sum.get());
}

}  // namespace

LpExponent LpExponent::finite(const Rational& q) {
  if (q < 1) throw std::invalid_argument("l_q norm needs q >= 1, got " + to_string(q));
  LpExponent e;
  e.infinite_ = false;
  e.q_ = q;
  return e;
}

Rational lp_power_sum(const FinVec& x, unsigned long q) {
  Rational s = 0;
  for (const auto& e : x.entries()) {
    Rational t = 1;
    const Rational a = abs_value(e.coeff);
    for (unsigned long k = 0; k < q; ++k) t *= a;
    s += t;
  }
  return s;
}

RealInterval lp_norm(const FinVec& x, const LpExponent& q) {
  if (q.is_infinite()) return RealInterval::exact(x.sup_norm());
  if (q.value() == 1) return RealInterval::exact(x.l1_norm());
  if (x.is_zero()) return RealInterval::exact(0);
  const unsigned long r = to_ulong(q.value().get_num());
  const unsigned long s = to_ulong(q.value().get_den());
  return {directed_norm(x, r, s, MPFR_RNDD), directed_norm(x, r, s, MPFR_RNDU)};
}

}  // namespace tsirelson_lab
