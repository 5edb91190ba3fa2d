#pragma once

#include <string>

#include "tsirelson_lab/rational.hpp"
#include "tsirelson_lab/seqvec.hpp"

namespace tsirelson_lab {

/// Enclosure lower <= ||x|| <= upper. Exact engines return lower == upper.
struct NormBounds {
  Rational lower;
  Rational upper;

  static NormBounds exact(const Rational& v) { return {v, v}; }
  bool is_exact() const { return lower == upper; }
  Rational gap() const { return upper - lower; }
  /// The exact value; throws std::logic_error when the bounds have a gap.
  const Rational& value() const;
};

/// Structural properties an engine promises about its norm. Every flag is
/// property-tested for the engines in this library.
struct EngineFlags {
  /// ||sum eps_i a_i e_i|| = ||sum a_i e_i|| for all signs eps_i.
  bool one_unconditional = false;
  /// Partial-sum norms are nondecreasing.
  bool monotone_basis = false;
  /// ||e_i|| <= 1 for every i, hence ||x|| <= ||x||_1.
  bool unit_basis = false;
  /// Deleting a zero coordinate (shifting the later ones left by one) never
  /// decreases the norm.
  bool zero_deletion_nondecreasing = false;
};

class NormEngine {
 public:
  virtual ~NormEngine() = default;
  virtual std::string name() const = 0;
  virtual EngineFlags flags() const = 0;
  virtual NormBounds eval(const FinVec& x) const = 0;
};

/// A primal norm that can exhibit a norming functional: f(x) = ||x|| and
/// |f(z)| <= ||z|| for every z. This is the separation oracle the
/// cutting-plane dual norm runs on.
class NormingOracle {
 public:
  virtual ~NormingOracle() = default;
  virtual Rational norm(const FinVec& x) const = 0;
  virtual FinVec norming_functional(const FinVec& x) const = 0;
};

class L1Engine final : public NormEngine, public NormingOracle {
 public:
  std::string name() const override { return "l1"; }
  EngineFlags flags() const override { return {true, true, true, true}; }
  NormBounds eval(const FinVec& x) const override { return NormBounds::exact(x.l1_norm()); }
  Rational norm(const FinVec& x) const override { return x.l1_norm(); }
  /// sum_i sign(x_i) e_i^*
  FinVec norming_functional(const FinVec& x) const override;
};

class LinfEngine final : public NormEngine, public NormingOracle {
 public:
  std::string name() const override { return "linf"; }
  EngineFlags flags() const override { return {true, true, true, true}; }
  NormBounds eval(const FinVec& x) const override { return NormBounds::exact(x.sup_norm()); }
  Rational norm(const FinVec& x) const override { return x.sup_norm(); }
  /// sign(x_i) e_i^* at the first coordinate of maximal modulus.
  FinVec norming_functional(const FinVec& x) const override;
};

/// Exact coordinatewise bracket <y, x> = sum y_i x_i.
Rational pairing(const FinVec& y, const FinVec& x);

}  // namespace tsirelson_lab
