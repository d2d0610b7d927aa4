#pragma once

#include <vector>

#include "weingarten/substitution.hpp"

namespace weingarten::cas {

/// Which coefficient of a finite Fourier expansion is being addressed.
enum class Harmonic { Const, Cos, Sin };

/// Finite expansion a0 + sum_j (A_j cos(jv) + B_j sin(jv)) with Polynomial
/// coefficients. Canonical basis {1, cos jv, sin jv}: powers and products of
/// cosines/sines never survive construction, trailing zero harmonics are
/// trimmed. Immutable value semantics.
class FourierSeries {
 public:
  explicit FourierSeries(Polynomial a0);
  static FourierSeries zero(const AlphabetPtr& alphabet);
  /// coeff * cos(jv) or coeff * sin(jv); j == 0 valid only for Cos/Const.
  static FourierSeries harmonic(Polynomial coeff, int j, Harmonic kind);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  /// Highest harmonic with a nonzero coefficient (0 for constants and zero).
  int degree() const { return static_cast<int>(cos_.size()); }
  bool is_zero() const;

  /// Stored canonical coefficient; j past the degree returns 0.
  /// Harmonic::Sin with j == 0 is an error.
  Polynomial coeff(int j, Harmonic kind) const;

  FourierSeries operator-() const;
  FourierSeries operator+(const FourierSeries& rhs) const;
  FourierSeries operator-(const FourierSeries& rhs) const;
  /// Exact product-to-sum reduction; degree(F*G) <= degree F + degree G.
  FourierSeries operator*(const FourierSeries& rhs) const;
  FourierSeries operator*(const Polynomial& s) const;
  FourierSeries operator*(const Rational& s) const;
  FourierSeries& operator+=(const FourierSeries& rhs);

  bool operator==(const FourierSeries& rhs) const;
  bool operator!=(const FourierSeries& rhs) const { return !(*this == rhs); }

  /// d/du: coefficient-wise derivation.
  FourierSeries derive_u() const;
  /// d/dv: cos jv -> -j sin jv, sin jv -> j cos jv.
  FourierSeries derive_v() const;

  /// Coefficient-wise substitution (polynomial output demanded).
  FourierSeries substitute(const BindingSet& bindings) const;

  FourierSeries lift_to(const AlphabetPtr& wider) const;

  double eval(const std::vector<double>& values, double v) const;

  /// Canonical text: lines "A0 = ...", then "Aj = ..." / "Bj = ..." for
  /// every stored harmonic.
  std::string str() const;

 private:
  AlphabetPtr alphabet_;
  Polynomial a0_;
  std::vector<Polynomial> cos_, sin_;  // index j-1 holds harmonic j

  void trim();
  void add_cos(int j, const Polynomial& p);
  void add_sin(int j, const Polynomial& p);
};

inline FourierSeries operator*(const Polynomial& s, const FourierSeries& f) {
  return f * s;
}

}  // namespace weingarten::cas
