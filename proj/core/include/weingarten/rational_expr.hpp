#pragma once

#include <string>

#include "weingarten/polynomial.hpp"

namespace weingarten::cas {

/// Quotient of two polynomials, both kept radical-normalized. No gcd
/// cancellation is attempted; equality is decided by cross-multiplication,
/// which is sound because every adjoined radicand is a non-square (the
/// quotient ring stays an integral domain).
class RationalExpr {
 public:
  explicit RationalExpr(Polynomial num);
  RationalExpr(Polynomial num, Polynomial den);

  static RationalExpr constant(const AlphabetPtr& alphabet, const Rational& v) {
    return RationalExpr(Polynomial::constant(alphabet, v));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const AlphabetPtr& alphabet() const { return num_.alphabet(); }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is a (nonzero) rational constant.
  bool is_polynomial() const { return den_.is_constant(); }
  /// Clears a constant denominator; throws otherwise.
  Polynomial as_polynomial() const;

  RationalExpr operator-() const;
  RationalExpr operator+(const RationalExpr& rhs) const;
  RationalExpr operator-(const RationalExpr& rhs) const;
  RationalExpr operator*(const RationalExpr& rhs) const;
  RationalExpr operator/(const RationalExpr& rhs) const;
  RationalExpr pow(unsigned e) const;

  /// Field equality via cross-multiplication.
  bool equivalent(const RationalExpr& rhs) const;

  /// Quotient rule; throws where the underlying derivation does.
  RationalExpr derive() const;

  RationalExpr lift_to(const AlphabetPtr& wider) const;

  double eval(const std::vector<double>& values) const;

  /// "(num)/(den)" with both parts canonical; plain num when den == 1.
  std::string str() const;

 private:
  Polynomial num_, den_;
  void normalize();
};

}  // namespace weingarten::cas
