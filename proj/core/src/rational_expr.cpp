#include "weingarten/rational_expr.hpp"

namespace weingarten::cas {

RationalExpr::RationalExpr(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.alphabet(), Rational(1))) {}

RationalExpr::RationalExpr(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.alphabet() != den_.alphabet()) {
    if (num_.alphabet()->is_prefix_of(*den_.alphabet()))
      num_ = num_.lift_to(den_.alphabet());
    else
      den_ = den_.lift_to(num_.alphabet());
  }
  normalize();
}

void RationalExpr::normalize() {
  if (den_.is_zero()) throw Error("zero denominator in rational expression");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.alphabet(), Rational(1));
    return;
  }
  // Scale so the denominator is primitive with positive leading coefficient.
  Rational content;
  den_ = den_.primitive_part(&content);
  num_ = num_ * (Rational(1) / content);
}

Polynomial RationalExpr::as_polynomial() const {
  if (!is_polynomial())
    throw SubstitutionError("expression has a non-constant denominator: (" +
                            den_.str() + ")");
  return num_ * (Rational(1) / den_.constant_value());
}

RationalExpr RationalExpr::operator-() const { return RationalExpr(-num_, den_); }

RationalExpr RationalExpr::operator+(const RationalExpr& rhs) const {
  if (den_ == rhs.den_) return RationalExpr(num_ + rhs.num_, den_);
  return RationalExpr(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalExpr RationalExpr::operator-(const RationalExpr& rhs) const {
  return *this + (-rhs);
}

RationalExpr RationalExpr::operator*(const RationalExpr& rhs) const {
  return RationalExpr(num_ * rhs.num_, den_ * rhs.den_);
}

RationalExpr RationalExpr::operator/(const RationalExpr& rhs) const {
  if (rhs.num_.is_zero()) throw Error("division by zero expression");
  return RationalExpr(num_ * rhs.den_, den_ * rhs.num_);
}

RationalExpr RationalExpr::pow(unsigned e) const {
  return RationalExpr(num_.pow(e), den_.pow(e));
}

bool RationalExpr::equivalent(const RationalExpr& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

RationalExpr RationalExpr::derive() const {
  if (den_.is_constant()) return RationalExpr(num_.derive(), den_);
  return RationalExpr(num_.derive() * den_ - num_ * den_.derive(), den_ * den_);
}

RationalExpr RationalExpr::lift_to(const AlphabetPtr& wider) const {
  return RationalExpr(num_.lift_to(wider), den_.lift_to(wider));
}

double RationalExpr::eval(const std::vector<double>& values) const {
  return num_.eval(values) / den_.eval(values);
}

std::string RationalExpr::str() const {
  if (is_polynomial() && den_.constant_value() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace weingarten::cas
