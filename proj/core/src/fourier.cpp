#include "weingarten/fourier.hpp"

#include <cmath>
#include <sstream>

namespace weingarten::cas {

FourierSeries::FourierSeries(Polynomial a0)
    : alphabet_(a0.alphabet()), a0_(std::move(a0)) {}

FourierSeries FourierSeries::zero(const AlphabetPtr& alphabet) {
  return FourierSeries(Polynomial(alphabet));
}

FourierSeries FourierSeries::harmonic(Polynomial coeff, int j, Harmonic kind) {
  if (j < 0) throw Error("negative harmonic index");
  FourierSeries f = zero(coeff.alphabet());
  if (kind == Harmonic::Sin) {
    if (j == 0) throw Error("sin harmonic with j == 0");
    f.add_sin(j, coeff);
  } else {
    if (j == 0)
      f.a0_ = std::move(coeff);
    else
      f.add_cos(j, coeff);
  }
  f.trim();
  return f;
}

bool FourierSeries::is_zero() const { return a0_.is_zero() && cos_.empty(); }

void FourierSeries::trim() {
  while (!cos_.empty() && cos_.back().is_zero() && sin_.back().is_zero()) {
    cos_.pop_back();
    sin_.pop_back();
  }
}

void FourierSeries::add_cos(int j, const Polynomial& p) {
  if (p.is_zero()) return;
  if (j == 0) {
    a0_ += p;
    return;
  }
  while (degree() < j) {
    cos_.emplace_back(alphabet_);
    sin_.emplace_back(alphabet_);
  }
  cos_[static_cast<size_t>(j - 1)] += p.lift_to(alphabet_);
}

void FourierSeries::add_sin(int j, const Polynomial& p) {
  if (p.is_zero() || j == 0) return;
  while (degree() < j) {
    cos_.emplace_back(alphabet_);
    sin_.emplace_back(alphabet_);
  }
  sin_[static_cast<size_t>(j - 1)] += p.lift_to(alphabet_);
}

Polynomial FourierSeries::coeff(int j, Harmonic kind) const {
  if (j < 0) throw Error("negative harmonic index");
  if (kind == Harmonic::Sin && j == 0)
    throw Error("sin coefficient with j == 0 does not exist");
  if (kind == Harmonic::Const || j == 0) return a0_;
  if (j > degree()) return Polynomial(alphabet_);
  return kind == Harmonic::Cos ? cos_[static_cast<size_t>(j - 1)]
                               : sin_[static_cast<size_t>(j - 1)];
}

FourierSeries FourierSeries::operator-() const {
  FourierSeries out = *this;
  out.a0_ = -out.a0_;
  for (auto& p : out.cos_) p = -p;
  for (auto& p : out.sin_) p = -p;
  return out;
}

FourierSeries& FourierSeries::operator+=(const FourierSeries& rhs) {
  if (alphabet_ != rhs.alphabet_) {
    if (alphabet_->is_prefix_of(*rhs.alphabet_)) {
      *this = lift_to(rhs.alphabet_);
    } else {
      return *this += rhs.lift_to(alphabet_);
    }
  }
  a0_ += rhs.a0_;
  for (int j = 1; j <= rhs.degree(); ++j) {
    add_cos(j, rhs.cos_[static_cast<size_t>(j - 1)]);
    add_sin(j, rhs.sin_[static_cast<size_t>(j - 1)]);
  }
  trim();
  return *this;
}

FourierSeries FourierSeries::operator+(const FourierSeries& rhs) const {
  FourierSeries out = *this;
  out += rhs;
  return out;
}

FourierSeries FourierSeries::operator-(const FourierSeries& rhs) const {
  FourierSeries out = *this;
  out += -rhs;
  return out;
}

FourierSeries FourierSeries::operator*(const Polynomial& s) const {
  if (s.alphabet() != alphabet_ && alphabet_->is_prefix_of(*s.alphabet()))
    return lift_to(s.alphabet()) * s;
  FourierSeries out = zero(alphabet_);
  out.a0_ = a0_ * s;
  for (int j = 1; j <= degree(); ++j) {
    out.add_cos(j, cos_[static_cast<size_t>(j - 1)] * s);
    out.add_sin(j, sin_[static_cast<size_t>(j - 1)] * s);
  }
  out.trim();
  return out;
}

FourierSeries FourierSeries::operator*(const Rational& s) const {
  return *this * Polynomial::constant(alphabet_, s);
}

FourierSeries FourierSeries::operator*(const FourierSeries& rhs) const {
  if (alphabet_ != rhs.alphabet_) {
    if (alphabet_->is_prefix_of(*rhs.alphabet_)) return lift_to(rhs.alphabet_) * rhs;
    return *this * rhs.lift_to(alphabet_);
  }
  const Rational half(1, 2);
  FourierSeries out = zero(alphabet_);
  out.a0_ = a0_ * rhs.a0_;

  for (int n = 1; n <= rhs.degree(); ++n) {
    out.add_cos(n, a0_ * rhs.cos_[static_cast<size_t>(n - 1)]);
    out.add_sin(n, a0_ * rhs.sin_[static_cast<size_t>(n - 1)]);
  }
  for (int m = 1; m <= degree(); ++m) {
    out.add_cos(m, cos_[static_cast<size_t>(m - 1)] * rhs.a0_);
    out.add_sin(m, sin_[static_cast<size_t>(m - 1)] * rhs.a0_);
  }

  for (int m = 1; m <= degree(); ++m) {
    const Polynomial& cm = cos_[static_cast<size_t>(m - 1)];
    const Polynomial& sm = sin_[static_cast<size_t>(m - 1)];
    for (int n = 1; n <= rhs.degree(); ++n) {
      const Polynomial& cn = rhs.cos_[static_cast<size_t>(n - 1)];
      const Polynomial& sn = rhs.sin_[static_cast<size_t>(n - 1)];
      const int sum = m + n;
      const int dif = std::abs(m - n);

      // cos(m) cos(n) = 1/2 [cos(m-n) + cos(m+n)]
      if (!cm.is_zero() && !cn.is_zero()) {
        const Polynomial p = cm * cn * half;
        out.add_cos(dif, p);
        out.add_cos(sum, p);
      }
      // sin(m) sin(n) = 1/2 [cos(m-n) - cos(m+n)]
      if (!sm.is_zero() && !sn.is_zero()) {
        const Polynomial p = sm * sn * half;
        out.add_cos(dif, p);
        out.add_cos(sum, -p);
      }
      // sin(m) cos(n) = 1/2 [sin(m+n) + sin(m-n)]
      if (!sm.is_zero() && !cn.is_zero()) {
        const Polynomial p = sm * cn * half;
        out.add_sin(sum, p);
        if (m > n)
          out.add_sin(dif, p);
        else if (n > m)
          out.add_sin(dif, -p);
      }
      // cos(m) sin(n) = 1/2 [sin(m+n) - sin(m-n)]
      if (!cm.is_zero() && !sn.is_zero()) {
        const Polynomial p = cm * sn * half;
        out.add_sin(sum, p);
        if (n > m)
          out.add_sin(dif, p);
        else if (m > n)
          out.add_sin(dif, -p);
      }
    }
  }
  out.trim();
  return out;
}

bool FourierSeries::operator==(const FourierSeries& rhs) const {
  if (a0_ != rhs.a0_ || degree() != rhs.degree()) return false;
  for (int j = 1; j <= degree(); ++j) {
    if (cos_[static_cast<size_t>(j - 1)] != rhs.cos_[static_cast<size_t>(j - 1)] ||
        sin_[static_cast<size_t>(j - 1)] != rhs.sin_[static_cast<size_t>(j - 1)])
      return false;
  }
  return true;
}

FourierSeries FourierSeries::derive_u() const {
  FourierSeries out = zero(alphabet_);
  out.a0_ = a0_.derive();
  for (int j = 1; j <= degree(); ++j) {
    out.add_cos(j, cos_[static_cast<size_t>(j - 1)].derive());
    out.add_sin(j, sin_[static_cast<size_t>(j - 1)].derive());
  }
  out.trim();
  return out;
}

FourierSeries FourierSeries::derive_v() const {
  FourierSeries out = zero(alphabet_);
  for (int j = 1; j <= degree(); ++j) {
    const Rational jq(j);
    out.add_cos(j, sin_[static_cast<size_t>(j - 1)] * jq);
    out.add_sin(j, cos_[static_cast<size_t>(j - 1)] * Rational(-j));
  }
  out.trim();
  return out;
}

FourierSeries FourierSeries::substitute(const BindingSet& bindings) const {
  FourierSeries out = zero(bindings.alphabet());
  out.a0_ = cas::substitute(a0_, bindings);
  for (int j = 1; j <= degree(); ++j) {
    out.add_cos(j, cas::substitute(cos_[static_cast<size_t>(j - 1)], bindings));
    out.add_sin(j, cas::substitute(sin_[static_cast<size_t>(j - 1)], bindings));
  }
  out.trim();
  return out;
}

FourierSeries FourierSeries::lift_to(const AlphabetPtr& wider) const {
  FourierSeries out = zero(wider);
  out.a0_ = a0_.lift_to(wider);
  for (int j = 1; j <= degree(); ++j) {
    out.add_cos(j, cos_[static_cast<size_t>(j - 1)].lift_to(wider));
    out.add_sin(j, sin_[static_cast<size_t>(j - 1)].lift_to(wider));
  }
  out.trim();
  return out;
}

double FourierSeries::eval(const std::vector<double>& values, double v) const {
  double acc = a0_.eval(values);
  for (int j = 1; j <= degree(); ++j) {
    acc += cos_[static_cast<size_t>(j - 1)].eval(values) * std::cos(j * v);
    acc += sin_[static_cast<size_t>(j - 1)].eval(values) * std::sin(j * v);
  }
  return acc;
}

std::string FourierSeries::str() const {
  std::ostringstream os;
  os << "A0 = " << a0_.str();
  for (int j = 1; j <= degree(); ++j) {
    os << "\nA" << j << " = " << cos_[static_cast<size_t>(j - 1)].str();
    os << "\nB" << j << " = " << sin_[static_cast<size_t>(j - 1)].str();
  }
  return os.str();
}

}  // namespace weingarten::cas
