#include "weingarten/frame.hpp"

namespace weingarten::framecalc {

using cas::Harmonic;
using weingarten::Rational;

namespace {
void check_same_kind(const FrameVector& a, const FrameVector& b) {
  if (a.kind != b.kind)
    throw FrameMismatchError("frame vectors of different frame kinds");
}
}  // namespace

FrameVector FrameVector::derive_u() const {
  if (kind == FrameKind::Cartesian)
    return {kind, {comp[0].derive_u(), comp[1].derive_u(), comp[2].derive_u()}};

  const AlphabetPtr& a = alphabet();
  const Polynomial kappa = Polynomial::symbol(a, "kappa");
  const Polynomial sigma = Polynomial::symbol(a, "sigma");
  const FourierSeries& t = comp[0];
  const FourierSeries& n = comp[1];
  const FourierSeries& b = comp[2];
  return {kind,
          {t.derive_u() - n * kappa,
           n.derive_u() + t * kappa - b * sigma,
           b.derive_u() + n * sigma}};
}

FrameVector FrameVector::derive_v() const {
  return {kind, {comp[0].derive_v(), comp[1].derive_v(), comp[2].derive_v()}};
}

FrameVector FrameVector::operator+(const FrameVector& rhs) const {
  check_same_kind(*this, rhs);
  return {kind, {comp[0] + rhs.comp[0], comp[1] + rhs.comp[1], comp[2] + rhs.comp[2]}};
}

FrameVector FrameVector::operator-(const FrameVector& rhs) const {
  check_same_kind(*this, rhs);
  return {kind, {comp[0] - rhs.comp[0], comp[1] - rhs.comp[1], comp[2] - rhs.comp[2]}};
}

FrameVector FrameVector::operator*(const Polynomial& s) const {
  return {kind, {comp[0] * s, comp[1] * s, comp[2] * s}};
}

FourierSeries dot(const FrameVector& u, const FrameVector& v) {
  check_same_kind(u, v);
  return u.comp[0] * v.comp[0] + u.comp[1] * v.comp[1] + u.comp[2] * v.comp[2];
}

FourierSeries triple_product(const FrameVector& u1, const FrameVector& u2,
                             const FrameVector& u3) {
  check_same_kind(u1, u2);
  check_same_kind(u1, u3);
  return u1.comp[0] * (u2.comp[1] * u3.comp[2] - u2.comp[2] * u3.comp[1]) -
         u1.comp[1] * (u2.comp[0] * u3.comp[2] - u2.comp[2] * u3.comp[0]) +
         u1.comp[2] * (u2.comp[0] * u3.comp[1] - u2.comp[1] * u3.comp[0]);
}

CyclicChart build_cyclic_parametrization(FrameKind kind) {
  if (kind == FrameKind::Frenet) {
    const AlphabetPtr a = cas::frenet_alphabet();
    const Polynomial r = Polynomial::symbol(a, "r");
    const auto one = Polynomial::constant(a, Rational(1));
    const FourierSeries zero = FourierSeries::zero(a);
    const FourierSeries cosv = FourierSeries::harmonic(one, 1, Harmonic::Cos);
    const FourierSeries sinv = FourierSeries::harmonic(one, 1, Harmonic::Sin);

    // Circle offset relative to the centre curve: r (cos v n + sin v b).
    const FrameVector offset{kind, {zero, cosv * r, sinv * r}};
    // Centre-curve velocity c' = alpha t + beta n + gamma b.
    const FrameVector cprime{kind,
                             {FourierSeries(Polynomial::symbol(a, "alpha")),
                              FourierSeries(Polynomial::symbol(a, "beta")),
                              FourierSeries(Polynomial::symbol(a, "gamma"))}};

    const FrameVector xu = cprime + offset.derive_u();
    const FrameVector xv = offset.derive_v();
    return {kind, a, xu, xv, xu.derive_u(), xu.derive_v(), xv.derive_v()};
  }

  const AlphabetPtr a = cas::parallel_alphabet();
  const auto one = Polynomial::constant(a, Rational(1));
  const Polynomial r = Polynomial::symbol(a, "r");
  const FourierSeries cosv = FourierSeries::harmonic(one, 1, Harmonic::Cos);
  const FourierSeries sinv = FourierSeries::harmonic(one, 1, Harmonic::Sin);

  // X_u = (f' + r' cos v, g' + r' sin v, 1); the axis coordinate u itself
  // never enters the coefficient algebra.
  const Polynomial rp = Polynomial::symbol(a, "r'");
  const FrameVector xu{kind,
                       {FourierSeries(Polynomial::symbol(a, "f'")) + cosv * rp,
                        FourierSeries(Polynomial::symbol(a, "g'")) + sinv * rp,
                        FourierSeries(one)}};
  const FrameVector xv{kind, {cosv.derive_v() * r, sinv.derive_v() * r,
                              FourierSeries::zero(a)}};
  return {kind, a, xu, xv, xu.derive_u(), xu.derive_v(), xv.derive_v()};
}

}  // namespace weingarten::framecalc
