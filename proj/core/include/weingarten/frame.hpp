#pragma once

#include <array>

#include "weingarten/fourier.hpp"

namespace weingarten::framecalc {

using cas::AlphabetPtr;
using cas::FourierSeries;
using cas::Polynomial;

enum class FrameKind {
  Frenet,     // components along the moving frame {t, n, b}
  Cartesian,  // components along the fixed basis {e1, e2, e3}
};

/// 3-vector of Fourier series expressed in an orthonormal right-handed
/// basis. Frenet u-differentiation applies the connection rules
/// t' = kappa n, n' = -kappa t + sigma b, b' = -sigma n on top of
/// coefficient-wise d/du; Cartesian differentiation is componentwise.
struct FrameVector {
  FrameKind kind;
  std::array<FourierSeries, 3> comp;

  FrameVector derive_u() const;
  FrameVector derive_v() const;
  FrameVector operator+(const FrameVector& rhs) const;
  FrameVector operator-(const FrameVector& rhs) const;
  FrameVector operator*(const Polynomial& s) const;

  const AlphabetPtr& alphabet() const { return comp[0].alphabet(); }
};

FourierSeries dot(const FrameVector& u, const FrameVector& v);

/// Scalar triple product [u1, u2, u3]: the determinant of the component
/// matrix (orthonormal right-handed basis in both frame kinds).
FourierSeries triple_product(const FrameVector& u1, const FrameVector& u2,
                             const FrameVector& u3);

/// A cyclic parametrization with its cached partials. The position itself is
/// not representable in the coefficient algebra (the Frenet centre curve and
/// the parallel-case axis coordinate live outside it); everything downstream
/// consumes the partials only.
struct CyclicChart {
  FrameKind kind;
  AlphabetPtr alphabet;
  FrameVector xu, xv, xuu, xuv, xvv;
};

/// Frenet chart: X = c(u) + r(u)(cos v n + sin v b) with c' = alpha t +
/// beta n + gamma b. Parallel chart: X = (f(u), g(u), u) + r(u)(cos v,
/// sin v, 0). All partials are exact Fourier series of degree <= 1.
CyclicChart build_cyclic_parametrization(FrameKind kind);

}  // namespace weingarten::framecalc
