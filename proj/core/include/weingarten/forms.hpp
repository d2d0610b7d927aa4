#pragma once

#include "weingarten/errors.hpp"
#include "weingarten/jet.hpp"

namespace weingarten::numgeom {

/// Degeneracy floor on W = EG - F^2; samples below it raise
/// DegenerateJetError rather than producing silent NaNs.
inline constexpr double kWFloor = 1e-14;

/// First and second fundamental forms plus the determinant combinations
/// H1 = G[Xu,Xv,Xuu] - 2F[Xu,Xv,Xuv] + E[Xu,Xv,Xvv] and
/// K1 = [Xu,Xv,Xuu][Xu,Xv,Xvv] - [Xu,Xv,Xuv]^2, so that H = H1/(2 W^{3/2})
/// and K = K1/W^2.
struct FundamentalForms {
  double E = 0, F = 0, G = 0;  // first form
  double e = 0, f = 0, g = 0;  // second form
  double W = 0;                // EG - F^2
  double H1 = 0, K1 = 0;
};

struct CurvatureSample {
  double H = 0;   // mean curvature
  double K = 0;   // Gauss curvature
  double k1 = 0;  // principal curvatures, k1 >= k2
  double k2 = 0;
};

FundamentalForms fundamental_forms(const SurfaceJet& jet);

/// H = H1/(2 W^{3/2}), K = K1/W^2; principal curvatures from H +- sqrt(H^2-K)
/// with radicands in [-1e-12, 0) clamped to zero (umbilic rounding).
CurvatureSample curvatures(const FundamentalForms& forms);

inline CurvatureSample curvatures(const SurfaceJet& jet) {
  return curvatures(fundamental_forms(jet));
}

}  // namespace weingarten::numgeom
