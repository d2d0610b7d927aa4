#include "weingarten/forms.hpp"

#include <cmath>
#include <string>

namespace weingarten::numgeom {

namespace {
double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.dot(b.cross(c));
}
}  // namespace

FundamentalForms fundamental_forms(const SurfaceJet& jet) {
  FundamentalForms out;
  out.E = jet.xu.dot(jet.xu);
  out.F = jet.xu.dot(jet.xv);
  out.G = jet.xv.dot(jet.xv);
  out.W = out.E * out.G - out.F * out.F;
  if (!(out.W >= kWFloor))
    throw DegenerateJetError("degenerate jet: W = " + std::to_string(out.W) +
                             " below the floor " + std::to_string(kWFloor));
  const Vec3 normal = jet.xu.cross(jet.xv) / std::sqrt(out.W);
  out.e = normal.dot(jet.xuu);
  out.f = normal.dot(jet.xuv);
  out.g = normal.dot(jet.xvv);

  const double duu = det3(jet.xu, jet.xv, jet.xuu);
  const double duv = det3(jet.xu, jet.xv, jet.xuv);
  const double dvv = det3(jet.xu, jet.xv, jet.xvv);
  out.H1 = out.G * duu - 2.0 * out.F * duv + out.E * dvv;
  out.K1 = duu * dvv - duv * duv;
  return out;
}

CurvatureSample curvatures(const FundamentalForms& forms) {
  CurvatureSample out;
  const double w32 = forms.W * std::sqrt(forms.W);
  out.H = forms.H1 / (2.0 * w32);
  out.K = forms.K1 / (forms.W * forms.W);
  double disc = out.H * out.H - out.K;
  if (disc < 0) {
    const double scale = std::max(1.0, out.H * out.H + std::abs(out.K));
    if (disc < -1e-12 * scale)
      throw CurvatureConsistencyError("H^2 - K = " + std::to_string(disc) +
                                      " below the umbilic clamp");
    disc = 0;
  }
  const double root = std::sqrt(disc);
  out.k1 = out.H + root;
  out.k2 = out.H - root;
  return out;
}

}  // namespace weingarten::numgeom
