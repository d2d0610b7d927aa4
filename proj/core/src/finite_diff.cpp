#include "weingarten/finite_diff.hpp"

#include "weingarten/errors.hpp"

namespace weingarten::numgeom {

SurfaceJet finite_difference_jet(const PointMap& map, double u, double v,
                                 double h) {
  if (!(h > 0)) throw Error("finite-difference step must be positive");
  SurfaceJet jet;
  jet.x = map(u, v);
  const Vec3 up = map(u + h, v), um = map(u - h, v);
  const Vec3 vp = map(u, v + h), vm = map(u, v - h);
  jet.xu = (up - um) / (2 * h);
  jet.xv = (vp - vm) / (2 * h);
  jet.xuu = (up - 2 * jet.x + um) / (h * h);
  jet.xvv = (vp - 2 * jet.x + vm) / (h * h);
  jet.xuv = (map(u + h, v + h) - map(u + h, v - h) - map(u - h, v + h) +
             map(u - h, v - h)) /
            (4 * h * h);
  return jet;
}

}  // namespace weingarten::numgeom
