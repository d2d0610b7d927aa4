#pragma once

#include <functional>

#include "weingarten/jet.hpp"

namespace weingarten::numgeom {

using PointMap = std::function<Vec3(double u, double v)>;

/// Second-order central-difference jet of a point map; cross-validation
/// oracle for analytic jets. O(h^2) accurate.
SurfaceJet finite_difference_jet(const PointMap& map, double u, double v,
                                 double h);

}  // namespace weingarten::numgeom
