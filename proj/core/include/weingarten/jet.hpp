#pragma once

#include <Eigen/Dense>

namespace weingarten::numgeom {

using Vec3 = Eigen::Vector3d;

/// Position and exact first/second partials of a parametrized surface at one
/// (u, v) sample. The numeric kernel's sole input contract.
struct SurfaceJet {
  Vec3 x = Vec3::Zero();
  Vec3 xu = Vec3::Zero(), xv = Vec3::Zero();
  Vec3 xuu = Vec3::Zero(), xuv = Vec3::Zero(), xvv = Vec3::Zero();
};

}  // namespace weingarten::numgeom
