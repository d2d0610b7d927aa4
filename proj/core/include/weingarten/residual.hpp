#pragma once

#include <functional>
#include <string>

#include "weingarten/forms.hpp"
#include "weingarten/relation.hpp"

namespace weingarten::numgeom {

/// Rectangular sampling grid in parameter space, counts >= 2 per direction.
struct GridSpec {
  double u0 = 0, u1 = 1;
  double v0 = 0, v1 = 1;
  int nu = 2, nv = 2;

  void validate() const {
    if (nu < 2 || nv < 2) throw ConfigError("grid counts must be >= 2");
  }
  double u(int i) const { return u0 + (u1 - u0) * i / double(nu - 1); }
  double v(int j) const { return v0 + (v1 - v0) * j / double(nv - 1); }
};

using JetSource = std::function<SurfaceJet(double u, double v)>;

/// Statistics of the unsquared defect |a H + b K - c| over a grid.
struct ResidualReport {
  GridSpec grid;
  double max = 0;
  double mean = 0;
  double argmax_u = 0, argmax_v = 0;
  double min_W = 0;  // W floor encountered over the grid

  std::string to_json(const WeingartenRelation& relation,
                      double tolerance = -1) const;
};

/// Samples curvatures over the grid and reports |a H + b K - c| statistics.
/// The relation must be fully numeric. Degenerate samples propagate as
/// DegenerateJetError with the offending (u, v) in the message.
ResidualReport weingarten_residual(const JetSource& jets,
                                   const WeingartenRelation& relation,
                                   const GridSpec& grid);

/// CSV dump "u,v,H,K,residual" over the same grid.
std::string residual_csv(const JetSource& jets, const WeingartenRelation& relation,
                         const GridSpec& grid);

}  // namespace weingarten::numgeom
