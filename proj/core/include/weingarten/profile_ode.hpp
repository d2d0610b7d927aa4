#pragma once

#include <functional>
#include <string>
#include <vector>

#include "weingarten/relation.hpp"

namespace weingarten::surfaces {

/// One node of an integrated profile: radius, slope, and (for circle-center
/// systems) the center coordinates.
struct ProfileState {
  double u = 0;
  double r = 1;
  double rp = 0;  // dr/du
  double f = 0;   // center x-coordinate
  double g = 0;   // center y-coordinate
};

/// The unique r'' solving a H + b K = c for a surface of revolution
/// X = (f0 + r cos v, g0 + r sin v, u), oriented with the normal toward the
/// axis: H = (1 + r'^2 - r r'')/(2 r (1 + r'^2)^{3/2}),
/// K = -r''/(r (1 + r'^2)^2). Throws SingularStateError when the r''
/// coefficient falls below 1e-12.
double revolution_profile_rhs(const ProfileState& state,
                              const WeingartenRelation& relation);

enum class StopReason { Completed, Singular, RadiusFloor, SlopeBlowup, NotFinite };
std::string stop_reason_name(StopReason r);

/// dr'/du as a function of the state (profile and center systems alike).
using ProfileRhs = std::function<double(const ProfileState&)>;

/// Dense fixed-step trajectory. Nodes ascend in u; dense evaluation uses a
/// two-node quintic Hermite with curvature data taken from the governing
/// equation, so interpolated states stay equation-consistent to the
/// integrator's order.
class Trajectory {
 public:
  Trajectory(std::vector<ProfileState> nodes, ProfileRhs rhs, double lambda,
             double mu, StopReason forward, StopReason backward);

  const std::vector<ProfileState>& nodes() const { return nodes_; }
  double u_min() const { return nodes_.front().u; }
  double u_max() const { return nodes_.back().u; }
  bool covers(double lo, double hi) const;
  StopReason forward_stop() const { return forward_; }
  StopReason backward_stop() const { return backward_; }

  /// Interpolated state at u (must lie inside [u_min, u_max]).
  ProfileState at(double u) const;
  /// r'' at an interpolated state, straight from the governing equation.
  double rpp(const ProfileState& s) const { return rhs_(s); }
  double lambda() const { return lambda_; }
  double mu() const { return mu_; }

  /// CSV dump "u,r,r_prime,f,g".
  std::string csv() const;

 private:
  std::vector<ProfileState> nodes_;
  ProfileRhs rhs_;
  double lambda_ = 0, mu_ = 0;
  StopReason forward_, backward_;
};

/// Classical fixed-step fourth-order Runge-Kutta over [span_lo, span_hi]
/// from the initial state (integrating both directions when the initial u
/// lies inside). Halts cleanly at r -> 0, singular states, or slope blowup;
/// the stop reasons are recorded on the trajectory.
Trajectory integrate_profile(const ProfileRhs& rhs, const ProfileState& initial,
                             double span_lo, double span_hi, double step,
                             double lambda = 0, double mu = 0);

/// The circle-center minimal system: r'' = (1 + (lambda^2 + mu^2) r^4 +
/// r'^2)/r with f' = mu r^2, g' = lambda r^2.
Trajectory integrate_riemann_trajectory(double lambda, double mu,
                                        const ProfileState& initial,
                                        double span_lo, double span_hi,
                                        double step);

}  // namespace weingarten::surfaces
