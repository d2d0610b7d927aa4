#include "weingarten/profile_ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "weingarten/errors.hpp"

namespace weingarten::surfaces {

namespace {
constexpr double kRadiusFloor = 1e-9;
constexpr double kSlopeCap = 1e8;
constexpr double kSingularFloor = 1e-12;
}  // namespace

double revolution_profile_rhs(const ProfileState& state,
                              const WeingartenRelation& relation) {
  if (!relation.fully_numeric())
    throw ConfigError("profile integration needs a fully numeric relation");
  relation.validate();
  const double a = to_double(*relation.a);
  const double b = to_double(*relation.b);
  const double c = to_double(*relation.c);
  const double r = state.r, rp = state.rp;
  const double q = 1.0 + rp * rp;
  const double sq = std::sqrt(q);
  // a H + b K = c is linear in r''; clearing r q^2 gives
  // r'' ((a/2) r sqrt(q) + b) = (a/2) q^{3/2} - c r q^2.
  const double denom = 0.5 * a * r * sq + b;
  if (std::abs(denom) < kSingularFloor)
    throw SingularStateError("r'' coefficient " + std::to_string(denom) +
                             " vanishes at u = " + std::to_string(state.u));
  const double numer = 0.5 * a * sq * q - c * r * q * q;
  return numer / denom;
}

std::string stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Completed:
      return "completed";
    case StopReason::Singular:
      return "singular-state";
    case StopReason::RadiusFloor:
      return "radius-floor";
    case StopReason::SlopeBlowup:
      return "slope-blowup";
    case StopReason::NotFinite:
      return "not-finite";
  }
  return "unknown";
}

namespace {

struct Deriv {
  double dr, drp, df, dg;
};

Deriv system_rhs(const ProfileRhs& rhs, double lambda, double mu,
                 const ProfileState& s) {
  const double r2 = s.r * s.r;
  return {s.rp, rhs(s), mu * r2, lambda * r2};
}

ProfileState advance(const ProfileState& s, const Deriv& d, double h) {
  return {s.u + h, s.r + h * d.dr, s.rp + h * d.drp, s.f + h * d.df,
          s.g + h * d.dg};
}

bool state_ok(const ProfileState& s, StopReason* why) {
  if (!std::isfinite(s.r) || !std::isfinite(s.rp) || !std::isfinite(s.f) ||
      !std::isfinite(s.g)) {
    *why = StopReason::NotFinite;
    return false;
  }
  if (s.r <= kRadiusFloor) {
    *why = StopReason::RadiusFloor;
    return false;
  }
  if (std::abs(s.rp) >= kSlopeCap) {
    *why = StopReason::SlopeBlowup;
    return false;
  }
  return true;
}

// One classical RK4 step of size h (h may be negative).
ProfileState rk4_step(const ProfileRhs& rhs, double lambda, double mu,
                      const ProfileState& s, double h) {
  const Deriv k1 = system_rhs(rhs, lambda, mu, s);
  const Deriv k2 = system_rhs(rhs, lambda, mu, advance(s, k1, h / 2));
  const Deriv k3 = system_rhs(rhs, lambda, mu, advance(s, k2, h / 2));
  const Deriv k4 = system_rhs(rhs, lambda, mu, advance(s, k3, h));
  ProfileState out = s;
  out.u += h;
  out.r += h / 6 * (k1.dr + 2 * k2.dr + 2 * k3.dr + k4.dr);
  out.rp += h / 6 * (k1.drp + 2 * k2.drp + 2 * k3.drp + k4.drp);
  out.f += h / 6 * (k1.df + 2 * k2.df + 2 * k3.df + k4.df);
  out.g += h / 6 * (k1.dg + 2 * k2.dg + 2 * k3.dg + k4.dg);
  return out;
}

// Integrates from `start` toward `target`, appending states after `start`.
StopReason sweep(const ProfileRhs& rhs, double lambda, double mu,
                 ProfileState start, double target, double step,
                 std::vector<ProfileState>* out) {
  const double dir = target >= start.u ? 1.0 : -1.0;
  const double h = dir * std::abs(step);
  ProfileState cur = start;
  while (dir * (target - cur.u) > 1e-15) {
    const double remaining = dir * (target - cur.u);
    const double hh = remaining < std::abs(h) ? dir * remaining : h;
    ProfileState next;
    try {
      next = rk4_step(rhs, lambda, mu, cur, hh);
    } catch (const SingularStateError&) {
      return StopReason::Singular;
    }
    StopReason why;
    if (!state_ok(next, &why)) return why;
    out->push_back(next);
    cur = next;
  }
  return StopReason::Completed;
}

// Quintic Hermite on [0, h] from values/derivatives/curvatures at the ends.
struct Quintic {
  double c0, c1, c2, c3, c4, c5, h;
  double value(double t) const {
    const double s = t / h;
    return c0 + s * (c1 + s * (c2 + s * (c3 + s * (c4 + s * c5))));
  }
  double slope(double t) const {
    const double s = t / h;
    return (c1 + s * (2 * c2 + s * (3 * c3 + s * (4 * c4 + s * 5 * c5)))) / h;
  }
};

Quintic hermite5(double y0, double d0, double dd0, double y1, double d1,
                 double dd1, double h) {
  const double D0 = d0 * h, D1 = d1 * h;
  const double DD0 = dd0 * h * h, DD1 = dd1 * h * h;
  const double c0 = y0, c1 = D0, c2 = DD0 / 2;
  const double R1 = y1 - c0 - c1 - c2;
  const double R2 = D1 - c1 - 2 * c2;
  const double R3 = DD1 - 2 * c2;
  return {c0,
          c1,
          c2,
          10 * R1 - 4 * R2 + R3 / 2,
          -15 * R1 + 7 * R2 - R3,
          6 * R1 - 3 * R2 + R3 / 2,
          h};
}

}  // namespace

Trajectory::Trajectory(std::vector<ProfileState> nodes, ProfileRhs rhs,
                       double lambda, double mu, StopReason forward,
                       StopReason backward)
    : nodes_(std::move(nodes)),
      rhs_(std::move(rhs)),
      lambda_(lambda),
      mu_(mu),
      forward_(forward),
      backward_(backward) {
  if (nodes_.empty()) throw SingularStateError("empty trajectory");
}

bool Trajectory::covers(double lo, double hi) const {
  const double eps = 1e-12;
  return u_min() <= lo + eps && u_max() >= hi - eps;
}

ProfileState Trajectory::at(double u) const {
  const double eps = 1e-9;
  if (u < u_min() - eps || u > u_max() + eps)
    throw DomainError("u = " + std::to_string(u) + " outside the integrated [" +
                      std::to_string(u_min()) + ", " + std::to_string(u_max()) +
                      "]");
  u = std::clamp(u, u_min(), u_max());
  if (nodes_.size() == 1) return nodes_.front();
  auto it = std::upper_bound(
      nodes_.begin(), nodes_.end(), u,
      [](double value, const ProfileState& s) { return value < s.u; });
  if (it == nodes_.begin()) ++it;
  if (it == nodes_.end()) --it;
  const ProfileState& hi = *it;
  const ProfileState& lo = *std::prev(it);
  const double h = hi.u - lo.u;
  const double t = u - lo.u;

  const double mu2 = mu_, lambda2 = lambda_;
  auto fpp = [&](const ProfileState& s) { return 2 * mu2 * s.r * s.rp; };
  auto gpp = [&](const ProfileState& s) { return 2 * lambda2 * s.r * s.rp; };

  const Quintic qr =
      hermite5(lo.r, lo.rp, rhs_(lo), hi.r, hi.rp, rhs_(hi), h);
  const Quintic qf = hermite5(lo.f, mu2 * lo.r * lo.r, fpp(lo), hi.f,
                              mu2 * hi.r * hi.r, fpp(hi), h);
  const Quintic qg = hermite5(lo.g, lambda2 * lo.r * lo.r, gpp(lo), hi.g,
                              lambda2 * hi.r * hi.r, gpp(hi), h);
  ProfileState out;
  out.u = u;
  out.r = qr.value(t);
  out.rp = qr.slope(t);
  out.f = qf.value(t);
  out.g = qg.value(t);
  return out;
}

std::string Trajectory::csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "u,r,r_prime,f,g\n";
  for (const auto& s : nodes_)
    os << s.u << "," << s.r << "," << s.rp << "," << s.f << "," << s.g << "\n";
  return os.str();
}

Trajectory integrate_profile(const ProfileRhs& rhs, const ProfileState& initial,
                             double span_lo, double span_hi, double step,
                             double lambda, double mu) {
  if (!(step > 0)) throw ConfigError("integration step must be positive");
  if (span_lo > span_hi) std::swap(span_lo, span_hi);
  if (initial.r <= kRadiusFloor)
    throw ConfigError("initial radius must be positive");
  // The initial state itself must be regular.
  rhs(initial);

  std::vector<ProfileState> fwd{initial};
  const StopReason fstop =
      sweep(rhs, lambda, mu, initial, std::max(span_hi, initial.u), step, &fwd);
  std::vector<ProfileState> bwd{initial};
  const StopReason bstop =
      sweep(rhs, lambda, mu, initial, std::min(span_lo, initial.u), step, &bwd);

  std::vector<ProfileState> nodes(bwd.rbegin(), bwd.rend());
  nodes.insert(nodes.end(), fwd.begin() + 1, fwd.end());
  return Trajectory(std::move(nodes), rhs, lambda, mu, fstop, bstop);
}

Trajectory integrate_riemann_trajectory(double lambda, double mu,
                                        const ProfileState& initial,
                                        double span_lo, double span_hi,
                                        double step) {
  const double s2 = lambda * lambda + mu * mu;
  ProfileRhs rhs = [s2](const ProfileState& s) {
    const double r2 = s.r * s.r;
    return (1.0 + s2 * r2 * r2 + s.rp * s.rp) / s.r;
  };
  return integrate_profile(rhs, initial, span_lo, span_hi, step, lambda, mu);
}

}  // namespace weingarten::surfaces
