#include "marfal/sim/vessel.hpp"

#include <algorithm>
#include <cmath>

namespace marfal::sim {

namespace {

bool finite(const VesselState& x) {
  return std::isfinite(x.px) && std::isfinite(x.py) && std::isfinite(x.theta) &&
         std::isfinite(x.v) && std::isfinite(x.omega);
}

void clamp_state(VesselState& x, const VesselLimits& lim) {
  x.v = std::clamp(x.v, lim.v_min, lim.v_max);
  x.omega = std::clamp(x.omega, -lim.omega_max, lim.omega_max);
}

}  // namespace

void VesselLimits::validate() const {
  if (!(v_min >= 0.0) || !(v_max > v_min)) {
    throw std::invalid_argument("vessel limits: need 0 <= v_min < v_max");
  }
  if (!(a_max > 0.0) || !(omega_max > 0.0) || !(alpha_max > 0.0)) {
    throw std::invalid_argument("vessel limits: rate bounds must be positive");
  }
}

std::array<double, 5> derivative(const VesselState& x, const ControlInput& u) {
  return {x.v * std::cos(x.theta), x.v * std::sin(x.theta), x.omega, u.a,
          u.alpha};
}

ControlInput clamp_input(const ControlInput& u, const VesselLimits& lim) {
  return {std::clamp(u.a, -lim.a_max, lim.a_max),
          std::clamp(u.alpha, -lim.alpha_max, lim.alpha_max)};
}

VesselState step(const VesselState& x, const ControlInput& u, double dt,
                 const VesselLimits& lim, int substeps) {
  if (!finite(x) || !std::isfinite(u.a) || !std::isfinite(u.alpha)) {
    throw SimulationError("step: non-finite state or input");
  }
  if (!(dt > 0.0)) {
    throw SimulationError("step: dt must be positive");
  }
  if (substeps < 1) {
    throw SimulationError("step: substeps must be >= 1");
  }

  const double h = dt / substeps;
  VesselState y = x;
  clamp_state(y, lim);
  for (int s = 0; s < substeps; ++s) {
    const auto k1 = derivative(y, u);
    VesselState m = y;
    m.px += 0.5 * h * k1[0];
    m.py += 0.5 * h * k1[1];
    m.theta += 0.5 * h * k1[2];
    m.v += 0.5 * h * k1[3];
    m.omega += 0.5 * h * k1[4];
    const auto k2 = derivative(m, u);
    m = y;
    m.px += 0.5 * h * k2[0];
    m.py += 0.5 * h * k2[1];
    m.theta += 0.5 * h * k2[2];
    m.v += 0.5 * h * k2[3];
    m.omega += 0.5 * h * k2[4];
    const auto k3 = derivative(m, u);
    m = y;
    m.px += h * k3[0];
    m.py += h * k3[1];
    m.theta += h * k3[2];
    m.v += h * k3[3];
    m.omega += h * k3[4];
    const auto k4 = derivative(m, u);
    y.px += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y.py += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    y.theta += h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
    y.v += h / 6.0 * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3]);
    y.omega += h / 6.0 * (k1[4] + 2.0 * k2[4] + 2.0 * k3[4] + k4[4]);
    clamp_state(y, lim);
  }
  return y;
}

Trajectory rollout(const VesselState& x0, const InputSequence& u, double dt,
                   const VesselLimits& lim, int substeps) {
  Trajectory traj;
  traj.reserve(u.size() + 1);
  VesselState x = x0;
  clamp_state(x, lim);
  traj.push_back(x);
  for (const ControlInput& uk : u) {
    x = step(x, uk, dt, lim, substeps);
    traj.push_back(x);
  }
  return traj;
}

std::array<double, 2> relative_velocity(const VesselState& ego,
                                        const VesselState& other) {
  return {ego.v * std::cos(ego.theta) - other.v * std::cos(other.theta),
          ego.v * std::sin(ego.theta) - other.v * std::sin(other.theta)};
}

}  // namespace marfal::sim
