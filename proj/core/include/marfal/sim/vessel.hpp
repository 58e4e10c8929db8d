#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace marfal::sim {

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Planar vessel state. theta accumulates turns without wrapping so that
// course-change bookkeeping across an episode stays unambiguous.
struct VesselState {
  double px = 0.0;     // m
  double py = 0.0;     // m
  double theta = 0.0;  // rad, unwrapped
  double v = 0.0;      // m/s
  double omega = 0.0;  // rad/s
};

struct ControlInput {
  double a = 0.0;      // m/s^2
  double alpha = 0.0;  // rad/s^2
};

struct VesselLimits {
  double v_min = 0.0;
  double v_max = 0.0;
  double a_max = 0.0;
  double omega_max = 0.0;
  double alpha_max = 0.0;

  void validate() const;  // throws std::invalid_argument on bad bounds
};

using Trajectory = std::vector<VesselState>;
using InputSequence = std::vector<ControlInput>;

// dx/dt = [v cos(theta), v sin(theta), omega, a, alpha]
std::array<double, 5> derivative(const VesselState& x, const ControlInput& u);

ControlInput clamp_input(const ControlInput& u, const VesselLimits& lim);

// One zero-order-hold step of dt seconds, integrated with classic RK4 split
// into `substeps` internal stages. v and omega are clamped to the limits
// after every stage. Rejects non-finite state/input and dt <= 0.
VesselState step(const VesselState& x, const ControlInput& u, double dt,
                 const VesselLimits& lim, int substeps = 10);

// Applies step() over the whole input sequence; result holds |u|+1 states
// with the initial state first.
Trajectory rollout(const VesselState& x0, const InputSequence& u, double dt,
                   const VesselLimits& lim, int substeps = 10);

// v^{E,A} = vE [cos tE, sin tE] - vA [cos tA, sin tA]
std::array<double, 2> relative_velocity(const VesselState& ego,
                                        const VesselState& other);

}  // namespace marfal::sim
