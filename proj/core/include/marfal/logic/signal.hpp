#pragma once

#include <vector>

#include "marfal/sim/vessel.hpp"

namespace marfal::logic {

// One time step of the joint two-vessel signal. theta_ref_* are the latched
// course references used by the course-change predicates; they default to the
// vessel's own heading until an encounter latches them (see rules/classify).
struct JointFrame {
  sim::VesselState ego;
  sim::VesselState adversary;
  double theta_ref_ego = 0.0;
  double theta_ref_adv = 0.0;
};

struct JointSignal {
  double dt = 1.0;
  std::vector<JointFrame> frames;

  int last_step() const { return static_cast<int>(frames.size()) - 1; }
  bool empty() const { return frames.empty(); }
};

}  // namespace marfal::logic
