#pragma once

#include <array>
#include <vector>

#include "marfal/logic/signal.hpp"
#include "marfal/rules/params.hpp"
#include "marfal/sim/vessel.hpp"

namespace marfal::rules {

// min over the conjuncts of the encounter predicate; positive iff the
// encounter geometry holds at this frame.
double encounter_robustness(const logic::JointFrame& frame, EncounterType t,
                            const RuleParameters& params,
                            const sim::VesselLimits& limits);

struct ManeuverReference {
  double theta_ref = 0.0;
  bool valid = false;  // latched by a persistent encounter
};

struct StepLabels {
  std::array<bool, 3> active{};      // encounter predicate holds, by type
  std::array<bool, 3> persistent{};  // rising edge confirmed at this step
  double theta_ref_ego = 0.0;
  double theta_ref_adv = 0.0;
};

struct EncounterEvent {
  EncounterType type = EncounterType::crossing;
  int edge_step = 0;    // step k with (not enc(k)) and enc on the window
  int detect_step = 0;  // step at which the window was fully observed
  double theta_ref_ego = 0.0;
  double theta_ref_adv = 0.0;
};

// Online encounter bookkeeping over a growing signal. Call push() once per
// appended frame, in order. The labeler stamps theta_ref on the new frame,
// and when a rising edge is confirmed it re-latches both vessels' references
// to their headings at the edge step and backfills the frames recorded since
// then. While no latch is active the references roll with the current
// headings, so an unlatched course-change measure stays at its resting value.
// A latch expires once no encounter type has been active for more than
// t_maneuver.
class EncounterLabeler {
 public:
  EncounterLabeler(const RuleParameters& params,
                   const sim::VesselLimits& limits, double dt);

  struct PushResult {
    std::vector<EncounterEvent> events;
    int backfill_from = -1;  // first frame whose theta_ref changed, or -1
  };

  PushResult push(logic::JointSignal& sig);

  const std::vector<StepLabels>& labels() const { return labels_; }
  bool any_active_now() const;
  bool stand_on_duty_now() const;  // crossing or overtake active now
  bool latched() const { return latched_; }
  ManeuverReference ego_reference() const;
  ManeuverReference adversary_reference() const;
  void reset();

 private:
  RuleParameters params_;
  sim::VesselLimits limits_;
  int persistence_steps_ = 0;
  int release_steps_ = 0;
  std::vector<StepLabels> labels_;
  bool latched_ = false;
  int none_count_ = 0;
  double ref_ego_ = 0.0;
  double ref_adv_ = 0.0;
};

// Offline classification of a complete signal: replays the labeler over every
// frame, rewriting the theta_ref fields (a deterministic function of the
// vessel states, so relabeling an already-labeled signal is a no-op).
std::vector<StepLabels> classify_encounters(logic::JointSignal& sig,
                                            const RuleParameters& params,
                                            const sim::VesselLimits& limits);

}  // namespace marfal::rules
