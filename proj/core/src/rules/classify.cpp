#include "marfal/rules/classify.hpp"

#include <algorithm>
#include <cmath>

#include "marfal/rules/measures.hpp"

namespace marfal::rules {

double encounter_robustness(const logic::JointFrame& frame, EncounterType t,
                            const RuleParameters& params,
                            const sim::VesselLimits& limits) {
  const SectorBounds& s = params.sector(t);
  double rob = std::min(
      {h_position_halfplane(frame.ego, frame.adversary, s.beta_lo,
                            limits.v_max),
       -h_position_halfplane(frame.ego, frame.adversary, s.beta_hi,
                             limits.v_max),
       h_orientation_halfplane(frame.ego, frame.adversary, s.gamma_lo,
                               limits.omega_max),
       -h_orientation_halfplane(frame.ego, frame.adversary, s.gamma_hi,
                                limits.omega_max),
       velocity_obstacle_robustness(frame.ego, frame.adversary, params.r_zone,
                                    params.t_horizon, limits.a_max)});
  if (t == EncounterType::overtake) {
    rob = std::min(rob,
                   h_drives_faster(frame.ego, frame.adversary, limits.a_max));
  }
  return rob;
}

EncounterLabeler::EncounterLabeler(const RuleParameters& params,
                                   const sim::VesselLimits& limits, double dt)
    : params_(params), limits_(limits) {
  params_.validate(dt);
  limits_.validate();
  persistence_steps_ = static_cast<int>(std::round(params.t_persistent / dt));
  release_steps_ = static_cast<int>(std::round(params.t_maneuver / dt));
}

EncounterLabeler::PushResult EncounterLabeler::push(logic::JointSignal& sig) {
  if (sig.empty()) {
    throw std::invalid_argument("EncounterLabeler::push: empty signal");
  }
  const int k = sig.last_step();
  if (k != static_cast<int>(labels_.size())) {
    throw std::invalid_argument(
        "EncounterLabeler::push: frames must be pushed exactly once, in "
        "order");
  }

  logic::JointFrame& frame = sig.frames[static_cast<std::size_t>(k)];
  if (!latched_) {
    ref_ego_ = frame.ego.theta;
    ref_adv_ = frame.adversary.theta;
  }
  frame.theta_ref_ego = ref_ego_;
  frame.theta_ref_adv = ref_adv_;

  StepLabels row;
  row.theta_ref_ego = ref_ego_;
  row.theta_ref_adv = ref_adv_;
  for (EncounterType t : kEncounterTypes) {
    row.active[static_cast<std::size_t>(t)] =
        encounter_robustness(frame, t, params_, limits_) > 0.0;
  }
  labels_.push_back(row);

  PushResult result;
  const int p = persistence_steps_;
  if (k >= p) {
    const int edge = k - p;
    for (EncounterType t : kEncounterTypes) {
      const auto ti = static_cast<std::size_t>(t);
      if (labels_[static_cast<std::size_t>(edge)].active[ti]) continue;
      bool held = true;
      for (int j = edge + 1; j <= k; ++j) {
        if (!labels_[static_cast<std::size_t>(j)].active[ti]) {
          held = false;
          break;
        }
      }
      if (!held) continue;

      labels_[static_cast<std::size_t>(edge)].persistent[ti] = true;
      latched_ = true;
      none_count_ = 0;
      const logic::JointFrame& at_edge =
          sig.frames[static_cast<std::size_t>(edge)];
      ref_ego_ = at_edge.ego.theta;
      ref_adv_ = at_edge.adversary.theta;
      for (int j = edge; j <= k; ++j) {
        sig.frames[static_cast<std::size_t>(j)].theta_ref_ego = ref_ego_;
        sig.frames[static_cast<std::size_t>(j)].theta_ref_adv = ref_adv_;
        labels_[static_cast<std::size_t>(j)].theta_ref_ego = ref_ego_;
        labels_[static_cast<std::size_t>(j)].theta_ref_adv = ref_adv_;
      }
      result.backfill_from =
          result.backfill_from < 0 ? edge
                                   : std::min(result.backfill_from, edge);
      result.events.push_back({t, edge, k, ref_ego_, ref_adv_});
    }
  }

  if (latched_) {
    if (any_active_now()) {
      none_count_ = 0;
    } else if (++none_count_ > release_steps_) {
      latched_ = false;
    }
  }
  return result;
}

bool EncounterLabeler::any_active_now() const {
  if (labels_.empty()) return false;
  const StepLabels& last = labels_.back();
  return last.active[0] || last.active[1] || last.active[2];
}

bool EncounterLabeler::stand_on_duty_now() const {
  if (labels_.empty()) return false;
  const StepLabels& last = labels_.back();
  return last.active[static_cast<std::size_t>(EncounterType::crossing)] ||
         last.active[static_cast<std::size_t>(EncounterType::overtake)];
}

ManeuverReference EncounterLabeler::ego_reference() const {
  return {ref_ego_, latched_};
}

ManeuverReference EncounterLabeler::adversary_reference() const {
  return {ref_adv_, latched_};
}

void EncounterLabeler::reset() {
  labels_.clear();
  latched_ = false;
  none_count_ = 0;
  ref_ego_ = 0.0;
  ref_adv_ = 0.0;
}

std::vector<StepLabels> classify_encounters(logic::JointSignal& sig,
                                            const RuleParameters& params,
                                            const sim::VesselLimits& limits) {
  EncounterLabeler labeler(params, limits, sig.dt);
  logic::JointSignal replay;
  replay.dt = sig.dt;
  replay.frames.reserve(sig.frames.size());
  for (const logic::JointFrame& f : sig.frames) {
    replay.frames.push_back(f);
    labeler.push(replay);
  }
  sig.frames = std::move(replay.frames);
  return labeler.labels();
}

}  // namespace marfal::rules
