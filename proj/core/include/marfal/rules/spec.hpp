#pragma once

#include <optional>
#include <vector>

#include "marfal/logic/formula.hpp"
#include "marfal/logic/robustness.hpp"
#include "marfal/rules/params.hpp"
#include "marfal/sim/vessel.hpp"

namespace marfal::rules {

// Predicate handles for one encounter geometry's antecedent sectors.
struct EncounterAtoms {
  logic::PredicateId pos_lo = -1;
  logic::PredicateId pos_hi = -1;
  logic::PredicateId ori_lo = -1;
  logic::PredicateId ori_hi = -1;
};

// Atoms shared between rule instances. The velocity-obstacle terms exist
// twice with the same landscape: once on the antecedent (input) side, once on
// the consequent (output) side, so interface roles stay unambiguous.
struct SharedAtoms {
  logic::PredicateId vo_lo = -1;
  logic::PredicateId vo_hi = -1;
  logic::PredicateId vo_horizon = -1;
  logic::PredicateId faster = -1;
  logic::PredicateId turn_starboard = -1;
  logic::PredicateId turn_port = -1;
  logic::PredicateId clear_vo_lo = -1;
  logic::PredicateId clear_vo_hi = -1;
  logic::PredicateId clear_vo_horizon = -1;
};

struct SpecAtoms {
  EncounterAtoms crossing;
  EncounterAtoms head_on;
  EncounterAtoms overtake;
  SharedAtoms shared;

  const EncounterAtoms& sector(EncounterType t) const;
};

SpecAtoms register_rule_predicates(logic::PredicateRegistry& reg,
                                   const RuleParameters& params,
                                   const sim::VesselLimits& limits);

logic::Formula build_encounter_predicate(EncounterType t, const SpecAtoms& a);
logic::Formula build_persistent_encounter(EncounterType t, const SpecAtoms& a,
                                          int persistence_steps);
logic::Formula build_maneuver_predicate(EncounterType t, const SpecAtoms& a);

// One traffic-rule instance: persistent encounter implies a course change
// within [t_p, t_p + t_m] and a cleared velocity obstacle within
// [t_p, t_p + 2 t_m] (in steps of dt).
logic::Formula build_rule_instance(EncounterType t, const SpecAtoms& a,
                                   int persistence_steps, int maneuver_steps);

// Complete monitored specification over an n_steps-step trace (n_steps + 1
// frames). The surveillance window of the outer G is clipped so the last
// monitored step still sees its full consequent window; verdict_delay is that
// window length in steps.
struct ColregsSpec {
  logic::PredicateRegistry registry;
  SpecAtoms atoms;
  std::vector<EncounterType> types;
  logic::Formula step;  // rule instances without the outer G
  logic::Formula full;  // G over [0, n_steps - verdict_delay]
  logic::InterfaceSets sets;
  int verdict_delay = 0;
  int n_steps = 0;
  double dt = 0.0;
};

ColregsSpec build_colregs_spec(const RuleParameters& params,
                               const sim::VesselLimits& limits, int n_steps,
                               double dt,
                               std::optional<EncounterType> only = {});

// Same atoms and registry, full formula resized for a different trace length.
ColregsSpec resize_colregs_spec(const ColregsSpec& spec, int n_steps);

// Composite single-atom predicates (encounter geometries, velocity obstacle,
// goal distance) for ad-hoc formulas over exported traces.
void register_monitor_predicates(logic::PredicateRegistry& reg,
                                 const RuleParameters& params,
                                 const sim::VesselLimits& limits);

}  // namespace marfal::rules
