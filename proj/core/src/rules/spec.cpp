#include "marfal/rules/spec.hpp"

#include <cmath>
#include <string>

#include "marfal/rules/classify.hpp"
#include "marfal/rules/measures.hpp"

namespace marfal::rules {

namespace {

using logic::Formula;
using logic::JointFrame;
using logic::PredicateRegistry;
using logic::PredicateRole;

int window_steps(double seconds, double dt, const char* what) {
  const double steps = seconds / dt;
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-9 || rounded < 1.0) {
    throw std::invalid_argument(std::string(what) +
                                " must be a positive multiple of dt");
  }
  return static_cast<int>(rounded);
}

EncounterAtoms register_sector(PredicateRegistry& reg, EncounterType t,
                               const SectorBounds& s,
                               const sim::VesselLimits& lim) {
  const std::string prefix = to_string(t);
  EncounterAtoms a;
  a.pos_lo = reg.add(prefix + "_pos_lo", PredicateRole::input,
                     [s, lim](const JointFrame& f) {
                       return h_position_halfplane(f.ego, f.adversary,
                                                   s.beta_lo, lim.v_max);
                     });
  a.pos_hi = reg.add(prefix + "_pos_hi", PredicateRole::input,
                     [s, lim](const JointFrame& f) {
                       return h_position_halfplane(f.ego, f.adversary,
                                                   s.beta_hi, lim.v_max);
                     });
  a.ori_lo = reg.add(prefix + "_ori_lo", PredicateRole::input,
                     [s, lim](const JointFrame& f) {
                       return h_orientation_halfplane(f.ego, f.adversary,
                                                      s.gamma_lo,
                                                      lim.omega_max);
                     });
  a.ori_hi = reg.add(prefix + "_ori_hi", PredicateRole::input,
                     [s, lim](const JointFrame& f) {
                       return h_orientation_halfplane(f.ego, f.adversary,
                                                      s.gamma_hi,
                                                      lim.omega_max);
                     });
  return a;
}

}  // namespace

const EncounterAtoms& SpecAtoms::sector(EncounterType t) const {
  switch (t) {
    case EncounterType::crossing:
      return crossing;
    case EncounterType::head_on:
      return head_on;
    case EncounterType::overtake:
      return overtake;
  }
  throw std::invalid_argument("unknown encounter type");
}

SpecAtoms register_rule_predicates(PredicateRegistry& reg,
                                   const RuleParameters& params,
                                   const sim::VesselLimits& limits) {
  SpecAtoms atoms;
  atoms.crossing = register_sector(reg, EncounterType::crossing,
                                   params.crossing, limits);
  atoms.head_on = register_sector(reg, EncounterType::head_on, params.head_on,
                                  limits);
  atoms.overtake = register_sector(reg, EncounterType::overtake,
                                   params.overtake, limits);

  const double r_zone = params.r_zone;
  const double t_h = params.t_horizon;
  const double a_max = limits.a_max;
  const double alpha_max = limits.alpha_max;
  const double delta = params.delta;

  const auto vo_lo = [r_zone, a_max](const JointFrame& f) {
    const double eps = tangent_angle(f.ego, f.adversary, r_zone).eps;
    return h_velocity_halfplane(f.ego, f.adversary, -eps, a_max);
  };
  const auto vo_hi = [r_zone, a_max](const JointFrame& f) {
    const double eps = tangent_angle(f.ego, f.adversary, r_zone).eps;
    return h_velocity_halfplane(f.ego, f.adversary, eps, a_max);
  };
  const auto vo_th = [t_h, a_max](const JointFrame& f) {
    return h_time_horizon(f.ego, f.adversary, t_h, a_max);
  };

  SharedAtoms& s = atoms.shared;
  s.vo_lo = reg.add("vo_lo", PredicateRole::input, vo_lo);
  s.vo_hi = reg.add("vo_hi", PredicateRole::input, vo_hi);
  s.vo_horizon = reg.add("vo_horizon", PredicateRole::input, vo_th);
  s.faster = reg.add("faster", PredicateRole::input,
                     [a_max](const JointFrame& f) {
                       return h_drives_faster(f.ego, f.adversary, a_max);
                     });
  s.turn_starboard = reg.add("turn_starboard", PredicateRole::output,
                             [delta, alpha_max](const JointFrame& f) {
                               return h_change_course(f.theta_ref_ego, -delta,
                                                      f.ego.theta, alpha_max);
                             });
  s.turn_port = reg.add("turn_port", PredicateRole::output,
                        [delta, alpha_max](const JointFrame& f) {
                          return h_change_course(f.theta_ref_ego, delta,
                                                 f.ego.theta, alpha_max);
                        });
  s.clear_vo_lo = reg.add("clear_vo_lo", PredicateRole::output, vo_lo);
  s.clear_vo_hi = reg.add("clear_vo_hi", PredicateRole::output, vo_hi);
  s.clear_vo_horizon = reg.add("clear_vo_horizon", PredicateRole::output,
                               vo_th);
  return atoms;
}

Formula build_encounter_predicate(EncounterType t, const SpecAtoms& a) {
  const EncounterAtoms& e = a.sector(t);
  Formula in_position = Formula::conjunction(
      Formula::atom(e.pos_lo), Formula::negation(Formula::atom(e.pos_hi)));
  Formula in_orientation = Formula::conjunction(
      Formula::atom(e.ori_lo), Formula::negation(Formula::atom(e.ori_hi)));
  Formula vo = Formula::conjunction(
      Formula::conjunction(Formula::atom(a.shared.vo_lo),
                           Formula::negation(Formula::atom(a.shared.vo_hi))),
      Formula::atom(a.shared.vo_horizon));
  Formula enc = Formula::conjunction(
      Formula::conjunction(std::move(in_position), std::move(in_orientation)),
      std::move(vo));
  if (t == EncounterType::overtake) {
    enc = Formula::conjunction(std::move(enc), Formula::atom(a.shared.faster));
  }
  return enc;
}

Formula build_persistent_encounter(EncounterType t, const SpecAtoms& a,
                                   int persistence_steps) {
  Formula enc = build_encounter_predicate(t, a);
  return Formula::conjunction(
      Formula::negation(enc),
      Formula::always(logic::Interval{1, persistence_steps}, enc));
}

Formula build_maneuver_predicate(EncounterType t, const SpecAtoms& a) {
  Formula starboard = Formula::atom(a.shared.turn_starboard);
  if (t == EncounterType::overtake) {
    return Formula::disjunction(
        std::move(starboard),
        Formula::negation(Formula::atom(a.shared.turn_port)));
  }
  return starboard;
}

Formula build_rule_instance(EncounterType t, const SpecAtoms& a,
                            int persistence_steps, int maneuver_steps) {
  const int p = persistence_steps;
  const int m = maneuver_steps;
  Formula clear_vo = Formula::negation(Formula::conjunction(
      Formula::conjunction(
          Formula::atom(a.shared.clear_vo_lo),
          Formula::negation(Formula::atom(a.shared.clear_vo_hi))),
      Formula::atom(a.shared.clear_vo_horizon)));
  Formula consequent = Formula::conjunction(
      Formula::eventually(logic::Interval{p, p + m},
                          build_maneuver_predicate(t, a)),
      Formula::eventually(logic::Interval{p, p + 2 * m}, std::move(clear_vo)));
  return Formula::implies(build_persistent_encounter(t, a, p),
                          std::move(consequent));
}

ColregsSpec build_colregs_spec(const RuleParameters& params,
                               const sim::VesselLimits& limits, int n_steps,
                               double dt, std::optional<EncounterType> only) {
  params.validate(dt);
  limits.validate();

  const int p = window_steps(params.t_persistent, dt, "t_persistent");
  const int m = window_steps(params.t_maneuver, dt, "t_maneuver");
  const int delay = p + 2 * m;
  if (n_steps < delay) {
    throw logic::MonitorError(
        "trace of " + std::to_string(n_steps) +
        " steps is shorter than the specification horizon of " +
        std::to_string(delay) + " steps");
  }

  ColregsSpec spec;
  spec.atoms = register_rule_predicates(spec.registry, params, limits);
  spec.verdict_delay = delay;
  spec.n_steps = n_steps;
  spec.dt = dt;
  if (only) {
    spec.types = {*only};
  } else {
    spec.types = {EncounterType::crossing, EncounterType::head_on,
                  EncounterType::overtake};
  }

  std::optional<Formula> step;
  for (EncounterType t : spec.types) {
    Formula inst = build_rule_instance(t, spec.atoms, p, m);
    step = step ? Formula::conjunction(std::move(*step), std::move(inst))
                : std::move(inst);
  }
  spec.step = std::move(*step);
  spec.full = Formula::always(logic::Interval{0, n_steps - delay}, spec.step);

  for (logic::PredicateId id : spec.step.atoms()) {
    switch (spec.registry.at(id).role) {
      case PredicateRole::input:
        spec.sets.inputs.push_back(id);
        break;
      case PredicateRole::output:
        spec.sets.outputs.push_back(id);
        break;
      case PredicateRole::none:
        break;
    }
  }
  return spec;
}

ColregsSpec resize_colregs_spec(const ColregsSpec& spec, int n_steps) {
  if (n_steps < spec.verdict_delay) {
    throw logic::MonitorError(
        "trace of " + std::to_string(n_steps) +
        " steps is shorter than the specification horizon of " +
        std::to_string(spec.verdict_delay) + " steps");
  }
  ColregsSpec out = spec;
  out.n_steps = n_steps;
  out.full = Formula::always(logic::Interval{0, n_steps - spec.verdict_delay},
                             spec.step);
  return out;
}

void register_monitor_predicates(logic::PredicateRegistry& reg,
                                 const RuleParameters& params,
                                 const sim::VesselLimits& limits) {
  const RuleParameters p = params;
  const sim::VesselLimits lim = limits;
  for (EncounterType t : kEncounterTypes) {
    reg.add(to_string(t), PredicateRole::none,
            [t, p, lim](const JointFrame& f) {
              return encounter_robustness(f, t, p, lim);
            });
  }
  reg.add("velocity_obstacle", PredicateRole::none,
          [p, lim](const JointFrame& f) {
            return velocity_obstacle_robustness(f.ego, f.adversary, p.r_zone,
                                                p.t_horizon, lim.a_max);
          });
  reg.add("time_horizon", PredicateRole::none, [p, lim](const JointFrame& f) {
    return h_time_horizon(f.ego, f.adversary, p.t_horizon, lim.a_max);
  });
  reg.add("drives_faster", PredicateRole::none, [lim](const JointFrame& f) {
    return h_drives_faster(f.ego, f.adversary, lim.a_max);
  });
  reg.add("turned_starboard", PredicateRole::none,
          [p, lim](const JointFrame& f) {
            return h_change_course(f.theta_ref_ego, -p.delta, f.ego.theta,
                                   lim.alpha_max);
          });
  reg.add("turned_port", PredicateRole::none, [p, lim](const JointFrame& f) {
    return -h_change_course(f.theta_ref_ego, p.delta, f.ego.theta,
                            lim.alpha_max);
  });
}

}  // namespace marfal::rules
