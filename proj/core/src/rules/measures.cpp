#include "marfal/rules/measures.hpp"

#include <cmath>

#include "marfal/util/angles.hpp"

namespace marfal::rules {

namespace {

void check_positive(double value, const char* what) {
  if (!(value > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

double distance(const sim::VesselState& ego, const sim::VesselState& other) {
  return std::hypot(other.px - ego.px, other.py - ego.py);
}

}  // namespace

const char* to_string(EncounterType t) {
  switch (t) {
    case EncounterType::crossing:
      return "crossing";
    case EncounterType::head_on:
      return "head_on";
    case EncounterType::overtake:
      return "overtake";
  }
  return "?";
}

EncounterType encounter_type_from_string(const std::string& s) {
  if (s == "crossing") return EncounterType::crossing;
  if (s == "head_on") return EncounterType::head_on;
  if (s == "overtake") return EncounterType::overtake;
  throw std::invalid_argument("unknown encounter type '" + s + "'");
}

const SectorBounds& RuleParameters::sector(EncounterType t) const {
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

void RuleParameters::validate(double dt) const {
  check_positive(dt, "dt");
  check_positive(t_maneuver, "t_maneuver");
  check_positive(t_persistent, "t_persistent");
  check_positive(t_horizon, "t_horizon");
  check_positive(r_zone, "r_zone");
  check_positive(delta, "delta");
  for (double window : {t_maneuver, t_persistent}) {
    const double steps = window / dt;
    if (std::abs(steps - std::round(steps)) > 1e-9) {
      throw std::invalid_argument(
          "rule windows must be integer multiples of dt");
    }
  }
  for (EncounterType t : kEncounterTypes) {
    const SectorBounds& s = sector(t);
    const double bw = s.beta_hi - s.beta_lo;
    const double gw = s.gamma_hi - s.gamma_lo;
    if (!(bw > 0.0) || bw > util::pi || !(gw > 0.0) || gw > util::pi) {
      throw std::invalid_argument(
          std::string("sector widths for ") + to_string(t) +
          " must lie in (0, pi]");
    }
  }
}

double h_position_halfplane(const sim::VesselState& ego,
                            const sim::VesselState& other, double beta,
                            double v_max) {
  check_positive(v_max, "v_max");
  const double n = ego.theta + beta;
  return (-std::sin(n) * (other.px - ego.px) +
          std::cos(n) * (other.py - ego.py)) /
         v_max;
}

double h_orientation_halfplane(const sim::VesselState& ego,
                               const sim::VesselState& other, double gamma,
                               double omega_max) {
  check_positive(omega_max, "omega_max");
  return std::asin(std::sin(other.theta - (ego.theta + gamma))) / omega_max;
}

double h_change_course(double theta_ref, double delta_signed,
                       double theta_now, double alpha_max) {
  check_positive(alpha_max, "alpha_max");
  return (theta_ref + delta_signed - theta_now) / alpha_max;
}

TangentAngle tangent_angle(const sim::VesselState& ego,
                           const sim::VesselState& other, double r_zone) {
  check_positive(r_zone, "r_zone");
  const double d = distance(ego, other);
  if (!(d > 0.0)) {
    throw std::domain_error("tangent_angle: coincident vessel positions");
  }
  if (d < 2.0 * r_zone) {
    return {util::pi / 2.0, true};
  }
  return {std::asin(2.0 * r_zone / d), false};
}

double h_velocity_halfplane(const sim::VesselState& ego,
                            const sim::VesselState& other, double eps_signed,
                            double a_max) {
  check_positive(a_max, "a_max");
  const double d = distance(ego, other);
  if (!(d > 0.0)) {
    throw std::domain_error(
        "h_velocity_halfplane: coincident vessel positions");
  }
  const double rx = other.px - ego.px;
  const double ry = other.py - ego.py;
  const double ang = eps_signed + util::pi / 2.0;
  const double ex = std::cos(ang) * rx - std::sin(ang) * ry;
  const double ey = std::sin(ang) * rx + std::cos(ang) * ry;
  const auto vrel = sim::relative_velocity(ego, other);
  return (ex * vrel[0] + ey * vrel[1]) / (a_max * d);
}

double h_time_horizon(const sim::VesselState& ego,
                      const sim::VesselState& other, double t_horizon,
                      double a_max) {
  check_positive(t_horizon, "t_horizon");
  check_positive(a_max, "a_max");
  const double d = distance(ego, other);
  const auto vrel = sim::relative_velocity(ego, other);
  return (std::hypot(vrel[0], vrel[1]) - d / t_horizon) / a_max;
}

double h_drives_faster(const sim::VesselState& ego,
                       const sim::VesselState& other, double a_max) {
  check_positive(a_max, "a_max");
  return (ego.v - other.v) / a_max;
}

double velocity_obstacle_robustness(const sim::VesselState& ego,
                                    const sim::VesselState& other,
                                    double r_zone, double t_horizon,
                                    double a_max) {
  const double eps = tangent_angle(ego, other, r_zone).eps;
  const double lo = h_velocity_halfplane(ego, other, -eps, a_max);
  const double hi = h_velocity_halfplane(ego, other, eps, a_max);
  const double th = h_time_horizon(ego, other, t_horizon, a_max);
  return std::min({lo, -hi, th});
}

}  // namespace marfal::rules
