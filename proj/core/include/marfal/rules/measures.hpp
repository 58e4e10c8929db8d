#pragma once

#include "marfal/rules/params.hpp"
#include "marfal/sim/vessel.hpp"

namespace marfal::rules {

// Quantitative satisfaction measures for the rule predicates. Every measure
// is scaled by the matching actuation bound so the values compare as times:
// how many seconds of full actuation separate the scene from the predicate
// boundary.

// Positive when the other vessel lies left of the half-plane through the ego
// position with normal direction theta_e + beta.
double h_position_halfplane(const sim::VesselState& ego,
                            const sim::VesselState& other, double beta,
                            double v_max);

// Positive when the other vessel's heading lies within (gamma, gamma + pi)
// relative to the ego heading.
double h_orientation_halfplane(const sim::VesselState& ego,
                               const sim::VesselState& other, double gamma,
                               double omega_max);

// Positive once the ego heading has moved past theta_ref + delta_signed.
// Callers encode a starboard requirement as a negative delta_signed.
double h_change_course(double theta_ref, double delta_signed,
                       double theta_now, double alpha_max);

// Half-angle of the collision cone spanned by both safety zones. Saturates
// at pi/2 (with the flag set) once the zones already overlap. Throws
// std::domain_error for coincident positions.
struct TangentAngle {
  double eps = 0.0;
  bool inside_zone = false;
};
TangentAngle tangent_angle(const sim::VesselState& ego,
                           const sim::VesselState& other, double r_zone);

// Positive when the relative velocity points left of the collision-cone edge
// rotated by eps_signed from the line of sight.
double h_velocity_halfplane(const sim::VesselState& ego,
                            const sim::VesselState& other, double eps_signed,
                            double a_max);

// Positive when the closing speed covers the line-of-sight distance within
// t_horizon.
double h_time_horizon(const sim::VesselState& ego,
                      const sim::VesselState& other, double t_horizon,
                      double a_max);

double h_drives_faster(const sim::VesselState& ego,
                       const sim::VesselState& other, double a_max);

// min over the velocity-obstacle conjuncts: inside the cone and closing fast
// enough.
double velocity_obstacle_robustness(const sim::VesselState& ego,
                                    const sim::VesselState& other,
                                    double r_zone, double t_horizon,
                                    double a_max);

}  // namespace marfal::rules
