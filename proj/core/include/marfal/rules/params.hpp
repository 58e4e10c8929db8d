#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace marfal::rules {

enum class EncounterType { crossing = 0, head_on = 1, overtake = 2 };

inline constexpr std::array<EncounterType, 3> kEncounterTypes = {
    EncounterType::crossing, EncounterType::head_on, EncounterType::overtake};

const char* to_string(EncounterType t);
EncounterType encounter_type_from_string(const std::string& s);

// Relative position / orientation sector for one encounter geometry, in rad.
// Bounds may extend past +-pi (they enter periodic half-plane terms); width
// must stay in (0, pi].
struct SectorBounds {
  double beta_lo = 0.0;
  double beta_hi = 0.0;
  double gamma_lo = 0.0;
  double gamma_hi = 0.0;
};

struct RuleParameters {
  double t_maneuver = 0.0;    // s, maneuver window length
  double t_persistent = 0.0;  // s, persistence window length
  double t_horizon = 0.0;     // s, velocity-obstacle look-ahead
  double r_zone = 0.0;        // m, safety zone radius per vessel
  double delta = 0.0;         // rad, required course change

  SectorBounds crossing;
  SectorBounds head_on;
  SectorBounds overtake;

  const SectorBounds& sector(EncounterType t) const;

  // Checks positivity and that the window lengths are positive multiples of
  // the simulation step.
  void validate(double dt) const;
};

}  // namespace marfal::rules
