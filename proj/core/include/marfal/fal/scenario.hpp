#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "marfal/rules/params.hpp"
#include "marfal/sim/vessel.hpp"

namespace marfal::fal {

class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Initial condition draw: both vessel states, the goal position, and the
// encounter family whose initial-state set produced it.
struct EnvironmentSetup {
  sim::VesselState ego;
  sim::VesselState adversary;
  std::array<double, 2> goal{};
  rules::EncounterType tag = rules::EncounterType::crossing;
};

struct Provenance {
  int round = -1;         // falsification round, -1 for sampled scenarios
  double objective = 0.0;
  bool vacuous = true;
};

// A reproducible episode: the setup plus the adversary's raw decision vector
// (2 entries per step, decoded by decode_candidate).
struct Scenario {
  EnvironmentSetup setup;
  std::vector<double> z;
  std::optional<Provenance> provenance;
};

// Clamps consecutive (z_{2k}, z_{2k+1}) pairs to [-1, 1] and scales them by
// (a_max, alpha_max).
sim::InputSequence decode_candidate(const std::vector<double>& z,
                                    const sim::VesselLimits& limits);

// Axis-aligned boxes for the initial-state families. Degenerate bounds
// (lo == hi) pin a coordinate.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct StateBox {
  Range px, py, theta, v;
};

struct SetupDistributions {
  StateBox ego;
  StateBox crossing;
  StateBox head_on;
  StateBox overtake;
  Range goal_x, goal_y;

  const StateBox& adversary(rules::EncounterType t) const;
};

EnvironmentSetup sample_environment_setup(rules::EncounterType t,
                                          const SetupDistributions& dist,
                                          std::mt19937_64& rng);

// Uniform over the three encounter families.
EnvironmentSetup sample_environment_setup(const SetupDistributions& dist,
                                          std::mt19937_64& rng);

// Raw decision vector with i.i.d. N(0, sigma^2) entries, as used for baseline
// scenario generation and test sets.
std::vector<double> sample_random_inputs(int n_steps, double sigma,
                                         std::mt19937_64& rng);

// Bounded FIFO scenario store with uniform sampling.
class ScenarioPool {
 public:
  explicit ScenarioPool(int capacity);

  void push(Scenario s);
  const Scenario& sample(std::mt19937_64& rng) const;
  int size() const { return static_cast<int>(entries_.size()); }
  int capacity() const { return capacity_; }
  const std::deque<Scenario>& entries() const { return entries_; }

 private:
  int capacity_;
  std::deque<Scenario> entries_;
};

}  // namespace marfal::fal
