#pragma once

#include <memory>
#include <vector>

#include "marfal/logic/formula.hpp"
#include "marfal/logic/signal.hpp"

namespace marfal::logic {

// Interface role assignment for interface-aware robustness. Builders must
// keep the two sets disjoint; evaluation rejects overlaps.
struct InterfaceSets {
  std::vector<PredicateId> inputs;
  std::vector<PredicateId> outputs;
};

// Quantitative robustness at step k. Throws MonitorError when a bounded
// interval reaches past the trace end ("insufficient horizon") and when the
// signal is empty or k is out of range.
double robustness(const Formula& f, const PredicateRegistry& reg,
                  const JointSignal& sig, int k);

// Boolean satisfaction with the same window handling. Agrees with the sign
// of robustness() whenever no subformula robustness is exactly zero.
bool boolean_sat(const Formula& f, const PredicateRegistry& reg,
                 const JointSignal& sig, int k);

// Interface-aware robustness rho_I^O: atoms in input_set keep their value,
// atoms in output_set are lifted to +-inf * sgn(value) with sgn(0) = -1, and
// all remaining atoms collapse to 0.
double ia_robustness(const Formula& f, const PredicateRegistry& reg,
                     const JointSignal& sig, int k,
                     const std::vector<PredicateId>& input_set,
                     const std::vector<PredicateId>& output_set);

// rho_in = rho_I^{}(phi) at step 0: only declared input atoms stay finite.
double input_vacuity(const Formula& f, const PredicateRegistry& reg,
                     const JointSignal& sig, const InterfaceSets& sets);

// rho_out = rho_O^{P \ O}(phi) at step 0: declared output atoms stay finite,
// every other atom of the formula is lifted to +-inf.
double output_robustness(const Formula& f, const PredicateRegistry& reg,
                         const JointSignal& sig, const InterfaceSets& sets);

// 1 if rho_in > 0 (the specification can only be vacuously satisfied), else 0.
int vacuity_indicator(double rho_in);

// Memoizing evaluator bound to one formula and a signal that may grow by
// appending frames between calls. When earlier frames are edited in place
// (course-reference backfill), call invalidate_from() with the first touched
// step.
class Monitor {
 public:
  // Plain quantitative semantics.
  Monitor(Formula f, const PredicateRegistry& reg, const JointSignal& sig);
  // Interface-aware semantics, same set conventions as ia_robustness().
  Monitor(Formula f, const PredicateRegistry& reg, const JointSignal& sig,
          std::vector<PredicateId> input_set,
          std::vector<PredicateId> output_set);
  ~Monitor();
  Monitor(Monitor&&) noexcept;
  Monitor& operator=(Monitor&&) noexcept;

  double evaluate(int k);
  void invalidate_from(int step);
  void reset();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace marfal::logic
