#include "marfal/logic/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "marfal/util/angles.hpp"

namespace marfal::logic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// How an atom's raw value enters the semantics.
enum class AtomClass : std::uint8_t { zero, finite, lifted };

struct AtomTable {
  bool ia = false;
  std::vector<AtomClass> cls;  // indexed by PredicateId, ia mode only

  static AtomTable plain() { return {}; }

  static AtomTable interface(const PredicateRegistry& reg,
                             const std::vector<PredicateId>& input_set,
                             const std::vector<PredicateId>& output_set) {
    AtomTable t;
    t.ia = true;
    t.cls.assign(static_cast<std::size_t>(reg.size()), AtomClass::zero);
    for (PredicateId id : input_set) {
      reg.at(id);  // range check
      t.cls[static_cast<std::size_t>(id)] = AtomClass::finite;
    }
    for (PredicateId id : output_set) {
      reg.at(id);
      if (t.cls[static_cast<std::size_t>(id)] == AtomClass::finite) {
        throw std::invalid_argument(
            "ia_robustness: predicate '" + reg.at(id).name +
            "' appears in both interface sets");
      }
      t.cls[static_cast<std::size_t>(id)] = AtomClass::lifted;
    }
    return t;
  }

  double value(const PredicateRegistry& reg, PredicateId id,
               const JointFrame& frame) const {
    const double h = reg.at(id).h(frame);
    if (!ia) return h;
    switch (cls[static_cast<std::size_t>(id)]) {
      case AtomClass::finite:
        return h;
      case AtomClass::lifted:
        return util::strict_sgn(h) * kInf;
      case AtomClass::zero:
        return 0.0;
    }
    return 0.0;
  }
};

[[noreturn]] void throw_horizon(int k, long needed, int last) {
  throw MonitorError("insufficient horizon: step " + std::to_string(k) +
                     " needs the trace up to step " + std::to_string(needed) +
                     " but it ends at step " + std::to_string(last));
}

class Evaluator {
 public:
  Evaluator(Formula f, const PredicateRegistry& reg, const JointSignal& sig,
            AtomTable table)
      : formula_(std::move(f)), reg_(reg), sig_(sig),
        table_(std::move(table)) {}

  double at(int k) {
    if (sig_.empty()) throw MonitorError("robustness: empty signal");
    if (k < 0 || k > sig_.last_step()) {
      throw MonitorError("robustness: step " + std::to_string(k) +
                         " outside the trace");
    }
    return rob(formula_, k);
  }

  void invalidate_from(int step) {
    if (step < 0) step = 0;
    for (auto& [node, values] : memo_) {
      if (static_cast<int>(values.size()) > step) {
        values.resize(static_cast<std::size_t>(step));
      }
    }
  }

  void reset() { memo_.clear(); }

 private:
  double rob(const Formula& f, int k) {
    switch (f.kind()) {
      case Formula::Kind::constant_true:
        return kInf;
      case Formula::Kind::atom:
        return cached(f, k, [&] {
          return table_.value(reg_, f.atom_id(),
                              sig_.frames[static_cast<std::size_t>(k)]);
        });
      case Formula::Kind::negation:
        return -rob(f.lhs(), k);
      case Formula::Kind::disjunction:
        return cached(f, k,
                      [&] { return std::max(rob(f.lhs(), k), rob(f.rhs(), k)); });
      case Formula::Kind::until:
        return cached(f, k, [&] { return until(f, k); });
    }
    throw MonitorError("robustness: unknown node kind");
  }

  double until(const Formula& f, int k) {
    const Interval& iv = f.interval();
    const int last = sig_.last_step();
    const long lo = static_cast<long>(k) + iv.lo;
    const long hi = iv.hi ? static_cast<long>(k) + *iv.hi
                          : static_cast<long>(last);
    if (iv.hi && hi > last) throw_horizon(k, hi, last);
    if (lo > last) throw_horizon(k, lo, last);

    const Formula lhs = f.lhs();
    const Formula rhs = f.rhs();
    double best = -kInf;
    double run = kInf;  // min of lhs over [k, i)
    for (long i = k; i <= hi; ++i) {
      if (i >= lo) {
        best = std::max(best, std::min(rob(rhs, static_cast<int>(i)), run));
      }
      if (i < hi) {
        run = std::min(run, rob(lhs, static_cast<int>(i)));
      }
    }
    return best;
  }

  template <typename Fn>
  double cached(const Formula& f, int k, Fn&& compute) {
    auto& values = memo_[f.id()];
    const auto idx = static_cast<std::size_t>(k);
    if (values.size() <= idx) {
      values.resize(idx + 1, std::numeric_limits<double>::quiet_NaN());
    }
    if (std::isnan(values[idx])) {
      values[idx] = compute();
    }
    return values[idx];
  }

  Formula formula_;
  const PredicateRegistry& reg_;
  const JointSignal& sig_;
  AtomTable table_;
  std::unordered_map<const void*, std::vector<double>> memo_;
};

bool sat(const Formula& f, const PredicateRegistry& reg, const JointSignal& sig,
         int k) {
  switch (f.kind()) {
    case Formula::Kind::constant_true:
      return true;
    case Formula::Kind::atom:
      return reg.at(f.atom_id()).h(sig.frames[static_cast<std::size_t>(k)]) >
             0.0;
    case Formula::Kind::negation:
      return !sat(f.lhs(), reg, sig, k);
    case Formula::Kind::disjunction:
      return sat(f.lhs(), reg, sig, k) || sat(f.rhs(), reg, sig, k);
    case Formula::Kind::until: {
      const Interval& iv = f.interval();
      const int last = sig.last_step();
      const long lo = static_cast<long>(k) + iv.lo;
      const long hi = iv.hi ? static_cast<long>(k) + *iv.hi
                            : static_cast<long>(last);
      if (iv.hi && hi > last) throw_horizon(k, hi, last);
      if (lo > last) throw_horizon(k, lo, last);
      for (long i = k; i <= hi; ++i) {
        if (i >= lo && sat(f.rhs(), reg, sig, static_cast<int>(i))) {
          return true;
        }
        if (i < hi && !sat(f.lhs(), reg, sig, static_cast<int>(i))) {
          return false;
        }
      }
      return false;
    }
  }
  throw MonitorError("boolean_sat: unknown node kind");
}

}  // namespace

double robustness(const Formula& f, const PredicateRegistry& reg,
                  const JointSignal& sig, int k) {
  return Evaluator(f, reg, sig, AtomTable::plain()).at(k);
}

bool boolean_sat(const Formula& f, const PredicateRegistry& reg,
                 const JointSignal& sig, int k) {
  if (sig.empty()) throw MonitorError("boolean_sat: empty signal");
  if (k < 0 || k > sig.last_step()) {
    throw MonitorError("boolean_sat: step " + std::to_string(k) +
                       " outside the trace");
  }
  return sat(f, reg, sig, k);
}

double ia_robustness(const Formula& f, const PredicateRegistry& reg,
                     const JointSignal& sig, int k,
                     const std::vector<PredicateId>& input_set,
                     const std::vector<PredicateId>& output_set) {
  return Evaluator(f, reg, sig, AtomTable::interface(reg, input_set,
                                                     output_set))
      .at(k);
}

double input_vacuity(const Formula& f, const PredicateRegistry& reg,
                     const JointSignal& sig, const InterfaceSets& sets) {
  return ia_robustness(f, reg, sig, 0, sets.inputs, {});
}

double output_robustness(const Formula& f, const PredicateRegistry& reg,
                         const JointSignal& sig, const InterfaceSets& sets) {
  std::vector<PredicateId> rest;
  for (PredicateId id : f.atoms()) {
    if (std::find(sets.outputs.begin(), sets.outputs.end(), id) ==
        sets.outputs.end()) {
      rest.push_back(id);
    }
  }
  return ia_robustness(f, reg, sig, 0, sets.outputs, rest);
}

int vacuity_indicator(double rho_in) { return rho_in > 0.0 ? 1 : 0; }

struct Monitor::Impl {
  Evaluator eval;
};

Monitor::Monitor(Formula f, const PredicateRegistry& reg,
                 const JointSignal& sig)
    : impl_(new Impl{Evaluator(std::move(f), reg, sig, AtomTable::plain())}) {}

Monitor::Monitor(Formula f, const PredicateRegistry& reg,
                 const JointSignal& sig, std::vector<PredicateId> input_set,
                 std::vector<PredicateId> output_set)
    : impl_(new Impl{Evaluator(
          std::move(f), reg, sig,
          AtomTable::interface(reg, input_set, output_set))}) {}

Monitor::~Monitor() = default;
Monitor::Monitor(Monitor&&) noexcept = default;
Monitor& Monitor::operator=(Monitor&&) noexcept = default;

double Monitor::evaluate(int k) { return impl_->eval.at(k); }

void Monitor::invalidate_from(int step) { impl_->eval.invalidate_from(step); }

void Monitor::reset() { impl_->eval.reset(); }

}  // namespace marfal::logic
