#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "marfal/logic/signal.hpp"

namespace marfal::logic {

class MonitorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PredicateId = int;

// Role a predicate plays in an interface-aware specification. Purely
// metadata; the evaluation semantics take explicit id sets.
enum class PredicateRole { input, output, none };

struct Predicate {
  std::string name;
  PredicateRole role = PredicateRole::none;
  std::function<double(const JointFrame&)> h;  // quantitative satisfaction
};

class PredicateRegistry {
 public:
  PredicateId add(std::string name, PredicateRole role,
                  std::function<double(const JointFrame&)> h);
  const Predicate& at(PredicateId id) const;
  std::optional<PredicateId> find(const std::string& name) const;
  int size() const { return static_cast<int>(preds_.size()); }

  std::vector<PredicateId> ids_with_role(PredicateRole role) const;

 private:
  std::vector<Predicate> preds_;
};

// Step-indexed interval. An absent upper bound means "until the trace ends".
struct Interval {
  int lo = 0;
  std::optional<int> hi;

  void validate() const;
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

// Immutable formula DAG over the core operator set {true, atom, not, or,
// until}. Everything else (and, implies, F, G) is derived sugar. The constant
// true has robustness +inf so that derived F/G keep exact quantitative
// semantics.
class Formula {
 public:
  enum class Kind { constant_true, atom, negation, disjunction, until };

  static Formula boolean_true();
  static Formula atom(PredicateId id);
  static Formula negation(Formula f);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula until(Formula lhs, Interval i, Formula rhs);

  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula eventually(Interval i, Formula f);
  static Formula always(Interval i, Formula f);

  Kind kind() const { return node_->kind; }
  const Interval& interval() const { return node_->interval; }
  PredicateId atom_id() const { return node_->atom; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  // Identity of the underlying node, used for memoization.
  const void* id() const { return node_.get(); }

  bool structurally_equal(const Formula& other) const;

  // Collects the distinct atom ids appearing in the formula.
  std::vector<PredicateId> atoms() const;

  // Minimal number of trailing steps an evaluation at step k may touch.
  // Unbounded intervals count only their lower bound.
  int horizon() const;

  // Canonical text form; parse_formula(str(reg), reg) reproduces the DAG.
  std::string str(const PredicateRegistry& reg) const;

 private:
  struct Node {
    Kind kind;
    Interval interval;
    PredicateId atom = -1;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace marfal::logic
