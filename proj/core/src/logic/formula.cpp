#include "marfal/logic/formula.hpp"

#include <algorithm>
#include <unordered_set>

namespace marfal::logic {

namespace {

const char* const kReservedNames[] = {"true", "not", "and", "or",
                                      "implies", "inf"};

}  // namespace

PredicateId PredicateRegistry::add(std::string name, PredicateRole role,
                                   std::function<double(const JointFrame&)> h) {
  if (name.empty()) {
    throw std::invalid_argument("predicate name must not be empty");
  }
  for (const char* reserved : kReservedNames) {
    if (name == reserved) {
      throw std::invalid_argument("predicate name '" + name + "' is reserved");
    }
  }
  if (find(name).has_value()) {
    throw std::invalid_argument("duplicate predicate name '" + name + "'");
  }
  if (!h) {
    throw std::invalid_argument("predicate '" + name + "' needs an evaluator");
  }
  preds_.push_back({std::move(name), role, std::move(h)});
  return static_cast<PredicateId>(preds_.size() - 1);
}

const Predicate& PredicateRegistry::at(PredicateId id) const {
  if (id < 0 || id >= size()) {
    throw std::out_of_range("predicate id out of range");
  }
  return preds_[static_cast<std::size_t>(id)];
}

std::optional<PredicateId> PredicateRegistry::find(
    const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (preds_[static_cast<std::size_t>(i)].name == name) return i;
  }
  return std::nullopt;
}

std::vector<PredicateId> PredicateRegistry::ids_with_role(
    PredicateRole role) const {
  std::vector<PredicateId> out;
  for (int i = 0; i < size(); ++i) {
    if (preds_[static_cast<std::size_t>(i)].role == role) out.push_back(i);
  }
  return out;
}

void Interval::validate() const {
  if (lo < 0) {
    throw std::invalid_argument("interval lower bound must be >= 0");
  }
  if (hi && *hi < lo) {
    throw std::invalid_argument("interval upper bound below lower bound");
  }
}

Formula Formula::boolean_true() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant_true;
  return Formula(std::move(n));
}

Formula Formula::atom(PredicateId id) {
  if (id < 0) {
    throw std::invalid_argument("atom needs a valid predicate id");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->atom = id;
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::negation;
  n->lhs = f.node_;
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::disjunction;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Formula(std::move(n));
}

Formula Formula::until(Formula lhs, Interval i, Formula rhs) {
  i.validate();
  auto n = std::make_shared<Node>();
  n->kind = Kind::until;
  n->interval = i;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return negation(disjunction(negation(std::move(lhs)),
                              negation(std::move(rhs))));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return disjunction(negation(std::move(lhs)), std::move(rhs));
}

Formula Formula::eventually(Interval i, Formula f) {
  return until(boolean_true(), i, std::move(f));
}

Formula Formula::always(Interval i, Formula f) {
  return negation(eventually(i, negation(std::move(f))));
}

bool Formula::structurally_equal(const Formula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::constant_true:
      return true;
    case Kind::atom:
      return a->atom == b->atom;
    case Kind::negation:
      return Formula(a->lhs).structurally_equal(Formula(b->lhs));
    case Kind::disjunction:
      return Formula(a->lhs).structurally_equal(Formula(b->lhs)) &&
             Formula(a->rhs).structurally_equal(Formula(b->rhs));
    case Kind::until:
      return a->interval == b->interval &&
             Formula(a->lhs).structurally_equal(Formula(b->lhs)) &&
             Formula(a->rhs).structurally_equal(Formula(b->rhs));
  }
  return false;
}

namespace {

void collect_atoms(const Formula& f, std::unordered_set<PredicateId>& seen,
                   std::vector<PredicateId>& out) {
  switch (f.kind()) {
    case Formula::Kind::constant_true:
      return;
    case Formula::Kind::atom:
      if (seen.insert(f.atom_id()).second) out.push_back(f.atom_id());
      return;
    case Formula::Kind::negation:
      collect_atoms(f.lhs(), seen, out);
      return;
    case Formula::Kind::disjunction:
    case Formula::Kind::until:
      collect_atoms(f.lhs(), seen, out);
      collect_atoms(f.rhs(), seen, out);
      return;
  }
}

}  // namespace

std::vector<PredicateId> Formula::atoms() const {
  std::unordered_set<PredicateId> seen;
  std::vector<PredicateId> out;
  collect_atoms(*this, seen, out);
  return out;
}

int Formula::horizon() const {
  switch (kind()) {
    case Kind::constant_true:
    case Kind::atom:
      return 0;
    case Kind::negation:
      return lhs().horizon();
    case Kind::disjunction:
      return std::max(lhs().horizon(), rhs().horizon());
    case Kind::until: {
      const Interval& i = interval();
      const int end = i.hi ? *i.hi : i.lo;
      const int rhs_need = end + rhs().horizon();
      const int lhs_need = end >= 1 ? end - 1 + lhs().horizon() : 0;
      return std::max(rhs_need, lhs_need);
    }
  }
  return 0;
}

namespace {

std::string interval_str(const Interval& i) {
  std::string s = "[" + std::to_string(i.lo) + ",";
  s += i.hi ? std::to_string(*i.hi) : std::string("inf");
  s += "]";
  return s;
}

}  // namespace

std::string Formula::str(const PredicateRegistry& reg) const {
  switch (kind()) {
    case Kind::constant_true:
      return "true";
    case Kind::atom:
      return reg.at(atom_id()).name;
    case Kind::negation: {
      const Formula child = lhs();
      // G[i] f is encoded as not (true U[i] not f); print it back as G.
      if (child.kind() == Kind::until &&
          child.lhs().kind() == Kind::constant_true &&
          child.rhs().kind() == Kind::negation) {
        return "G" + interval_str(child.interval()) + " " +
               child.rhs().lhs().str(reg);
      }
      return "not " + child.str(reg);
    }
    case Kind::disjunction:
      return "(" + lhs().str(reg) + " or " + rhs().str(reg) + ")";
    case Kind::until:
      if (lhs().kind() == Kind::constant_true) {
        return "F" + interval_str(interval()) + " " + rhs().str(reg);
      }
      return "(" + lhs().str(reg) + " U" + interval_str(interval()) + " " +
             rhs().str(reg) + ")";
  }
  return "";
}

}  // namespace marfal::logic
