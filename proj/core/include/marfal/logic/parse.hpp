#pragma once

#include <cstddef>
#include <string>

#include "marfal/logic/formula.hpp"

namespace marfal::logic {

class ParseError : public MonitorError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : MonitorError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Parses the textual formula grammar:
//
//   formula  := disj ('implies' formula)?          right associative
//   disj     := conj ('or' conj)*
//   conj     := until ('and' until)*
//   until    := unary ('U' interval until)?
//   unary    := 'not' unary | 'F' interval unary | 'G' interval unary | prim
//   prim     := 'true' | predicate-name | '(' formula ')'
//   interval := '[' number ',' (number | 'inf') ']'
//
// Predicate names match [a-z_][a-z0-9_]* and must exist in the registry.
// Interval bounds are divided by time_unit and rounded to the nearest step,
// so formulas written over continuous time parse against a sampled trace by
// passing the trace's dt.
Formula parse_formula(const std::string& text, const PredicateRegistry& reg,
                      double time_unit = 1.0);

}  // namespace marfal::logic
