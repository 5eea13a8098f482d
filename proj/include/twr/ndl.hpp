#pragma once

// Nonrecursive datalog programs (rewriting targets). Intensional predicates
// may have arity > 2; extensional atoms keep the ontology's arities.

#include <string>
#include <vector>

#include "twr/core.hpp"

namespace twr {

struct NDLBodyAtom {
  bool is_eq = false;
  Atom atom;              // when !is_eq; args are variables
  std::string lhs, rhs;   // when is_eq

  friend bool operator==(const NDLBodyAtom&, const NDLBodyAtom&) = default;
  friend auto operator<=>(const NDLBodyAtom&, const NDLBodyAtom&) = default;
};

struct NDLClause {
  Atom head;
  std::vector<NDLBodyAtom> body;

  friend bool operator==(const NDLClause&, const NDLClause&) = default;
  friend auto operator<=>(const NDLClause&, const NDLClause&) = default;
};

struct NDLProgram {
  std::vector<NDLClause> clauses;
  std::string goal;

  size_t size() const;  // atom occurrences across all clauses
  std::vector<std::string> intensional() const;  // head predicates, sorted
  // safety (head vars bound in body) + acyclic dependency check;
  // returns predicates in a bottom-up evaluation order
  std::vector<std::string> check_and_order() const;
};

}  // namespace twr
