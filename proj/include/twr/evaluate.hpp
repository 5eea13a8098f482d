#pragma once

// Evaluation back-ends: active-domain first-order evaluation, bottom-up
// nonrecursive datalog, certain answers via the chase, and dynamic
// programming for tree-shaped CQs.

#include <set>
#include <string>
#include <vector>

#include "twr/chase.hpp"
#include "twr/core.hpp"
#include "twr/ndl.hpp"

namespace twr {

struct AnswerSet {
  size_t arity = 0;
  std::set<std::vector<std::string>> tuples;

  bool holds() const { return !tuples.empty(); }  // Boolean queries
  friend bool operator==(const AnswerSet&, const AnswerSet&) = default;
};

// Active-domain semantics; quantifiers range over the individuals of d.
AnswerSet eval_fo(const Formula& f, const std::vector<std::string>& answer_vars,
                  const DataInstance& d);

// Bottom-up evaluation in the order given by check_and_order().
AnswerSet eval_ndl(const NDLProgram& p, const DataInstance& d);

// Homomorphisms of q into the chase of (t, d), answer variables on constants.
AnswerSet certain_answers(const Ontology& t, const DataInstance& d,
                          const ConjunctiveQuery& q);

// Semi-join reduction + enumeration over the Gaifman tree of q.
AnswerSet eval_tree_cq(const ConjunctiveQuery& q, const DataInstance& d);

}  // namespace twr
