#pragma once

// Positive-existential and first-order rewritings: the tree-witness
// rewriting, its compact form for compatible witnesses, the divide-and-
// conquer FO-rewriting, and the closure that lifts complete-data rewritings
// to arbitrary data.

#include <functional>
#include <string>
#include <vector>

#include "twr/core.hpp"
#include "twr/treewitness.hpp"

namespace twr {

struct RewriteLimits {
  size_t max_disjuncts = 100000;
  size_t max_size = 1000000;  // pe_size cap
  size_t max_tree_witnesses = 10000;
};

struct PERewriting {
  Formula formula;
  std::vector<std::string> answer_vars;
  size_t disjuncts = 0;
  std::vector<TreeWitness> witnesses;
  std::vector<std::string> notes;
};

// Disjunction over independent witness sets (increasing cardinality, then
// lexicographic).
PERewriting tw_rewrite(const ConjunctiveQuery& q, const Ontology& t,
                       RewriteLimits lim = {});

// Streams the independent witness sets of the rewriting in enumeration
// order (the empty set first) instead of materializing the disjunction;
// returns the witnesses the indices refer to.  Exists because the full
// rewriting can be exponentially large.
std::vector<TreeWitness> tw_subsets(
    const ConjunctiveQuery& q, const Ontology& t,
    const std::function<void(const std::vector<size_t>&)>& emit,
    RewriteLimits lim = {});

// The single disjunct of the rewriting for one independent witness set.
Formula tw_disjunct(const ConjunctiveQuery& q, const std::vector<TreeWitness>& tws,
                    const std::vector<size_t>& subset);

// Per-atom disjunctions; requires all witness pairs compatible.
PERewriting compact_tw_rewrite(const ConjunctiveQuery& q, const Ontology& t,
                               RewriteLimits lim = {});

enum class SplitStrategy { Balanced, LeafFirst };

// Divide and conquer on one existential variable at a time.
PERewriting split_rewrite(const ConjunctiveQuery& q, const Ontology& t,
                          SplitStrategy strategy, RewriteLimits lim = {});

// Replace every atom by the disjunction of its entailing generator forms,
// making a complete-data rewriting valid over arbitrary data.
Formula to_arbitrary_data(const Formula& f, const Ontology& t,
                          const ConjunctiveQuery& q);

}  // namespace twr
