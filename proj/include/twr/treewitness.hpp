#pragma once

// Tree witnesses: ways a fragment of a CQ can map into the anonymous tree
// part of a canonical model, with roots on a data individual.  Provides the
// enumeration, the per-witness formula, the witness hypergraph and the
// witness degree.

#include <string>
#include <vector>

#include "twr/chase.hpp"
#include "twr/core.hpp"
#include "twr/hypergraph.hpp"

namespace twr {

struct TreeWitness {
  std::vector<std::string> roots;      // sorted, may be empty
  std::vector<std::string> internals;  // sorted, non-empty existential vars
  std::vector<Atom> covered;           // q_t: all atoms touching an internal var
  std::vector<Generator> generators;   // sorted, non-empty

  friend bool operator==(const TreeWitness&, const TreeWitness&) = default;
  friend auto operator<=>(const TreeWitness&, const TreeWitness&) = default;
};

struct TWLimits {
  size_t max_tree_witnesses = 10000;
};

// All tree witnesses for q and t, sorted by (internals, roots).
std::vector<TreeWitness> enumerate_tree_witnesses(const ConjunctiveQuery& q,
                                                  const Ontology& t,
                                                  TWLimits lim = {});

// Disjunction over the generators of exists z (rho(z) and /\ x=z for the
// roots x); bound variables are chosen fresh with respect to `avoid`.
Formula tw_formula(const TreeWitness& t,
                   const std::vector<std::string>& avoid = {});

// Disjoint covered sets / disjoint-or-nested covered sets.
bool independent(const TreeWitness& a, const TreeWitness& b);
bool compatible(const TreeWitness& a, const TreeWitness& b);

// Vertex name for a query atom usable in the hypergraph text format.
std::string atom_key(const Atom& a);

// Hypergraph with one vertex per query atom (labelled by its own variable)
// and one hyperedge per witness ("t0", "t1", ... labelled likewise).
Hypergraph tw_hypergraph(const ConjunctiveQuery& q,
                         const std::vector<TreeWitness>& tws);

// 1 + max number of witnesses sharing one internal variable.
size_t tw_degree(const ConjunctiveQuery& q,
                 const std::vector<TreeWitness>& tws);

}  // namespace twr
