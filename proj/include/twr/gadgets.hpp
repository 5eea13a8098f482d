#pragma once

// Families of ontologies, queries and data instances built from hypergraphs
// and graphs, plus the propositionalization bridge from rewritings back to
// Boolean formulas.

#include <map>
#include <string>
#include <vector>

#include "twr/boolmodels.hpp"
#include "twr/core.hpp"
#include "twr/hypergraph.hpp"

namespace twr {

struct OBDAInstance {
  Ontology ontology;
  ConjunctiveQuery query;
};

// Degree-2 hypergraph with incidence maps -> Boolean CQ q_H with one binary
// atom R_v per vertex over edge variables z_e, and ontology T_H with one tgd
// A_e per edge.
OBDAInstance hypergraph_to_obda(const Hypergraph& h);

// { R_v(a,a) | alpha(v)=1 } + { A_e(a) | beta(e)=1 }
DataInstance assignment_data(const Hypergraph& h, const std::vector<bool>& alpha,
                             const std::vector<bool>& beta);

// Assignment on p_v / p_e for hypergraph_function.
Assignment hypergraph_assignment(const Hypergraph& h, const std::vector<bool>& alpha,
                                 const std::vector<bool>& beta);

// ------------------------------------------------------- propositionalization

using LiteralMap = std::map<Atom, BForm>;

// Strip quantifiers by instantiating every variable to the individual a,
// turn equalities into truth, and map the resulting ground atoms.
BForm propositionalize(const Formula& f, const LiteralMap& m);

// R_v(a,a) -> p_v, A_e(a) -> p_e for the hypergraph_to_obda signature.
LiteralMap hypergraph_literal_map(const Hypergraph& h);

// ------------------------------------------------------------ clique family

// Hypergraph program computing "the graph on n vertices given by the edge
// variables e_j_j' has a k-clique".
Hypergraph clique_hgp(size_t n, size_t k);

struct CliqueInstance {
  size_t n = 0, k = 0;
  std::vector<bool> edges;  // pairs (j,j') with j<j', lexicographic

  size_t pair_index(size_t j, size_t jp) const;  // 0-based position, j<jp
  bool edge(size_t j, size_t jp) const;          // unordered
};

bool brute_clique(const CliqueInstance& g);

// Assignment on the e_j_j' variables of clique_hgp(n,k).
Assignment clique_assignment(const CliqueInstance& g);

// Boolean CQ q_{n,k} and depth-2 ontology T_{n,k}.
OBDAInstance clique_obda(size_t n, size_t k);

// Single-individual data instance encoding the edge set.
DataInstance clique_data(const CliqueInstance& g);

// P_j_j'(a,a) -> e_j_j'; T/A'/B' atoms -> 0; U, Q, A, B atoms -> 1.
LiteralMap clique_literal_map(size_t n, size_t k);

}  // namespace twr
