#pragma once

// Nonrecursive-datalog rewritings: compiling a monotone circuit over query
// atoms and tree witnesses into NDL, the depth-1 pipeline through hypergraph
// programs, and the arbitrary-data closure for NDL programs.

#include <string>
#include <utility>
#include <vector>

#include "twr/boolmodels.hpp"
#include "twr/core.hpp"
#include "twr/ndl.hpp"
#include "twr/treewitness.hpp"

namespace twr {

// The circuit's inputs must be named after the vertices ("P_x_y" atom keys)
// and hyperedges ("t0", "t1", ...) of tw_hypergraph(q, tws).
NDLProgram circuit_to_ndl(const ConjunctiveQuery& q, const Ontology& t,
                          const std::vector<TreeWitness>& tws, const Circuit& c);

struct PipelineTrace {
  std::vector<std::pair<std::string, size_t>> stages;

  std::string to_json() const;
};

struct NDLRewriting {
  NDLProgram program;
  PipelineTrace trace;
};

// Tree witnesses -> witness hypergraph -> hypergraph program -> degree
// normalization -> dual circuit -> polynomial NDL rewriting (depth-1 only).
NDLRewriting depth1_ndl_pipeline(const ConjunctiveQuery& q, const Ontology& t);

// Close every extensional body atom under the entailment order via one
// derived predicate per class of equivalent generator forms.
NDLProgram ndl_to_arbitrary_data(const NDLProgram& p, const Ontology& t);

}  // namespace twr
