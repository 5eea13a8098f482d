#pragma once

// Deterministic text formats: .tgd .cq .facts .hg .fo .ndl (UTF-8, LF).

#include <string>

#include "twr/core.hpp"
#include "twr/hypergraph.hpp"
#include "twr/ndl.hpp"

namespace twr {

struct SourceLocation {
  int line = 1, column = 1;
};

Ontology parse_ontology(const std::string& text);
ConjunctiveQuery parse_query(const std::string& text);
DataInstance parse_data(const std::string& text);
Hypergraph parse_hypergraph(const std::string& text);
Formula parse_formula(const std::string& text);
NDLProgram parse_ndl(const std::string& text);

std::string print(const Ontology& t);
std::string print(const ConjunctiveQuery& q);
std::string print(const DataInstance& a);
std::string print(const Hypergraph& h);
std::string print(const Formula& f);
std::string print(const NDLProgram& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace twr
