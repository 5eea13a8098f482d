#pragma once

// Labelled hypergraphs. One representation serves three uses: plain
// hypergraphs (labels ignored), hypergraph programs (labels meaningful),
// and degree-2 hypergraphs with incidence maps i1/i2 feeding the OBDA
// encoding.

#include <string>
#include <vector>

#include "twr/core.hpp"

namespace twr {

struct Label {
  enum class Kind { Zero, One, Var, NegVar };
  Kind kind = Kind::One;
  std::string var;  // Var / NegVar

  friend bool operator==(const Label&, const Label&) = default;
};

inline Label lbl0() { return {Label::Kind::Zero, ""}; }
inline Label lbl1() { return {Label::Kind::One, ""}; }
inline Label lblv(std::string v) { return {Label::Kind::Var, std::move(v)}; }
inline Label lblnv(std::string v) { return {Label::Kind::NegVar, std::move(v)}; }

struct Hypergraph {
  struct Vertex {
    std::string name;
    Label label;
    int i1 = -1, i2 = -1;  // incidence map edge ids, -1 = unset
  };
  std::vector<Vertex> vertices;
  std::vector<std::string> edge_names;
  std::vector<std::vector<int>> edges;  // vertex ids, each sorted

  int add_vertex(const std::string& name, Label l);
  int add_edge(const std::string& name, std::vector<int> vs);
  int vertex_id(const std::string& name) const;  // -1 if absent
  int edge_id(const std::string& name) const;

  size_t size() const { return edges.size(); }  // program size = #hyperedges
  size_t degree() const;                        // max #edges per vertex
  std::vector<std::vector<int>> incident() const;  // vertex -> edge ids
  bool monotone() const;                           // no negated labels
  std::vector<std::string> variables() const;      // sorted distinct label vars

  // checks i1/i2 are total, distinct per vertex, and v in i1(v) and i2(v),
  // and that every vertex has degree exactly 2
  void check_incidence() const;
};

}  // namespace twr
