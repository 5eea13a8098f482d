#include "twr/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace twr {

int Hypergraph::add_vertex(const std::string& name, Label l) {
  if (vertex_id(name) >= 0) fail(Err::NameClash, "duplicate vertex " + name);
  vertices.push_back({name, std::move(l), -1, -1});
  return (int)vertices.size() - 1;
}

int Hypergraph::add_edge(const std::string& name, std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  edge_names.push_back(name);
  edges.push_back(std::move(vs));
  return (int)edges.size() - 1;
}

int Hypergraph::vertex_id(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); i++)
    if (vertices[i].name == name) return (int)i;
  return -1;
}

int Hypergraph::edge_id(const std::string& name) const {
  for (size_t i = 0; i < edge_names.size(); i++)
    if (edge_names[i] == name) return (int)i;
  return -1;
}

std::vector<std::vector<int>> Hypergraph::incident() const {
  std::vector<std::vector<int>> inc(vertices.size());
  for (size_t e = 0; e < edges.size(); e++)
    for (int v : edges[e]) inc[v].push_back((int)e);
  return inc;
}

size_t Hypergraph::degree() const {
  size_t d = 0;
  for (const auto& i : incident()) d = std::max(d, i.size());
  return d;
}

bool Hypergraph::monotone() const {
  for (const auto& v : vertices)
    if (v.label.kind == Label::Kind::NegVar) return false;
  return true;
}

std::vector<std::string> Hypergraph::variables() const {
  std::set<std::string> vs;
  for (const auto& v : vertices)
    if (v.label.kind == Label::Kind::Var || v.label.kind == Label::Kind::NegVar)
      vs.insert(v.label.var);
  return {vs.begin(), vs.end()};
}

void Hypergraph::check_incidence() const {
  auto inc = incident();
  for (size_t v = 0; v < vertices.size(); v++) {
    const auto& vx = vertices[v];
    if (vx.i1 < 0 || vx.i2 < 0)
      fail(Err::MissingIncidence, "vertex " + vx.name + " lacks i1/i2");
    if (vx.i1 == vx.i2)
      fail(Err::DegreeMapInconsistent, "i1(v)=i2(v) for vertex " + vx.name);
    auto in_edge = [&](int e) {
      return std::binary_search(edges[e].begin(), edges[e].end(), (int)v);
    };
    if (!in_edge(vx.i1) || !in_edge(vx.i2))
      fail(Err::DegreeMapInconsistent, "vertex " + vx.name + " not in its incidence edges");
    if (inc[v].size() != 2)
      fail(Err::NotDegreeTwo, "vertex " + vx.name + " has degree " + std::to_string(inc[v].size()));
  }
}

}  // namespace twr
