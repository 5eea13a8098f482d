#include "twr/gadgets.hpp"

#include <algorithm>

namespace twr {

namespace {

std::string num2(size_t j, size_t jp) {
  return std::to_string(j) + "_" + std::to_string(jp);
}

Term va(std::string n) { return mkvar(std::move(n)); }
Term ca() { return mkconst("a"); }

}  // namespace

OBDAInstance hypergraph_to_obda(const Hypergraph& h) {
  h.check_incidence();
  OBDAInstance out;
  for (const auto& v : h.vertices) {
    out.query.atoms.push_back(atom2("R_" + v.name, va("z_" + h.edge_names[v.i1]),
                                    va("z_" + h.edge_names[v.i2])));
  }
  out.query.normalize();
  for (size_t e = 0; e < h.edges.size(); ++e) {
    TGD tgd;
    tgd.body = atom1("A_" + h.edge_names[e], va("x"));
    tgd.head_existential = "y";
    for (int vi : h.edges[e]) {
      const auto& v = h.vertices[vi];
      if (v.i1 == (int)e) tgd.head.push_back(atom2("R_" + v.name, va("y"), va("x")));
      if (v.i2 == (int)e) tgd.head.push_back(atom2("R_" + v.name, va("x"), va("y")));
    }
    out.ontology.tgds.push_back(std::move(tgd));
  }
  validate(out.ontology);
  validate(out.query);
  return out;
}

DataInstance assignment_data(const Hypergraph& h, const std::vector<bool>& alpha,
                             const std::vector<bool>& beta) {
  if (alpha.size() != h.vertices.size() || beta.size() != h.edges.size())
    fail(Err::LengthMismatch, "assignment length does not match the hypergraph");
  DataInstance d;
  for (size_t v = 0; v < alpha.size(); ++v)
    if (alpha[v]) d.atoms.push_back(atom2("R_" + h.vertices[v].name, ca(), ca()));
  for (size_t e = 0; e < beta.size(); ++e)
    if (beta[e]) d.atoms.push_back(atom1("A_" + h.edge_names[e], ca()));
  d.normalize();
  return d;
}

Assignment hypergraph_assignment(const Hypergraph& h, const std::vector<bool>& alpha,
                                 const std::vector<bool>& beta) {
  if (alpha.size() != h.vertices.size() || beta.size() != h.edges.size())
    fail(Err::LengthMismatch, "assignment length does not match the hypergraph");
  Assignment a;
  for (size_t v = 0; v < alpha.size(); ++v) a[h.vertices[v].name] = alpha[v];
  for (size_t e = 0; e < beta.size(); ++e) a[h.edge_names[e]] = beta[e];
  return a;
}

// ------------------------------------------------------- propositionalization

BForm propositionalize(const Formula& f, const LiteralMap& m) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True:
      return bf_const(true);
    case K::False:
      return bf_const(false);
    case K::Eq:
      return bf_const(true);
    case K::Atom: {
      Atom g = f.atom;
      for (auto& t : g.args) t = ca();
      auto it = m.find(g);
      if (it == m.end()) fail(Err::UnmappedAtom, "no literal for atom " + g.pred);
      return it->second;
    }
    case K::Not:
      return bf_not(propositionalize(f.kids[0], m));
    case K::And:
    case K::Or: {
      std::vector<BForm> kids;
      for (const auto& k : f.kids) kids.push_back(propositionalize(k, m));
      return f.kind == K::And ? bf_and(std::move(kids)) : bf_or(std::move(kids));
    }
    case K::Exists:
    case K::Forall:
      return propositionalize(f.kids[0], m);
  }
  fail(Err::Syntax, "bad formula node");
}

LiteralMap hypergraph_literal_map(const Hypergraph& h) {
  LiteralMap m;
  for (const auto& v : h.vertices) m[atom2("R_" + v.name, ca(), ca())] = bf_lit(v.name);
  for (const auto& e : h.edge_names) m[atom1("A_" + e, ca())] = bf_lit(e);
  return m;
}

// ------------------------------------------------------------ clique family

Hypergraph clique_hgp(size_t n, size_t k) {
  if (k < 1 || k > n || n < 2 || n > 12)
    fail(Err::BadParameters, "clique_hgp needs 1 <= k <= n <= 12");
  Hypergraph h;
  for (size_t j = 1; j <= n; ++j)
    for (size_t jp = j + 1; jp <= n; ++jp)
      h.add_vertex("w_" + num2(j, jp), lblv("e_" + num2(j, jp)));
  for (size_t j = 1; j <= n; ++j)
    for (size_t jp = 1; jp <= n; ++jp)
      if (j != jp) h.add_vertex("u_" + num2(j, jp), lbl1());
  for (size_t i = 1; i <= k; ++i) h.add_vertex("v_" + std::to_string(i), lbl0());
  for (size_t j = 1; j <= n; ++j)
    for (size_t jp = j + 1; jp <= n; ++jp) {
      int w = h.vertex_id("w_" + num2(j, jp));
      h.add_edge("h_" + num2(j, jp), {w, h.vertex_id("u_" + num2(j, jp))});
      h.add_edge("h_" + num2(jp, j), {w, h.vertex_id("u_" + num2(jp, j))});
    }
  for (size_t i = 1; i <= k; ++i)
    for (size_t j = 1; j <= n; ++j) {
      std::vector<int> vs{h.vertex_id("v_" + std::to_string(i))};
      for (size_t jp = 1; jp <= n; ++jp)
        if (jp != j) vs.push_back(h.vertex_id("u_" + num2(j, jp)));
      h.add_edge("f_" + std::to_string(i) + "_" + std::to_string(j), std::move(vs));
    }
  return h;
}

size_t CliqueInstance::pair_index(size_t j, size_t jp) const {
  // position of (j, jp), j < jp, in lexicographic pair order
  size_t idx = 0;
  for (size_t a = 1; a < j; ++a) idx += n - a;
  return idx + (jp - j - 1);
}

bool CliqueInstance::edge(size_t j, size_t jp) const {
  if (j > jp) std::swap(j, jp);
  return edges.at(pair_index(j, jp));
}

bool brute_clique(const CliqueInstance& g) {
  if (g.edges.size() != g.n * (g.n - 1) / 2)
    fail(Err::LengthMismatch, "edge vector length is not n(n-1)/2");
  std::vector<size_t> pick;
  auto rec = [&](auto&& self, size_t next) -> bool {
    if (pick.size() == g.k) return true;
    for (size_t j = next; j <= g.n; ++j) {
      bool ok = true;
      for (size_t p : pick) ok = ok && g.edge(p, j);
      if (!ok) continue;
      pick.push_back(j);
      if (self(self, j + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 1);
}

Assignment clique_assignment(const CliqueInstance& g) {
  Assignment a;
  for (size_t j = 1; j <= g.n; ++j)
    for (size_t jp = j + 1; jp <= g.n; ++jp) a["e_" + num2(j, jp)] = g.edge(j, jp);
  return a;
}

OBDAInstance clique_obda(size_t n, size_t k) {
  if (k < 1 || k > n || n < 2 || n > 8)
    fail(Err::BadParameters, "clique_obda needs 1 <= k <= n <= 8");
  OBDAInstance out;
  ConjunctiveQuery& q = out.query;
  for (size_t i = 1; i <= k; ++i)
    for (size_t j = 1; j <= n; ++j)
      q.atoms.push_back(atom2("T_" + num2(i, j), va("v_" + std::to_string(i)),
                              va("z_" + num2(i, j))));
  for (size_t j = 1; j <= n; ++j)
    for (size_t jp = j + 1; jp <= n; ++jp) {
      q.atoms.push_back(atom2("P_" + num2(j, jp), va("w_" + num2(j, jp)), va("x_" + num2(j, jp))));
      q.atoms.push_back(atom2("P_" + num2(jp, j), va("w_" + num2(j, jp)), va("x_" + num2(jp, j))));
    }
  for (size_t j = 1; j <= n; ++j)
    for (size_t jp = 1; jp <= n; ++jp) {
      if (j == jp) continue;
      q.atoms.push_back(atom2("Q", va("u_" + num2(j, jp)), va("x_" + num2(j, jp))));
      for (size_t i = 1; i <= k; ++i)
        q.atoms.push_back(atom2("U", va("u_" + num2(j, jp)), va("z_" + num2(i, j))));
    }
  q.normalize();

  Ontology& t = out.ontology;
  for (size_t i = 1; i <= k; ++i)
    for (size_t j = 1; j <= n; ++j) {
      TGD d1;
      d1.body = atom1("A_" + num2(i, j), va("x"));
      d1.head_existential = "y";
      for (size_t jp = 1; jp <= n; ++jp)
        if (jp != j) d1.head.push_back(atom2("T_" + num2(i, jp), va("y"), va("x")));
      d1.head.push_back(atom2("U", va("y"), va("x")));
      d1.head.push_back(atom2("Q", va("y"), va("x")));
      d1.head.push_back(atom1("A'_" + num2(i, j), va("y")));
      t.tgds.push_back(std::move(d1));
      TGD d2;
      d2.body = atom1("A'_" + num2(i, j), va("x"));
      d2.head_existential = "y";
      d2.head.push_back(atom2("T_" + num2(i, j), va("x"), va("y")));
      d2.head.push_back(atom2("U", va("x"), va("y")));
      t.tgds.push_back(std::move(d2));
    }
  for (size_t j = 1; j <= n; ++j)
    for (size_t jp = 1; jp <= n; ++jp) {
      if (j == jp) continue;
      TGD d1;
      d1.body = atom1("B_" + num2(j, jp), va("x"));
      d1.head_existential = "y";
      d1.head.push_back(atom2("P_" + num2(jp, j), va("y"), va("x")));
      d1.head.push_back(atom2("U", va("y"), va("x")));
      d1.head.push_back(atom1("B'_" + num2(j, jp), va("y")));
      t.tgds.push_back(std::move(d1));
      TGD d2;
      d2.body = atom1("B'_" + num2(j, jp), va("x"));
      d2.head_existential = "y";
      d2.head.push_back(atom2("P_" + num2(j, jp), va("x"), va("y")));
      d2.head.push_back(atom2("Q", va("x"), va("y")));
      t.tgds.push_back(std::move(d2));
    }
  validate(t);
  validate(q);
  return out;
}

DataInstance clique_data(const CliqueInstance& g) {
  DataInstance d;
  d.atoms.push_back(atom2("Q", ca(), ca()));
  d.atoms.push_back(atom2("U", ca(), ca()));
  for (size_t i = 1; i <= g.k; ++i)
    for (size_t j = 1; j <= g.n; ++j) d.atoms.push_back(atom1("A_" + num2(i, j), ca()));
  for (size_t j = 1; j <= g.n; ++j)
    for (size_t jp = 1; jp <= g.n; ++jp)
      if (j != jp) d.atoms.push_back(atom1("B_" + num2(j, jp), ca()));
  for (size_t j = 1; j <= g.n; ++j)
    for (size_t jp = j + 1; jp <= g.n; ++jp)
      if (g.edge(j, jp)) {
        d.atoms.push_back(atom2("P_" + num2(j, jp), ca(), ca()));
        d.atoms.push_back(atom2("P_" + num2(jp, j), ca(), ca()));
      }
  d.normalize();
  return d;
}

LiteralMap clique_literal_map(size_t n, size_t k) {
  LiteralMap m;
  for (size_t j = 1; j <= n; ++j)
    for (size_t jp = 1; jp <= n; ++jp) {
      if (j == jp) continue;
      std::string e = "e_" + num2(std::min(j, jp), std::max(j, jp));
      m[atom2("P_" + num2(j, jp), ca(), ca())] = bf_lit(e);
      m[atom1("B_" + num2(j, jp), ca())] = bf_const(true);
      m[atom1("B'_" + num2(j, jp), ca())] = bf_const(false);
    }
  for (size_t i = 1; i <= k; ++i)
    for (size_t j = 1; j <= n; ++j) {
      m[atom2("T_" + num2(i, j), ca(), ca())] = bf_const(false);
      m[atom1("A_" + num2(i, j), ca())] = bf_const(true);
      m[atom1("A'_" + num2(i, j), ca())] = bf_const(false);
    }
  m[atom2("U", ca(), ca())] = bf_const(true);
  m[atom2("Q", ca(), ca())] = bf_const(true);
  return m;
}

}  // namespace twr
