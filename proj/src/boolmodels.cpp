#include "twr/boolmodels.hpp"

#include <algorithm>
#include <sstream>

namespace twr {

bool eval_label(const Label& l, const Assignment& a) {
  switch (l.kind) {
    case Label::Kind::Zero: return false;
    case Label::Kind::One: return true;
    case Label::Kind::Var:
    case Label::Kind::NegVar: {
      auto it = a.find(l.var);
      if (it == a.end()) fail(Err::UnboundVariable, "no value for " + l.var);
      return l.kind == Label::Kind::Var ? it->second : !it->second;
    }
  }
  return false;
}

static Label negate_label(const Label& l) {
  switch (l.kind) {
    case Label::Kind::Zero: return lbl1();
    case Label::Kind::One: return lbl0();
    case Label::Kind::Var: return lblnv(l.var);
    case Label::Kind::NegVar: return lblv(l.var);
  }
  return lbl0();
}

// ------------------------------------------------------------------ NBP

bool NBP::monotone() const {
  for (const auto& a : arcs)
    if (a.label.kind == Label::Kind::NegVar) return false;
  return true;
}

std::vector<std::string> NBP::variables() const {
  std::set<std::string> vs;
  for (const auto& a : arcs)
    if (a.label.kind == Label::Kind::Var || a.label.kind == Label::Kind::NegVar)
      vs.insert(a.label.var);
  return {vs.begin(), vs.end()};
}

void NBP::check() const {
  for (const auto& a : arcs) {
    if (a.to == s) fail(Err::Syntax, "arc into the source node");
    if (a.from == t) fail(Err::Syntax, "arc out of the target node");
    if (a.from < 0 || a.from >= (int)nodes.size() || a.to < 0 || a.to >= (int)nodes.size())
      fail(Err::Syntax, "arc endpoint out of range");
  }
}

// ------------------------------------------------------------------ circuits

int Circuit::input(const std::string& name) {
  auto it = input_cache_.find(name);
  if (it != input_cache_.end()) return it->second;
  Gate g;
  g.op = Op::Input;
  g.name = name;
  gates.push_back(g);
  int id = (int)gates.size() - 1;
  input_cache_[name] = id;
  return id;
}

int Circuit::constant(bool v) {
  auto key = std::make_tuple((int)Op::Const, (int)v, -1);
  auto it = op_cache_.find(key);
  if (it != op_cache_.end()) return it->second;
  Gate g;
  g.op = Op::Const;
  g.cval = v;
  gates.push_back(g);
  int id = (int)gates.size() - 1;
  op_cache_[key] = id;
  return id;
}

int Circuit::land(int a, int b) {
  if (gates[a].op == Op::Const) return gates[a].cval ? b : a;
  if (gates[b].op == Op::Const) return gates[b].cval ? a : b;
  if (a == b) return a;
  if (gates[a].op == Op::Not && gates[a].a == b) return constant(false);
  if (gates[b].op == Op::Not && gates[b].a == a) return constant(false);
  if (a > b) std::swap(a, b);
  auto key = std::make_tuple((int)Op::And, a, b);
  auto it = op_cache_.find(key);
  if (it != op_cache_.end()) return it->second;
  Gate g;
  g.op = Op::And;
  g.a = a;
  g.b = b;
  gates.push_back(g);
  int id = (int)gates.size() - 1;
  op_cache_[key] = id;
  return id;
}

int Circuit::lor(int a, int b) {
  if (gates[a].op == Op::Const) return gates[a].cval ? a : b;
  if (gates[b].op == Op::Const) return gates[b].cval ? b : a;
  if (a == b) return a;
  if (gates[a].op == Op::Not && gates[a].a == b) return constant(true);
  if (gates[b].op == Op::Not && gates[b].a == a) return constant(true);
  if (a > b) std::swap(a, b);
  auto key = std::make_tuple((int)Op::Or, a, b);
  auto it = op_cache_.find(key);
  if (it != op_cache_.end()) return it->second;
  Gate g;
  g.op = Op::Or;
  g.a = a;
  g.b = b;
  gates.push_back(g);
  int id = (int)gates.size() - 1;
  op_cache_[key] = id;
  return id;
}

int Circuit::lnot(int a) {
  if (gates[a].op == Op::Const) return constant(!gates[a].cval);
  if (gates[a].op == Op::Not) return gates[a].a;
  auto key = std::make_tuple((int)Op::Not, a, -1);
  auto it = op_cache_.find(key);
  if (it != op_cache_.end()) return it->second;
  Gate g;
  g.op = Op::Not;
  g.a = a;
  gates.push_back(g);
  int id = (int)gates.size() - 1;
  op_cache_[key] = id;
  return id;
}

static std::vector<char> reachable_gates(const Circuit& c) {
  std::vector<char> r(c.gates.size(), 0);
  if (c.output < 0) return r;
  std::vector<int> stack{c.output};
  while (!stack.empty()) {
    int g = stack.back();
    stack.pop_back();
    if (r[g]) continue;
    r[g] = 1;
    if (c.gates[g].a >= 0) stack.push_back(c.gates[g].a);
    if (c.gates[g].b >= 0) stack.push_back(c.gates[g].b);
  }
  return r;
}

bool Circuit::monotone() const {
  auto r = reachable_gates(*this);
  for (size_t i = 0; i < gates.size(); i++)
    if (r[i] && gates[i].op == Op::Not) return false;
  return true;
}

std::vector<std::string> Circuit::variables() const {
  auto r = reachable_gates(*this);
  std::set<std::string> vs;
  for (size_t i = 0; i < gates.size(); i++)
    if (r[i] && gates[i].op == Op::Input) vs.insert(gates[i].name);
  return {vs.begin(), vs.end()};
}

bool NondetCircuit::monotone() const {
  auto r = reachable_gates(circuit);
  std::set<std::string> xs(x_inputs.begin(), x_inputs.end());
  // flag gates whose sub-dag contains an x input
  std::vector<char> on_x(circuit.gates.size(), 0);
  for (size_t i = 0; i < circuit.gates.size(); i++) {
    const auto& g = circuit.gates[i];
    if (g.op == Circuit::Op::Input && xs.count(g.name)) on_x[i] = 1;
    if (g.a >= 0 && on_x[g.a]) on_x[i] = 1;
    if (g.b >= 0 && on_x[g.b]) on_x[i] = 1;
  }
  for (size_t i = 0; i < circuit.gates.size(); i++)
    if (r[i] && circuit.gates[i].op == Circuit::Op::Not && on_x[circuit.gates[i].a])
      return false;
  return true;
}

// ------------------------------------------------------------------ formulas

BForm bf_const(bool v) {
  BForm f;
  f.kind = BForm::Kind::Const;
  f.cval = v;
  return f;
}

BForm bf_lit(std::string v, bool neg) {
  BForm f;
  f.kind = BForm::Kind::Lit;
  f.var = std::move(v);
  f.neg = neg;
  return f;
}

BForm bf_and(std::vector<BForm> kids) {
  BForm f;
  f.kind = BForm::Kind::And;
  f.kids = std::move(kids);
  return f;
}

BForm bf_or(std::vector<BForm> kids) {
  BForm f;
  f.kind = BForm::Kind::Or;
  f.kids = std::move(kids);
  return f;
}

BForm bf_not(BForm g) {
  BForm f;
  f.kind = BForm::Kind::Not;
  f.kids.push_back(std::move(g));
  return f;
}

size_t BForm::size() const {
  switch (kind) {
    case Kind::Const:
    case Kind::Lit: return 1;
    default: {
      size_t s = 0;
      for (const auto& k : kids) s += k.size();
      return s;
    }
  }
}

// ------------------------------------------------------------------ evaluate

namespace {

struct CoverSearch {
  const Hypergraph& h;
  std::vector<char> zero;                 // vertex label is 0 under the input
  std::vector<std::vector<int>> inc;      // vertex -> incident edge ids
  std::vector<char> used;                 // vertex already in a chosen edge

  bool edge_free(int e) const {
    for (int v : h.edges[e])
      if (used[v]) return false;
    return true;
  }

  bool run() {
    // branch on an uncovered zero vertex with the fewest free incident edges
    int best = -1;
    size_t best_n = 0;
    for (size_t v = 0; v < h.vertices.size(); v++) {
      if (!zero[v] || used[v]) continue;
      size_t n = 0;
      for (int e : inc[v])
        if (edge_free(e)) n++;
      if (n == 0) return false;
      if (best < 0 || n < best_n) {
        best = (int)v;
        best_n = n;
      }
    }
    if (best < 0) return true;
    for (int e : inc[best]) {
      if (!edge_free(e)) continue;
      for (int v : h.edges[e]) used[v] = 1;
      if (run()) return true;
      for (int v : h.edges[e]) used[v] = 0;
    }
    return false;
  }
};

}  // namespace

bool evaluate(const Hypergraph& hgp, const Assignment& a) {
  CoverSearch cs{hgp, {}, hgp.incident(), {}};
  cs.zero.resize(hgp.vertices.size());
  cs.used.assign(hgp.vertices.size(), 0);
  for (size_t v = 0; v < hgp.vertices.size(); v++)
    cs.zero[v] = !eval_label(hgp.vertices[v].label, a);
  return cs.run();
}

bool evaluate(const NBP& g, const Assignment& a) {
  std::vector<std::vector<int>> adj(g.nodes.size());
  for (const auto& arc : g.arcs)
    if (eval_label(arc.label, a)) adj[arc.from].push_back(arc.to);
  std::vector<char> seen(g.nodes.size(), 0);
  std::vector<int> stack{g.s};
  seen[g.s] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == g.t) return true;
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  return false;
}

bool evaluate(const Circuit& c, const Assignment& a) {
  if (c.output < 0) fail(Err::Syntax, "circuit has no output");
  auto r = reachable_gates(c);
  std::vector<char> val(c.gates.size(), 0);
  for (size_t i = 0; i < c.gates.size(); i++) {
    if (!r[i]) continue;
    const auto& g = c.gates[i];
    switch (g.op) {
      case Circuit::Op::Input: {
        auto it = a.find(g.name);
        if (it == a.end()) fail(Err::UnboundVariable, "no value for " + g.name);
        val[i] = it->second;
        break;
      }
      case Circuit::Op::Const: val[i] = g.cval; break;
      case Circuit::Op::And: val[i] = val[g.a] && val[g.b]; break;
      case Circuit::Op::Or: val[i] = val[g.a] || val[g.b]; break;
      case Circuit::Op::Not: val[i] = !val[g.a]; break;
    }
  }
  return val[c.output];
}

bool evaluate(const NondetCircuit& c, const Assignment& a) {
  size_t k = c.advice.size();
  if (k > 24) fail(Err::AdviceTooLarge, "too many advice inputs: " + std::to_string(k));
  for (uint64_t bits = 0; bits < (uint64_t(1) << k); bits++) {
    Assignment full = a;
    for (size_t i = 0; i < k; i++) full[c.advice[i]] = (bits >> i) & 1;
    if (evaluate(c.circuit, full)) return true;
  }
  return false;
}

bool evaluate(const BForm& f, const Assignment& a) {
  switch (f.kind) {
    case BForm::Kind::Const: return f.cval;
    case BForm::Kind::Lit: {
      auto it = a.find(f.var);
      if (it == a.end()) fail(Err::UnboundVariable, "no value for " + f.var);
      return f.neg ? !it->second : it->second;
    }
    case BForm::Kind::And:
      for (const auto& k : f.kids)
        if (!evaluate(k, a)) return false;
      return true;
    case BForm::Kind::Or:
      for (const auto& k : f.kids)
        if (evaluate(k, a)) return true;
      return false;
    case BForm::Kind::Not: return !evaluate(f.kids[0], a);
  }
  return false;
}

bool hypergraph_function(const Hypergraph& h, const Assignment& a) {
  return evaluate(hgp_from_hypergraph(h), a);
}

namespace {

bool brute_rec(const Hypergraph& h, const Assignment& a, size_t i, std::vector<char>& used) {
  if (i == h.edges.size()) {
    for (size_t v = 0; v < h.vertices.size(); v++)
      if (!used[v] && !a.at(h.vertices[v].name)) return false;
    return true;
  }
  if (brute_rec(h, a, i + 1, used)) return true;
  if (!a.at(h.edge_names[i])) return false;
  for (int v : h.edges[i])
    if (used[v]) return false;
  for (int v : h.edges[i]) used[v] = 1;
  bool ok = brute_rec(h, a, i + 1, used);
  for (int v : h.edges[i]) used[v] = 0;
  return ok;
}

}  // namespace

bool brute_hypergraph_function(const Hypergraph& h, const Assignment& a) {
  std::vector<char> used(h.vertices.size(), 0);
  return brute_rec(h, a, 0, used);
}

// ------------------------------------------------------------------ translations

Hypergraph hgp_from_hypergraph(const Hypergraph& h) {
  Hypergraph p;
  for (const auto& v : h.vertices) p.add_vertex(v.name, lblv(v.name));
  for (size_t e = 0; e < h.edges.size(); e++) {
    const std::string& en = h.edge_names[e];
    int av = p.add_vertex("a_" + en, lbl1());
    int bv = p.add_vertex("b_" + en, lblv(en));
    std::vector<int> vs = h.edges[e];
    vs.push_back(av);
    p.add_edge(en, vs);
    p.add_edge("b_" + en, {av, bv});
  }
  return p;
}

namespace {

std::string fresh_vertex(const Hypergraph& p, std::string base) {
  while (p.vertex_id(base) >= 0) base += "'";
  return base;
}

std::string fresh_edge(const Hypergraph& p, std::string base) {
  while (p.edge_id(base) >= 0) base += "'";
  return base;
}

}  // namespace

Hypergraph normalize_degree2(const Hypergraph& p) {
  if (p.degree() > 2) fail(Err::DegreeTooHigh, "degree exceeds 2");
  Hypergraph q = p;
  auto inc = q.incident();
  std::vector<int> deg0, deg1;
  for (size_t v = 0; v < q.vertices.size(); v++) {
    if (inc[v].empty()) deg0.push_back((int)v);
    else if (inc[v].size() == 1) deg1.push_back((int)v);
  }
  int x = q.add_vertex(fresh_vertex(q, "nx"), lbl1());
  int y = q.add_vertex(fresh_vertex(q, "ny"), lbl0());
  int z = q.add_vertex(fresh_vertex(q, "nz"), lbl0());
  std::vector<int> e1 = deg0;
  e1.insert(e1.end(), deg1.begin(), deg1.end());
  e1.push_back(x);
  e1.push_back(y);
  std::vector<int> e2 = deg0;
  e2.push_back(x);
  e2.push_back(z);
  q.add_edge(fresh_edge(q, "ne1"), e1);
  q.add_edge(fresh_edge(q, "ne2"), e2);
  q.add_edge(fresh_edge(q, "ne3"), {y, z});
  return q;
}

namespace {

// implication graph over edge literals of a degree-exactly-2 program:
// local node 2i is "edge i chosen", 2i+1 is "edge i not chosen"
struct ImpGraph {
  int n = 0;  // 2 * #edges
  std::vector<NBP::Arc> arcs;
};

ImpGraph implication_graph(const Hypergraph& q, bool dual) {
  ImpGraph b;
  size_t k = q.size();
  b.n = (int)(2 * k);
  for (size_t i = 0; i < k; i++)
    for (size_t j = i + 1; j < k; j++) {
      std::vector<int> inter;
      std::set_intersection(q.edges[i].begin(), q.edges[i].end(), q.edges[j].begin(),
                            q.edges[j].end(), std::back_inserter(inter));
      if (!inter.empty()) {
        b.arcs.push_back({(int)(2 * i), (int)(2 * j + 1), lbl1()});
        b.arcs.push_back({(int)(2 * j), (int)(2 * i + 1), lbl1()});
      }
    }
  auto inc = q.incident();
  for (size_t v = 0; v < q.vertices.size(); v++) {
    if (inc[v].size() != 2) fail(Err::NotDegreeTwo, "vertex degree is not 2");
    int i = inc[v][0], j = inc[v][1];
    // the dual flips variable values only: constants keep their negated form
    Label l = negate_label(q.vertices[v].label);
    if (dual && l.kind == Label::Kind::NegVar) l = lblv(l.var);
    b.arcs.push_back({2 * i + 1, 2 * j, l});
    b.arcs.push_back({2 * j + 1, 2 * i, l});
  }
  return b;
}

bool degree_exactly2(const Hypergraph& p) {
  for (const auto& iv : p.incident())
    if (iv.size() != 2) return false;
  return true;
}

}  // namespace

NBP hgp2_to_nbp(const Hypergraph& p, bool dual) {
  if (dual && !p.monotone()) fail(Err::NonMonotoneNBP, "dual form needs a monotone program");
  Hypergraph q = degree_exactly2(p) ? p : normalize_degree2(p);
  size_t k = q.size();
  ImpGraph b = implication_graph(q, dual);
  NBP g;
  g.nodes = {"s", "t"};
  // copies 2i (positive phase) and 2i+1 (negative phase) per edge i
  auto node = [&](int copy, int local) { return 2 + copy * b.n + local; };
  for (size_t c = 0; c < 2 * k; c++)
    for (int l = 0; l < b.n; l++)
      g.nodes.push_back("b" + std::to_string(c) + "_" + std::to_string(l));
  for (size_t c = 0; c < 2 * k; c++)
    for (const auto& arc : b.arcs)
      g.arcs.push_back({node((int)c, arc.from), node((int)c, arc.to), arc.label});
  for (size_t i = 0; i < k; i++) {
    // ride "not chosen" to "chosen" in one copy, then back in the other
    g.arcs.push_back({g.s, node((int)(2 * i), (int)(2 * i + 1)), lbl1()});
    g.arcs.push_back({node((int)(2 * i), (int)(2 * i)), node((int)(2 * i + 1), (int)(2 * i)), lbl1()});
    g.arcs.push_back({node((int)(2 * i + 1), (int)(2 * i + 1)), g.t, lbl1()});
  }
  return g;
}

Hypergraph nbp_to_hgp2(const NBP& g) {
  g.check();
  Hypergraph p;
  std::vector<int> a0(g.arcs.size()), a1(g.arcs.size());
  for (size_t j = 0; j < g.arcs.size(); j++) {
    a0[j] = p.add_vertex("a0_" + std::to_string(j), negate_label(g.arcs[j].label));
    a1[j] = p.add_vertex("a1_" + std::to_string(j), lbl1());
    p.add_edge("e" + std::to_string(j), {a0[j], a1[j]});
  }
  int tv = p.add_vertex("tv", lbl0());
  for (size_t v = 0; v < g.nodes.size(); v++) {
    if ((int)v == g.s) continue;
    std::vector<int> vs;
    for (size_t j = 0; j < g.arcs.size(); j++) {
      if (g.arcs[j].to == (int)v) vs.push_back(a1[j]);
      if ((int)v != g.t && g.arcs[j].from == (int)v) vs.push_back(a0[j]);
    }
    if ((int)v == g.t) vs.push_back(tv);
    p.add_edge("n" + std::to_string(v), vs);
  }
  return p;
}

namespace {

// transitive closure of a gate-valued adjacency matrix by repeated squaring
std::vector<std::vector<int>> closure_gates(Circuit& c, std::vector<std::vector<int>> r) {
  size_t n = r.size();
  for (size_t i = 0; i < n; i++) r[i][i] = c.constant(true);
  for (size_t len = 1; len + 1 < n; len *= 2) {
    auto nr = r;
    for (size_t u = 0; u < n; u++)
      for (size_t w = 0; w < n; w++) {
        if (c.gates[r[u][w]].op == Circuit::Op::Const && !c.gates[r[u][w]].cval) continue;
        for (size_t v = 0; v < n; v++)
          nr[u][v] = c.lor(nr[u][v], c.land(r[u][w], r[w][v]));
      }
    r = std::move(nr);
  }
  return r;
}

int label_gate(Circuit& c, const Label& l) {
  switch (l.kind) {
    case Label::Kind::Zero: return c.constant(false);
    case Label::Kind::One: return c.constant(true);
    case Label::Kind::Var: return c.input(l.var);
    case Label::Kind::NegVar: return c.lnot(c.input(l.var));
  }
  return -1;
}

}  // namespace

Circuit nbp_to_monotone_circuit(const NBP& g) {
  if (!g.monotone()) fail(Err::NonMonotoneNBP, "branching program has negated labels");
  g.check();
  Circuit c;
  size_t n = g.nodes.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, c.constant(false)));
  for (const auto& arc : g.arcs)
    m[arc.from][arc.to] = c.lor(m[arc.from][arc.to], label_gate(c, arc.label));
  auto r = closure_gates(c, std::move(m));
  c.output = r[g.s][g.t];
  return c;
}

Circuit circuit_dualize(const Circuit& c) {
  auto reach = reachable_gates(c);
  Circuit d;
  std::vector<int> m(c.gates.size(), -1);
  for (size_t i = 0; i < c.gates.size(); i++) {
    if (!reach[i]) continue;
    const auto& g = c.gates[i];
    switch (g.op) {
      case Circuit::Op::Input: m[i] = d.input(g.name); break;
      case Circuit::Op::Const: m[i] = d.constant(!g.cval); break;
      case Circuit::Op::And: m[i] = d.lor(m[g.a], m[g.b]); break;
      case Circuit::Op::Or: m[i] = d.land(m[g.a], m[g.b]); break;
      case Circuit::Op::Not: fail(Err::NonMonotoneCircuit, "cannot dualize a negation");
    }
  }
  d.output = m[c.output];
  return d;
}

Circuit hgp2_dual_circuit(const Hypergraph& p) {
  if (!p.monotone()) fail(Err::NonMonotoneCircuit, "program is not monotone");
  Hypergraph q = degree_exactly2(p) ? p : normalize_degree2(p);
  size_t k = q.size();
  ImpGraph b = implication_graph(q, /*dual=*/true);
  Circuit c;
  std::vector<std::vector<int>> m(b.n, std::vector<int>(b.n, c.constant(false)));
  for (const auto& arc : b.arcs)
    m[arc.from][arc.to] = c.lor(m[arc.from][arc.to], label_gate(c, arc.label));
  auto r = closure_gates(c, std::move(m));
  int out = c.constant(false);
  for (size_t i = 0; i < k; i++)
    out = c.lor(out, c.land(r[2 * i][2 * i + 1], r[2 * i + 1][2 * i]));
  c.output = out;
  return c;
}

NondetCircuit hgp_to_nbc(const Hypergraph& p) {
  NondetCircuit nc;
  Circuit& c = nc.circuit;
  nc.x_inputs = p.variables();
  std::set<std::string> taken(nc.x_inputs.begin(), nc.x_inputs.end());
  std::vector<std::string> adv;
  for (const auto& en : p.edge_names) {
    std::string n = en;
    while (taken.count(n)) n += "'";
    taken.insert(n);
    adv.push_back(n);
  }
  nc.advice = adv;
  int out = c.constant(true);
  size_t k = p.size();
  for (size_t i = 0; i < k; i++)
    for (size_t j = i + 1; j < k; j++) {
      std::vector<int> inter;
      std::set_intersection(p.edges[i].begin(), p.edges[i].end(), p.edges[j].begin(),
                            p.edges[j].end(), std::back_inserter(inter));
      if (!inter.empty())
        out = c.land(out, c.lor(c.lnot(c.input(adv[i])), c.lnot(c.input(adv[j]))));
    }
  auto inc = p.incident();
  for (size_t v = 0; v < p.vertices.size(); v++) {
    int cl = label_gate(c, p.vertices[v].label);
    for (int e : inc[v]) cl = c.lor(cl, c.input(adv[e]));
    out = c.land(out, cl);
  }
  c.output = out;
  return nc;
}

Hypergraph nbc_to_hgp3(const NondetCircuit& nc) {
  bool mono = nc.monotone();
  // constant-fold through a fresh builder first
  Circuit c;
  {
    const Circuit& in = nc.circuit;
    if (in.output < 0) fail(Err::Syntax, "circuit has no output");
    std::vector<int> m(in.gates.size(), -1);
    for (size_t i = 0; i < in.gates.size(); i++) {
      const auto& g = in.gates[i];
      switch (g.op) {
        case Circuit::Op::Input: m[i] = c.input(g.name); break;
        case Circuit::Op::Const: m[i] = c.constant(g.cval); break;
        case Circuit::Op::And: m[i] = c.land(m[g.a], m[g.b]); break;
        case Circuit::Op::Or: m[i] = c.lor(m[g.a], m[g.b]); break;
        case Circuit::Op::Not: m[i] = c.lnot(m[g.a]); break;
      }
    }
    c.output = m[in.output];
  }
  Hypergraph p;
  if (c.gates[c.output].op == Circuit::Op::Const) {
    if (!c.gates[c.output].cval) p.add_vertex("reject", lbl0());
    return p;
  }
  std::set<std::string> xs(nc.x_inputs.begin(), nc.x_inputs.end());
  auto reach = reachable_gates(c);
  std::vector<int> eg(c.gates.size(), -1), neg(c.gates.size(), -1);
  std::vector<std::vector<int>> emem(c.gates.size()), nmem(c.gates.size());
  auto nm = [](const char* p, size_t i) { return std::string(p) + std::to_string(i); };
  for (size_t i = 0; i < c.gates.size(); i++) {
    if (!reach[i]) continue;
    int gv = p.add_vertex(nm("g", i), lbl0());
    emem[i] = {gv};
    nmem[i] = {gv};
  }
  size_t aux = 0;
  for (size_t i = 0; i < c.gates.size(); i++) {
    if (!reach[i]) continue;
    const auto& g = c.gates[i];
    switch (g.op) {
      case Circuit::Op::Input: {
        if (xs.count(g.name)) {
          // pins: choosing "true" needs the input on; the "false" side pin is
          // dropped in the monotone case so smaller inputs may be pretended
          if (!mono) emem[i].push_back(p.add_vertex(nm("px", i), lblnv(g.name)));
          nmem[i].push_back(p.add_vertex(nm("nx", i), lblv(g.name)));
        }
        break;
      }
      case Circuit::Op::Const: fail(Err::UnnormalizedCircuit, "interior constant");
      case Circuit::Op::Not: {
        int u = p.add_vertex(nm("c", aux), lbl1());
        int v = p.add_vertex(nm("d", aux), lbl1());
        aux++;
        emem[i].push_back(u);
        emem[g.a].push_back(u);
        nmem[i].push_back(v);
        nmem[g.a].push_back(v);
        break;
      }
      case Circuit::Op::Or: {
        int u = p.add_vertex(nm("c", aux), lbl1());
        int v = p.add_vertex(nm("d", aux), lbl1());
        emem[g.a].push_back(u);
        nmem[i].push_back(u);
        emem[g.b].push_back(v);
        nmem[i].push_back(v);
        int ha = p.add_vertex(nm("h", aux), lbl1());
        int hb = p.add_vertex(nm("k", aux), lbl1());
        int ui = p.add_vertex(nm("u", aux), lbl0());
        nmem[g.a].push_back(ha);
        nmem[g.b].push_back(hb);
        nmem[i].push_back(ui);
        p.add_edge(nm("pa", aux), {ha, ui});
        p.add_edge(nm("pb", aux), {hb, ui});
        aux++;
        break;
      }
      case Circuit::Op::And: {
        int u = p.add_vertex(nm("c", aux), lbl1());
        int v = p.add_vertex(nm("d", aux), lbl1());
        nmem[g.a].push_back(u);
        emem[i].push_back(u);
        nmem[g.b].push_back(v);
        emem[i].push_back(v);
        int ha = p.add_vertex(nm("h", aux), lbl1());
        int hb = p.add_vertex(nm("k", aux), lbl1());
        int ui = p.add_vertex(nm("u", aux), lbl0());
        emem[g.a].push_back(ha);
        emem[g.b].push_back(hb);
        emem[i].push_back(ui);
        p.add_edge(nm("pa", aux), {ha, ui});
        p.add_edge(nm("pb", aux), {hb, ui});
        aux++;
        break;
      }
    }
  }
  emem[c.output].push_back(p.add_vertex("accept", lbl0()));
  for (size_t i = 0; i < c.gates.size(); i++) {
    if (!reach[i]) continue;
    p.add_edge(nm("e", i), emem[i]);
    p.add_edge(nm("ne", i), nmem[i]);
  }
  return p;
}

// ------------------------------------------------------------------ io

namespace {

std::string label_str(const Label& l) {
  switch (l.kind) {
    case Label::Kind::Zero: return "0";
    case Label::Kind::One: return "1";
    case Label::Kind::Var: return l.var;
    case Label::Kind::NegVar: return "!" + l.var;
  }
  return "";
}

Label label_parse(const std::string& s) {
  if (s == "0") return lbl0();
  if (s == "1") return lbl1();
  if (!s.empty() && s[0] == '!') return lblnv(s.substr(1));
  if (s.empty()) fail(Err::Syntax, "empty label");
  return lblv(s);
}

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

}  // namespace

std::string print(const NBP& g) {
  std::string out;
  for (const auto& n : g.nodes) out += "node " + n + "\n";
  for (const auto& a : g.arcs)
    out += "arc " + g.nodes[a.from] + " " + g.nodes[a.to] + " " + label_str(a.label) + "\n";
  return out;
}

NBP parse_nbp(const std::string& text) {
  NBP g;
  std::map<std::string, int> ids;
  for (const auto& toks : tokenize_lines(text)) {
    if (toks[0] == "node" && toks.size() == 2) {
      if (ids.count(toks[1])) fail(Err::NameClash, "duplicate node " + toks[1]);
      ids[toks[1]] = (int)g.nodes.size();
      g.nodes.push_back(toks[1]);
    } else if (toks[0] == "arc" && toks.size() == 4) {
      auto f = ids.find(toks[1]), t = ids.find(toks[2]);
      if (f == ids.end() || t == ids.end()) fail(Err::Syntax, "unknown node in arc");
      g.arcs.push_back({f->second, t->second, label_parse(toks[3])});
    } else {
      fail(Err::Syntax, "bad line: " + toks[0]);
    }
  }
  if (g.nodes.size() < 2) fail(Err::Syntax, "need source and target nodes");
  g.check();
  return g;
}

static std::string print_gates(const Circuit& c) {
  std::string out;
  auto ref = [&](int i) {
    return c.gates[i].op == Circuit::Op::Input ? c.gates[i].name : "g" + std::to_string(i);
  };
  for (size_t i = 0; i < c.gates.size(); i++) {
    const auto& g = c.gates[i];
    switch (g.op) {
      case Circuit::Op::Input: out += "input " + g.name + "\n"; break;
      case Circuit::Op::Const:
        out += "gate g" + std::to_string(i) + " = CONST " + (g.cval ? "1" : "0") + "\n";
        break;
      case Circuit::Op::And:
        out += "gate g" + std::to_string(i) + " = AND " + ref(g.a) + " " + ref(g.b) + "\n";
        break;
      case Circuit::Op::Or:
        out += "gate g" + std::to_string(i) + " = OR " + ref(g.a) + " " + ref(g.b) + "\n";
        break;
      case Circuit::Op::Not:
        out += "gate g" + std::to_string(i) + " = NOT " + ref(g.a) + "\n";
        break;
    }
  }
  out += "output " + ref(c.output) + "\n";
  return out;
}

std::string print(const Circuit& c) { return print_gates(c); }

std::string print(const NondetCircuit& c) {
  std::string out;
  std::set<std::string> adv(c.advice.begin(), c.advice.end());
  for (const auto& a : c.advice) out += "advice " + a + "\n";
  std::string body = print_gates(c.circuit);
  // advice inputs are declared above; drop their input lines
  std::istringstream in(body);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("input ", 0) == 0 && adv.count(line.substr(6))) continue;
    out += line + "\n";
  }
  return out;
}

namespace {

Circuit parse_circuit_impl(const std::string& text, std::vector<std::string>* advice) {
  Circuit c;
  std::map<std::string, int> ids;
  int output = -1;
  auto ref = [&](const std::string& n) {
    auto it = ids.find(n);
    if (it == ids.end()) fail(Err::Syntax, "unknown gate " + n);
    return it->second;
  };
  auto add_input = [&](const std::string& n) {
    if (ids.count(n)) fail(Err::NameClash, "duplicate input " + n);
    Circuit::Gate g;
    g.op = Circuit::Op::Input;
    g.name = n;
    c.gates.push_back(g);
    ids[n] = (int)c.gates.size() - 1;
  };
  for (const auto& toks : tokenize_lines(text)) {
    if (toks[0] == "input" && toks.size() == 2) {
      add_input(toks[1]);
    } else if (toks[0] == "advice" && toks.size() == 2 && advice) {
      advice->push_back(toks[1]);
      add_input(toks[1]);
    } else if (toks[0] == "gate" && toks.size() >= 5 && toks[2] == "=") {
      if (ids.count(toks[1])) fail(Err::NameClash, "duplicate gate " + toks[1]);
      Circuit::Gate g;
      if (toks[3] == "AND" && toks.size() == 6) {
        g.op = Circuit::Op::And;
        g.a = ref(toks[4]);
        g.b = ref(toks[5]);
      } else if (toks[3] == "OR" && toks.size() == 6) {
        g.op = Circuit::Op::Or;
        g.a = ref(toks[4]);
        g.b = ref(toks[5]);
      } else if (toks[3] == "NOT" && toks.size() == 5) {
        g.op = Circuit::Op::Not;
        g.a = ref(toks[4]);
      } else if (toks[3] == "CONST" && toks.size() == 5) {
        g.op = Circuit::Op::Const;
        g.cval = toks[4] == "1";
        if (toks[4] != "0" && toks[4] != "1") fail(Err::Syntax, "bad constant");
      } else {
        fail(Err::Syntax, "bad gate line");
      }
      c.gates.push_back(g);
      ids[toks[1]] = (int)c.gates.size() - 1;
    } else if (toks[0] == "output" && toks.size() == 2) {
      output = ref(toks[1]);
    } else {
      fail(Err::Syntax, "bad line: " + toks[0]);
    }
  }
  if (output < 0) fail(Err::Syntax, "missing output line");
  c.output = output;
  return c;
}

}  // namespace

Circuit parse_circuit(const std::string& text) { return parse_circuit_impl(text, nullptr); }

NondetCircuit parse_nondet_circuit(const std::string& text) {
  NondetCircuit nc;
  nc.circuit = parse_circuit_impl(text, &nc.advice);
  std::set<std::string> adv(nc.advice.begin(), nc.advice.end());
  for (const auto& g : nc.circuit.gates)
    if (g.op == Circuit::Op::Input && !adv.count(g.name)) nc.x_inputs.push_back(g.name);
  return nc;
}

}  // namespace twr
