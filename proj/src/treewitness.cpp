#include "twr/treewitness.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace twr {

namespace {

constexpr size_t kMaxExplored = 200000;

enum class VC { Any, Root, Internal };

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  std::string n = base;
  while (used.count(n)) n += "'";
  return n;
}

struct HomSearch {
  const CanonicalModel* m = nullptr;
  int a_id = -1;
  std::map<std::string, std::vector<GroundAtom>> by_pred;

  void index(const CanonicalModel& model) {
    m = &model;
    a_id = model.element_id("a");
    by_pred.clear();
    for (const auto& g : model.atoms) by_pred[g.pred].push_back(g);
  }

  bool admissible(const std::string& v, int e, const std::map<std::string, VC>& vc) const {
    auto it = vc.find(v);
    VC c = it == vc.end() ? VC::Any : it->second;
    if (c == VC::Root) return e == a_id;
    if (c == VC::Internal) return m->elems[e].is_null;
    return true;
  }

  bool run(const std::vector<Atom>& atoms, size_t i, std::map<std::string, int>& env,
           const std::map<std::string, VC>& vc) const {
    if (i == atoms.size()) return true;
    const Atom& at = atoms[i];
    auto it = by_pred.find(at.pred);
    if (it == by_pred.end()) return false;
    for (const auto& g : it->second) {
      if (g.args.size() != at.args.size()) continue;
      std::vector<std::string> bound_here;
      bool ok = true;
      for (size_t k = 0; k < g.args.size() && ok; ++k) {
        const std::string& v = at.args[k].name;
        auto e = env.find(v);
        if (e != env.end()) {
          ok = e->second == g.args[k];
        } else if (admissible(v, g.args[k], vc)) {
          env[v] = g.args[k];
          bound_here.push_back(v);
        } else {
          ok = false;
        }
      }
      if (ok && run(atoms, i + 1, env, vc)) return true;
      for (const auto& v : bound_here) env.erase(v);
    }
    return false;
  }

  bool exists(const std::vector<Atom>& atoms, const std::map<std::string, VC>& vc) const {
    std::map<std::string, int> env;
    return run(atoms, 0, env, vc);
  }
};

}  // namespace

std::vector<TreeWitness> enumerate_tree_witnesses(const ConjunctiveQuery& q,
                                                  const Ontology& t, TWLimits lim) {
  Signature sig;
  sig.add(t);
  sig.add(q);
  std::vector<Generator> gens = all_generators(sig);
  ChaseLimits climits{(int)q.all_vars().size(), 1u << 20};
  std::vector<HomSearch> models(gens.size());
  std::vector<CanonicalModel> cms;
  cms.reserve(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    cms.push_back(generator_model(t, gens[i], climits));
    models[i].index(cms.back());
  }

  std::vector<std::string> ex = q.existential_vars();
  std::set<std::string> exset(ex.begin(), ex.end());
  std::map<std::string, std::set<std::string>> adj;
  for (const Atom& a : q.atoms)
    for (const Term& u : a.args)
      for (const Term& v : a.args)
        if (u.name != v.name) adj[u.name].insert(v.name);

  struct Candidate {
    TreeWitness tw;
  };
  std::vector<TreeWitness> found;
  std::set<std::vector<std::string>> visited;
  std::queue<std::vector<std::string>> work;
  for (const auto& y : ex) {
    std::vector<std::string> s{y};
    visited.insert(s);
    work.push(s);
  }
  size_t explored = 0;
  while (!work.empty()) {
    std::vector<std::string> s = work.front();
    work.pop();
    if (++explored > kMaxExplored)
      fail(Err::TooManyTreeWitnesses, "tree-witness search space exceeded");
    std::set<std::string> sset(s.begin(), s.end());
    std::vector<Atom> qt;
    std::set<std::string> qt_vars;
    for (const Atom& a : q.atoms) {
      bool touches = false;
      for (const Term& u : a.args) touches = touches || sset.count(u.name) > 0;
      if (!touches) continue;
      qt.push_back(a);
      for (const Term& u : a.args) qt_vars.insert(u.name);
    }
    std::vector<std::string> roots;
    for (const auto& v : qt_vars)
      if (!sset.count(v)) roots.push_back(v);

    std::map<std::string, VC> strict, relaxed;
    for (const auto& v : s) strict[v] = relaxed[v] = VC::Internal;
    for (const auto& v : roots) strict[v] = VC::Root;

    TreeWitness tw;
    tw.roots = roots;
    tw.internals = s;
    tw.covered = qt;
    bool expandable = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (!expandable && models[i].exists(qt, relaxed)) expandable = true;
      if (models[i].exists(qt, strict)) tw.generators.push_back(gens[i]);
    }
    if (!tw.generators.empty()) {
      found.push_back(std::move(tw));
      if (found.size() > lim.max_tree_witnesses)
        fail(Err::TooManyTreeWitnesses, "more tree witnesses than the configured limit");
    }
    if (!expandable) continue;
    std::set<std::string> frontier;
    for (const auto& v : s)
      for (const auto& n : adj[v])
        if (exset.count(n) && !sset.count(n)) frontier.insert(n);
    for (const auto& n : frontier) {
      std::vector<std::string> s2 = s;
      s2.push_back(n);
      std::sort(s2.begin(), s2.end());
      if (visited.insert(s2).second) work.push(s2);
    }
  }

  // q_t holds exactly the atoms touching t_i, never atoms inside t_r alone,
  // so each candidate's covered set is already minimal for its split
  std::sort(found.begin(), found.end(), [](const TreeWitness& a, const TreeWitness& b) {
    return std::tie(a.internals, a.roots) < std::tie(b.internals, b.roots);
  });
  return found;
}

Formula tw_formula(const TreeWitness& t, const std::vector<std::string>& avoid) {
  std::set<std::string> used(avoid.begin(), avoid.end());
  used.insert(t.roots.begin(), t.roots.end());
  used.insert(t.internals.begin(), t.internals.end());
  for (const Atom& a : t.covered)
    for (const Term& u : a.args) used.insert(u.name);
  std::string z = fresh_name("z", used);
  used.insert(z);
  std::string w = fresh_name("w", used);

  std::vector<Formula> disj;
  for (const Generator& g : t.generators) {
    Formula rho;
    switch (g.shape) {
      case GenShape::Unary:
        rho = f_atom(atom1(g.pred, mkvar(z)));
        break;
      case GenShape::Reflexive:
        rho = f_atom(atom2(g.pred, mkvar(z), mkvar(z)));
        break;
      case GenShape::Out:
        rho = f_exists({w}, f_atom(atom2(g.pred, mkvar(z), mkvar(w))));
        break;
      case GenShape::In:
        rho = f_exists({w}, f_atom(atom2(g.pred, mkvar(w), mkvar(z))));
        break;
    }
    std::vector<Formula> conj{std::move(rho)};
    for (const auto& x : t.roots) conj.push_back(f_eq(x, z));
    disj.push_back(f_exists({z}, f_and(std::move(conj))));
  }
  return f_or(std::move(disj));
}

bool independent(const TreeWitness& a, const TreeWitness& b) {
  std::set<Atom> as(a.covered.begin(), a.covered.end());
  for (const Atom& x : b.covered)
    if (as.count(x)) return false;
  return true;
}

bool compatible(const TreeWitness& a, const TreeWitness& b) {
  if (independent(a, b)) return true;
  std::set<Atom> as(a.covered.begin(), a.covered.end());
  std::set<Atom> bs(b.covered.begin(), b.covered.end());
  bool a_in_b = true, b_in_a = true;
  for (const Atom& x : a.covered) a_in_b = a_in_b && bs.count(x) > 0;
  for (const Atom& x : b.covered) b_in_a = b_in_a && as.count(x) > 0;
  return a_in_b || b_in_a;
}

std::string atom_key(const Atom& a) {
  std::string k = a.pred;
  for (const Term& t : a.args) k += "_" + t.name;
  return k;
}

Hypergraph tw_hypergraph(const ConjunctiveQuery& q, const std::vector<TreeWitness>& tws) {
  Hypergraph h;
  std::set<std::string> used;
  std::map<Atom, int> vid;
  for (const Atom& a : q.atoms) {
    std::string k = fresh_name(atom_key(a), used);
    used.insert(k);
    vid[a] = h.add_vertex(k, lblv(k));
  }
  for (size_t i = 0; i < tws.size(); ++i) {
    std::vector<int> vs;
    for (const Atom& a : tws[i].covered) vs.push_back(vid.at(a));
    h.add_edge("t" + std::to_string(i), std::move(vs));
  }
  return h;
}

size_t tw_degree(const ConjunctiveQuery& q, const std::vector<TreeWitness>& tws) {
  size_t best = 0;
  for (const auto& z : q.existential_vars()) {
    size_t n = 0;
    for (const TreeWitness& t : tws)
      n += std::count(t.internals.begin(), t.internals.end(), z) > 0 ? 1 : 0;
    best = std::max(best, n);
  }
  return 1 + best;
}

}  // namespace twr
