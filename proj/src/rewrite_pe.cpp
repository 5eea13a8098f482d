#include "twr/rewrite_pe.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "twr/chase.hpp"

namespace twr {

namespace {

std::vector<std::string> atom_vars(const std::vector<Atom>& atoms) {
  std::set<std::string> vs;
  for (const Atom& a : atoms)
    for (const Term& t : a.args)
      if (t.is_var) vs.insert(t.name);
  return {vs.begin(), vs.end()};
}

Formula exists_if(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  return f_exists(std::move(vars), std::move(body));
}

Formula build_disjunct(const ConjunctiveQuery& q, const std::vector<TreeWitness>& tws,
                       const std::vector<size_t>& sub,
                       const std::vector<std::string>& avoid,
                       const std::set<std::string>& exset) {
  std::set<Atom> covered;
  for (size_t i : sub) covered.insert(tws[i].covered.begin(), tws[i].covered.end());
  std::vector<Formula> conj;
  std::set<std::string> used;
  for (const Atom& a : q.atoms) {
    if (covered.count(a)) continue;
    conj.push_back(f_atom(a));
    for (const Term& u : a.args) used.insert(u.name);
  }
  for (size_t i : sub) {
    conj.push_back(tw_formula(tws[i], avoid));
    used.insert(tws[i].roots.begin(), tws[i].roots.end());
  }
  std::vector<std::string> ys;
  for (const auto& v : used)
    if (exset.count(v)) ys.push_back(v);
  return exists_if(std::move(ys), f_and(std::move(conj)));
}

}  // namespace

std::vector<TreeWitness> tw_subsets(
    const ConjunctiveQuery& q, const Ontology& t,
    const std::function<void(const std::vector<size_t>&)>& emit, RewriteLimits lim) {
  validate(q);
  validate(t);
  std::vector<TreeWitness> tws = enumerate_tree_witnesses(q, t, {lim.max_tree_witnesses});

  std::vector<std::vector<bool>> indep(tws.size(), std::vector<bool>(tws.size(), true));
  for (size_t i = 0; i < tws.size(); ++i)
    for (size_t j = i + 1; j < tws.size(); ++j)
      indep[i][j] = indep[j][i] = independent(tws[i], tws[j]);

  std::vector<size_t> cur;
  size_t count = 1;
  emit(cur);
  std::function<void(size_t)> gen = [&](size_t next) {
    for (size_t i = next; i < tws.size(); ++i) {
      bool ok = true;
      for (size_t j : cur) ok = ok && indep[j][i];
      if (!ok) continue;
      cur.push_back(i);
      if (++count > lim.max_disjuncts)
        fail(Err::RewritingTooLarge, "more disjuncts than the configured limit");
      emit(cur);
      gen(i + 1);
      cur.pop_back();
    }
  };
  gen(0);
  return tws;
}

Formula tw_disjunct(const ConjunctiveQuery& q, const std::vector<TreeWitness>& tws,
                    const std::vector<size_t>& subset) {
  std::vector<std::string> avoid = q.all_vars();
  std::set<std::string> exset;
  for (const auto& y : q.existential_vars()) exset.insert(y);
  return build_disjunct(q, tws, subset, avoid, exset);
}

PERewriting tw_rewrite(const ConjunctiveQuery& q, const Ontology& t, RewriteLimits lim) {
  PERewriting out;
  out.answer_vars = q.answer_vars;
  std::vector<std::vector<size_t>> subsets;
  out.witnesses =
      tw_subsets(q, t, [&](const std::vector<size_t>& s) { subsets.push_back(s); }, lim);
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<std::string> avoid = q.all_vars();
  std::set<std::string> exset;
  for (const auto& y : q.existential_vars()) exset.insert(y);

  std::vector<Formula> disjuncts;
  for (const auto& sub : subsets)
    disjuncts.push_back(build_disjunct(q, out.witnesses, sub, avoid, exset));
  out.disjuncts = disjuncts.size();
  out.formula = f_or(std::move(disjuncts));
  return out;
}

PERewriting compact_tw_rewrite(const ConjunctiveQuery& q, const Ontology& t,
                               RewriteLimits lim) {
  validate(q);
  validate(t);
  PERewriting out;
  out.answer_vars = q.answer_vars;
  out.witnesses = enumerate_tree_witnesses(q, t, {lim.max_tree_witnesses});
  const auto& tws = out.witnesses;
  for (size_t i = 0; i < tws.size(); ++i)
    for (size_t j = i + 1; j < tws.size(); ++j)
      if (!compatible(tws[i], tws[j]))
        fail(Err::IncompatibleTreeWitnesses,
             "witnesses " + std::to_string(i) + " and " + std::to_string(j) +
                 " are neither disjoint nor nested");

  std::vector<std::string> avoid = q.all_vars();
  std::vector<Formula> conj;
  for (const Atom& a : q.atoms) {
    std::vector<Formula> alts{f_atom(a)};
    for (const TreeWitness& tw : tws)
      if (std::find(tw.covered.begin(), tw.covered.end(), a) != tw.covered.end())
        alts.push_back(tw_formula(tw, avoid));
    conj.push_back(f_or(std::move(alts)));
  }
  out.disjuncts = 1;
  out.formula = exists_if(q.existential_vars(), f_and(std::move(conj)));
  return out;
}

// ------------------------------------------------------------------ split

namespace {

struct Splitter {
  const Ontology* t;
  SplitStrategy strategy;
  RewriteLimits lim;
  std::vector<std::string> global_answer;
  std::vector<std::string>* notes;

  // connected components by shared non-free variables
  std::vector<std::vector<Atom>> components(const std::vector<Atom>& atoms,
                                            const std::set<std::string>& free) const {
    std::vector<int> comp(atoms.size(), -1);
    int nc = 0;
    for (size_t i = 0; i < atoms.size(); ++i) {
      if (comp[i] >= 0) continue;
      comp[i] = nc;
      std::vector<size_t> stack{i};
      while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        std::set<std::string> vs;
        for (const Term& u : atoms[v].args)
          if (!free.count(u.name)) vs.insert(u.name);
        for (size_t j = 0; j < atoms.size(); ++j) {
          if (comp[j] >= 0) continue;
          bool shares = false;
          for (const Term& u : atoms[j].args) shares = shares || vs.count(u.name) > 0;
          if (shares) {
            comp[j] = nc;
            stack.push_back(j);
          }
        }
      }
      ++nc;
    }
    std::vector<std::vector<Atom>> out(nc);
    for (size_t i = 0; i < atoms.size(); ++i) out[comp[i]].push_back(atoms[i]);
    return out;
  }

  std::string choose(const std::vector<Atom>& atoms,
                     const std::vector<std::string>& ys) const {
    std::vector<std::string> vars = atom_vars(atoms);
    std::map<std::string, std::set<std::string>> adj;
    size_t edge_count = 0;
    for (const Atom& a : atoms)
      for (const Term& u : a.args)
        for (const Term& v : a.args)
          if (u.name < v.name) {
            if (adj[u.name].insert(v.name).second) ++edge_count;
            adj[v.name].insert(u.name);
          }
    if (strategy == SplitStrategy::LeafFirst) {
      std::string root;
      for (const auto& x : global_answer)
        if (std::find(vars.begin(), vars.end(), x) != vars.end() && root.empty()) root = x;
      if (root.empty()) root = vars.front();
      std::map<std::string, int> depth;
      depth[root] = 0;
      std::vector<std::string> bfs{root};
      for (size_t i = 0; i < bfs.size(); ++i)
        for (const auto& n : adj[bfs[i]])
          if (!depth.count(n)) {
            depth[n] = depth[bfs[i]] + 1;
            bfs.push_back(n);
          }
      std::string best;
      for (const auto& z : ys)
        if (best.empty() || depth[z] < depth[best]) best = z;
      return best;
    }
    // balanced: existential variable minimizing the largest remaining
    // component (the tree centroid when the graph is a tree)
    if (edge_count + 1 > vars.size() && notes) notes->push_back("non-tree query component; using the articulation heuristic");
    std::string best;
    size_t best_score = 0;
    for (const auto& z : ys) {
      std::map<std::string, int> comp;
      comp[z] = -1;
      size_t worst = 0;
      int nc = 0;
      for (const auto& v : vars) {
        if (comp.count(v)) continue;
        size_t size = 0;
        std::vector<std::string> stack{v};
        comp[v] = nc;
        while (!stack.empty()) {
          std::string u = stack.back();
          stack.pop_back();
          ++size;
          for (const auto& w : adj[u])
            if (!comp.count(w)) {
              comp[w] = nc;
              stack.push_back(w);
            }
        }
        worst = std::max(worst, size);
        ++nc;
      }
      if (best.empty() || worst < best_score) {
        best = z;
        best_score = worst;
      }
    }
    return best;
  }

  Formula split(const std::vector<Atom>& atoms, std::set<std::string> free) const {
    if (atoms.empty()) return f_true();
    std::vector<Formula> conj;
    for (const auto& comp : components(atoms, free)) {
      std::vector<std::string> ys;
      for (const auto& v : atom_vars(comp))
        if (!free.count(v)) ys.push_back(v);
      if (ys.empty()) {
        for (const Atom& a : comp) conj.push_back(f_atom(a));
        continue;
      }
      std::string z = choose(comp, ys);
      auto free_z = free;
      free_z.insert(z);
      std::vector<Formula> alts{f_exists({z}, split(comp, free_z))};

      ConjunctiveQuery sub;
      sub.atoms = comp;
      for (const auto& v : atom_vars(comp))
        if (free.count(v)) sub.answer_vars.push_back(v);
      sub.normalize();
      auto tws = enumerate_tree_witnesses(sub, *t, {lim.max_tree_witnesses});
      std::vector<std::string> avoid = atom_vars(atoms);
      for (const TreeWitness& tw : tws) {
        if (std::find(tw.internals.begin(), tw.internals.end(), z) == tw.internals.end())
          continue;
        std::set<Atom> covered(tw.covered.begin(), tw.covered.end());
        std::vector<Atom> rest;
        for (const Atom& a : comp)
          if (!covered.count(a)) rest.push_back(a);
        std::vector<std::string> yjt;  // roots that were existential here
        for (const auto& r : tw.roots)
          if (!free.count(r)) yjt.push_back(r);
        auto free2 = free;
        free2.insert(yjt.begin(), yjt.end());
        Formula inner = f_and({split(rest, free2), tw_formula(tw, avoid)});
        alts.push_back(exists_if(yjt, std::move(inner)));
      }
      conj.push_back(f_or(std::move(alts)));
    }
    Formula out = f_and(std::move(conj));
    if (pe_size(out) > lim.max_size)
      fail(Err::RewritingTooLarge, "split rewriting exceeds the size limit");
    return out;
  }
};

}  // namespace

PERewriting split_rewrite(const ConjunctiveQuery& q, const Ontology& t,
                          SplitStrategy strategy, RewriteLimits lim) {
  validate(q);
  validate(t);
  PERewriting out;
  out.answer_vars = q.answer_vars;
  Splitter s{&t, strategy, lim, q.answer_vars, &out.notes};
  out.formula = s.split(q.atoms, {q.answer_vars.begin(), q.answer_vars.end()});
  out.disjuncts = 1;
  return out;
}

// ------------------------------------------------------------------ closure

Formula to_arbitrary_data(const Formula& f, const Ontology& t,
                          const ConjunctiveQuery& q) {
  EntailmentOrder ord = entailment_order(t, q);
  std::set<std::string> used;
  std::function<void(const Formula&)> collect = [&](const Formula& g) {
    if (g.kind == Formula::Kind::Atom)
      for (const Term& u : g.atom.args) used.insert(u.name);
    if (g.kind == Formula::Kind::Eq) {
      used.insert(g.lhs);
      used.insert(g.rhs);
    }
    used.insert(g.bound.begin(), g.bound.end());
    for (const Formula& k : g.kids) collect(k);
  };
  collect(f);
  std::string w = "w";
  while (used.count(w)) w += "'";

  auto inst = [&](const Generator& g, const Term& u) {
    switch (g.shape) {
      case GenShape::Unary:
        return f_atom(atom1(g.pred, u));
      case GenShape::Reflexive:
        return f_atom(atom2(g.pred, u, u));
      case GenShape::Out:
        return f_exists({w}, f_atom(atom2(g.pred, u, mkvar(w))));
      case GenShape::In:
        return f_exists({w}, f_atom(atom2(g.pred, mkvar(w), u)));
    }
    fail(Err::Syntax, "bad generator shape");
  };

  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if (g.kind == Formula::Kind::Atom) {
      const Atom& a = g.atom;
      if (a.arity() == 1 || (a.arity() == 2 && a.args[0] == a.args[1])) {
        Generator form{a.arity() == 1 ? GenShape::Unary : GenShape::Reflexive, a.pred};
        if (ord.uindex(form) < 0) return g;
        std::vector<Formula> alts;
        for (const Generator& rho : ord.below_unary(form)) alts.push_back(inst(rho, a.args[0]));
        return f_or(std::move(alts));
      }
      if (a.arity() == 2) {
        bool have_b = ord.bindex(a.pred, false) >= 0;
        bool have_r = ord.uindex({GenShape::Reflexive, a.pred}) >= 0;
        if (!have_b && !have_r) return g;
        std::vector<Formula> alts;
        for (const BinaryForm& b :
             have_b ? ord.below_binary(a.pred) : std::vector<BinaryForm>{{a.pred, false}})
          alts.push_back(f_atom(b.rev ? atom2(b.pred, a.args[1], a.args[0])
                                      : atom2(b.pred, a.args[0], a.args[1])));
        // a loop entailed at a single element also satisfies the atom
        if (have_r) {
          Generator self{GenShape::Reflexive, a.pred};
          std::vector<Formula> loops;
          for (const Generator& rho : ord.below_unary(self))
            if (!(rho == self)) loops.push_back(inst(rho, a.args[0]));
          if (!loops.empty())
            alts.push_back(f_and(
                {f_eq(a.args[0].name, a.args[1].name), f_or(std::move(loops))}));
        }
        return f_or(std::move(alts));
      }
      return g;
    }
    Formula out = g;
    for (Formula& k : out.kids) k = go(k);
    return out;
  };
  return go(f);
}

}  // namespace twr
