#include "twr/rewrite_ndl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "json.hpp"

#include "twr/chase.hpp"

namespace twr {

namespace {

NDLBodyAtom body_atom(Atom a) {
  NDLBodyAtom b;
  b.atom = std::move(a);
  return b;
}

NDLBodyAtom body_eq(std::string l, std::string r) {
  NDLBodyAtom b;
  b.is_eq = true;
  b.lhs = std::move(l);
  b.rhs = std::move(r);
  return b;
}

std::string fresh_var(const std::string& base, const std::set<std::string>& used) {
  std::string n = base;
  while (used.count(n)) n += "'";
  return n;
}

}  // namespace

NDLProgram circuit_to_ndl(const ConjunctiveQuery& q, const Ontology& t,
                          const std::vector<TreeWitness>& tws, const Circuit& c) {
  validate(q);
  validate(t);
  Signature sig;
  sig.add(t);
  sig.add(q);
  std::set<std::string> taken;
  for (const auto& [p, ar] : sig.arity) taken.insert(p);
  auto freshp = [&taken](std::string base) {
    while (taken.count(base)) base += "'";
    taken.insert(base);
    return base;
  };
  std::string d0_name = freshp("D0");
  std::string d_name = freshp("D");
  std::string gate_prefix = "G";
  {
    bool clash = true;
    while (clash) {
      clash = false;
      for (const auto& p : taken)
        if (p.rfind(gate_prefix, 0) == 0 &&
            p.find_first_not_of("0123456789", gate_prefix.size()) == std::string::npos)
          clash = true;
      if (clash) gate_prefix += "'";
    }
  }
  std::string goal_name = freshp("goal");

  std::vector<std::string> zs = q.all_vars();
  std::set<std::string> used_vars(zs.begin(), zs.end());
  std::vector<Term> zterms;
  for (const auto& z : zs) zterms.push_back(mkvar(z));
  Atom dz{d_name, zterms};

  NDLProgram out;
  out.goal = goal_name;
  std::set<NDLClause> seen;
  auto emit = [&](NDLClause cl) {
    if (seen.insert(cl).second) out.clauses.push_back(std::move(cl));
  };

  // domain-of-derived-individuals predicates
  std::string zv = fresh_var("z", used_vars);
  std::string wv = fresh_var("w", used_vars);
  for (const auto& [p, ar] : sig.arity) {
    if (ar == 1) {
      emit({atom1(d0_name, mkvar(zv)), {body_atom(atom1(p, mkvar(zv)))}});
    } else {
      emit({atom1(d0_name, mkvar(zv)), {body_atom(atom2(p, mkvar(zv), mkvar(wv)))}});
      emit({atom1(d0_name, mkvar(zv)), {body_atom(atom2(p, mkvar(wv), mkvar(zv)))}});
    }
  }
  {
    NDLClause dcl;
    dcl.head = dz;
    for (const auto& z : zs) dcl.body.push_back(body_atom(atom1(d0_name, mkvar(z))));
    emit(std::move(dcl));
  }

  // input name resolution via the shared witness-hypergraph naming
  Hypergraph h = tw_hypergraph(q, tws);
  std::map<std::string, Atom> atom_of;
  for (size_t i = 0; i < q.atoms.size(); ++i) atom_of[h.vertices[i].name] = q.atoms[i];
  std::map<std::string, size_t> witness_of;
  for (size_t i = 0; i < tws.size(); ++i) witness_of[h.edge_names[i]] = i;

  // reachable gates
  std::vector<bool> reach(c.gates.size(), false);
  if (c.output >= 0) {
    std::vector<int> stack{c.output};
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      if (reach[g]) continue;
      reach[g] = true;
      if (c.gates[g].a >= 0) stack.push_back(c.gates[g].a);
      if (c.gates[g].b >= 0) stack.push_back(c.gates[g].b);
    }
  }
  auto gname = [&](int i) { return gate_prefix + std::to_string(i); };
  auto gatom = [&](int i) { return Atom{gname(i), zterms}; };

  for (size_t i = 0; i < c.gates.size(); ++i) {
    if (!reach[i]) continue;
    const Circuit::Gate& g = c.gates[i];
    switch (g.op) {
      case Circuit::Op::Not:
        fail(Err::NonMonotoneCircuit, "circuit contains negation");
      case Circuit::Op::Const:
        if (g.cval) emit({gatom((int)i), {body_atom(dz)}});
        break;
      case Circuit::Op::And:
        emit({gatom((int)i), {body_atom(gatom(g.a)), body_atom(gatom(g.b))}});
        break;
      case Circuit::Op::Or:
        emit({gatom((int)i), {body_atom(gatom(g.a))}});
        emit({gatom((int)i), {body_atom(gatom(g.b))}});
        break;
      case Circuit::Op::Input: {
        auto ai = atom_of.find(g.name);
        if (ai != atom_of.end()) {
          emit({gatom((int)i), {body_atom(ai->second), body_atom(dz)}});
          break;
        }
        auto wi = witness_of.find(g.name);
        if (wi == witness_of.end())
          fail(Err::UnknownVertex, "circuit input " + g.name + " names no atom or witness");
        const TreeWitness& tw = tws[wi->second];
        std::string z0 = fresh_var("z0", used_vars);
        std::string w0 = fresh_var("w0", used_vars);
        for (const Generator& rho : tw.generators) {
          NDLClause cl;
          cl.head = gatom((int)i);
          switch (rho.shape) {
            case GenShape::Unary:
              cl.body.push_back(body_atom(atom1(rho.pred, mkvar(z0))));
              break;
            case GenShape::Reflexive:
              cl.body.push_back(body_atom(atom2(rho.pred, mkvar(z0), mkvar(z0))));
              break;
            case GenShape::Out:
              cl.body.push_back(body_atom(atom2(rho.pred, mkvar(z0), mkvar(w0))));
              break;
            case GenShape::In:
              cl.body.push_back(body_atom(atom2(rho.pred, mkvar(w0), mkvar(z0))));
              break;
          }
          for (const auto& y : tw.roots) cl.body.push_back(body_eq(z0, y));
          cl.body.push_back(body_atom(dz));
          emit(std::move(cl));
        }
        break;
      }
    }
  }

  // project onto the answer variables
  std::vector<Term> xs;
  for (const auto& x : q.answer_vars) xs.push_back(mkvar(x));
  if (c.output >= 0) emit({Atom{goal_name, xs}, {body_atom(gatom(c.output))}});
  out.check_and_order();
  return out;
}

// ------------------------------------------------------------------ pipeline

std::string PipelineTrace::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [stage, size] : stages) j.push_back({{"stage", stage}, {"size", size}});
  return j.dump(2);
}

NDLRewriting depth1_ndl_pipeline(const ConjunctiveQuery& q, const Ontology& t) {
  DepthResult d = ontology_depth(t);
  if (d.kind != DepthResult::Kind::Finite || d.depth > 1)
    fail(Err::NotDepthOne, "pipeline needs an ontology of depth at most 1");
  NDLRewriting out;
  std::vector<TreeWitness> tws = enumerate_tree_witnesses(q, t);
  Hypergraph h = tw_hypergraph(q, tws);
  Hypergraph p2 = hgp_from_hypergraph(h);
  Hypergraph p2n = normalize_degree2(p2);
  Circuit dual = hgp2_dual_circuit(p2n);
  Circuit c = circuit_dualize(dual);
  out.program = circuit_to_ndl(q, t, tws, c);
  out.trace.stages = {{"tree_witnesses", tws.size()},
                      {"hypergraph_edges", h.size()},
                      {"hgp_size", p2.size()},
                      {"normalized_hgp_size", p2n.size()},
                      {"circuit_gates", c.size()},
                      {"ndl_size", out.program.size()}};
  return out;
}

// ------------------------------------------------------------------ closure

namespace {

struct FormClasses {
  // class id per form index; representatives; immediate predecessor edges
  std::vector<int> cls;
  std::vector<int> rep;
  std::vector<std::pair<int, int>> hasse;  // (lower class, upper class)

  template <typename LE>
  void build(size_t n, LE&& le) {
    cls.assign(n, -1);
    int nc = 0;
    for (size_t i = 0; i < n; ++i) {
      if (cls[i] >= 0) continue;
      cls[i] = nc;
      rep.push_back((int)i);
      for (size_t j = i + 1; j < n; ++j)
        if (cls[j] < 0 && le(i, j) && le(j, i)) cls[j] = nc;
      ++nc;
    }
    for (int a = 0; a < nc; ++a)
      for (int b = 0; b < nc; ++b) {
        if (a == b || !le(rep[a], rep[b])) continue;
        bool immediate = true;
        for (int m = 0; m < nc && immediate; ++m)
          if (m != a && m != b && le(rep[a], rep[m]) && le(rep[m], rep[b]) &&
              !le(rep[m], rep[a]) && !le(rep[b], rep[m]))
            immediate = false;
        if (immediate) hasse.push_back({a, b});
      }
  }
};

}  // namespace

NDLProgram ndl_to_arbitrary_data(const NDLProgram& p, const Ontology& t) {
  std::set<std::string> intensional;
  for (const auto& pr : p.intensional()) intensional.insert(pr);
  Signature sig;
  sig.add(t);
  for (const NDLClause& cl : p.clauses)
    for (const NDLBodyAtom& b : cl.body)
      if (!b.is_eq && !intensional.count(b.atom.pred)) sig.add(b.atom);
  EntailmentOrder ord = entailment_order(t, sig);

  std::set<std::string> taken = intensional;
  for (const auto& [pr, ar] : sig.arity) taken.insert(pr);
  auto freshp = [&taken](std::string base) {
    while (taken.count(base)) base += "'";
    taken.insert(base);
    return base;
  };

  FormClasses uc, bc;
  uc.build(ord.uforms.size(), [&](size_t i, size_t j) { return (bool)ord.ule[i][j]; });
  bc.build(ord.bforms.size(), [&](size_t i, size_t j) { return (bool)ord.ble[i][j]; });

  auto uclass_name = [&](int c) {
    const Generator& g = ord.uforms[uc.rep[c]];
    switch (g.shape) {
      case GenShape::Unary:
        return g.pred + "*";
      case GenShape::Reflexive:
        return g.pred + "*r";
      case GenShape::Out:
        return g.pred + "*o";
      case GenShape::In:
        return g.pred + "*i";
    }
    return g.pred;
  };
  std::vector<std::string> uname(uc.rep.size()), bname(bc.rep.size());
  for (size_t c = 0; c < uc.rep.size(); ++c) uname[c] = freshp(uclass_name((int)c));
  for (size_t c = 0; c < bc.rep.size(); ++c) {
    const BinaryForm& f = ord.bforms[bc.rep[c]];
    bname[c] = freshp(f.pred + (f.rev ? "*t" : "*"));
  }

  NDLProgram out;
  out.goal = p.goal;
  Term x1 = mkvar("x1"), x2 = mkvar("x2");
  // base clauses: one per form, into its class predicate
  for (size_t i = 0; i < ord.uforms.size(); ++i) {
    const Generator& g = ord.uforms[i];
    NDLClause cl;
    cl.head = atom1(uname[uc.cls[i]], x1);
    switch (g.shape) {
      case GenShape::Unary:
        cl.body.push_back(body_atom(atom1(g.pred, x1)));
        break;
      case GenShape::Reflexive:
        cl.body.push_back(body_atom(atom2(g.pred, x1, x1)));
        break;
      case GenShape::Out:
        cl.body.push_back(body_atom(atom2(g.pred, x1, x2)));
        break;
      case GenShape::In:
        cl.body.push_back(body_atom(atom2(g.pred, x2, x1)));
        break;
    }
    out.clauses.push_back(std::move(cl));
  }
  for (size_t i = 0; i < ord.bforms.size(); ++i) {
    const BinaryForm& f = ord.bforms[i];
    NDLClause cl;
    cl.head = atom2(bname[bc.cls[i]], x1, x2);
    cl.body.push_back(body_atom(f.rev ? atom2(f.pred, x2, x1) : atom2(f.pred, x1, x2)));
    out.clauses.push_back(std::move(cl));
  }
  // immediate-predecessor clauses between classes
  for (const auto& [lo, hi] : uc.hasse)
    out.clauses.push_back({atom1(uname[hi], x1), {body_atom(atom1(uname[lo], x1))}});
  for (const auto& [lo, hi] : bc.hasse)
    out.clauses.push_back(
        {atom2(bname[hi], x1, x2), {body_atom(atom2(bname[lo], x1, x2))}});

  // rewrite the original clauses, replacing extensional atoms by their class
  // predicates; atoms whose only variables are projected away pick the form
  // matching the variable kept in the clause
  for (const NDLClause& cl : p.clauses) {
    std::map<std::string, int> occur;
    for (const Term& u : cl.head.args)
      if (u.is_var) ++occur[u.name];
    for (const NDLBodyAtom& b : cl.body) {
      if (b.is_eq) {
        ++occur[b.lhs];
        ++occur[b.rhs];
      } else {
        for (const Term& u : b.atom.args)
          if (u.is_var) ++occur[u.name];
      }
    }
    std::vector<std::vector<NDLBodyAtom>> bodies{{}};
    for (const NDLBodyAtom& b : cl.body) {
      std::vector<NDLBodyAtom> alts;
      if (b.is_eq || intensional.count(b.atom.pred)) {
        alts.push_back(b);
      } else if (b.atom.arity() == 1) {
        alts.push_back(body_atom(atom1(
            uname[uc.cls[ord.uindex({GenShape::Unary, b.atom.pred})]], b.atom.args[0])));
      } else if (b.atom.args[0] == b.atom.args[1]) {
        alts.push_back(body_atom(atom1(
            uname[uc.cls[ord.uindex({GenShape::Reflexive, b.atom.pred})]], b.atom.args[0])));
      } else {
        bool first_shared = !b.atom.args[0].is_var || occur[b.atom.args[0].name] > 1;
        bool second_shared = !b.atom.args[1].is_var || occur[b.atom.args[1].name] > 1;
        if (first_shared && second_shared) {
          alts.push_back(body_atom(atom2(bname[bc.cls[ord.bindex(b.atom.pred, false)]],
                                         b.atom.args[0], b.atom.args[1])));
        } else {
          if (first_shared || !second_shared)
            alts.push_back(body_atom(atom1(
                uname[uc.cls[ord.uindex({GenShape::Out, b.atom.pred})]], b.atom.args[0])));
          if (second_shared || !first_shared)
            alts.push_back(body_atom(atom1(
                uname[uc.cls[ord.uindex({GenShape::In, b.atom.pred})]], b.atom.args[1])));
        }
      }
      std::vector<std::vector<NDLBodyAtom>> next;
      for (const auto& base : bodies)
        for (const auto& alt : alts) {
          auto body = base;
          body.push_back(alt);
          next.push_back(std::move(body));
        }
      bodies = std::move(next);
    }
    for (auto& body : bodies) out.clauses.push_back({cl.head, std::move(body)});
  }
  out.check_and_order();
  return out;
}

}  // namespace twr
