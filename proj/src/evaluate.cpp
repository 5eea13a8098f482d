#include "twr/evaluate.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace twr {

namespace {

using Env = std::map<std::string, std::string>;

std::string term_value(const Term& t, const Env& env) {
  if (!t.is_var) return t.name;
  auto it = env.find(t.name);
  if (it == env.end()) fail(Err::UnboundVariable, "unbound variable " + t.name);
  return it->second;
}

bool fo_truth(const Formula& f, Env& env, const std::vector<std::string>& dom,
              const std::set<Atom>& facts) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True:
      return true;
    case K::False:
      return false;
    case K::Atom: {
      Atom g = f.atom;
      for (auto& t : g.args) t = mkconst(term_value(t, env));
      return facts.count(g) > 0;
    }
    case K::Eq:
      return term_value(mkvar(f.lhs), env) == term_value(mkvar(f.rhs), env);
    case K::And:
      for (const auto& k : f.kids)
        if (!fo_truth(k, env, dom, facts)) return false;
      return true;
    case K::Or:
      for (const auto& k : f.kids)
        if (fo_truth(k, env, dom, facts)) return true;
      return false;
    case K::Not:
      return !fo_truth(f.kids[0], env, dom, facts);
    case K::Exists:
    case K::Forall: {
      bool want = f.kind == K::Exists;
      std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (i == f.bound.size()) return fo_truth(f.kids[0], env, dom, facts) == want;
        auto saved = env.find(f.bound[i]) != env.end()
                         ? std::optional<std::string>(env[f.bound[i]])
                         : std::nullopt;
        for (const auto& c : dom) {
          env[f.bound[i]] = c;
          if (go(i + 1)) {
            if (saved)
              env[f.bound[i]] = *saved;
            else
              env.erase(f.bound[i]);
            return true;
          }
        }
        if (saved)
          env[f.bound[i]] = *saved;
        else
          env.erase(f.bound[i]);
        return false;
      };
      return go(0) == want;
    }
  }
  fail(Err::Syntax, "bad formula node");
}

}  // namespace

AnswerSet eval_fo(const Formula& f, const std::vector<std::string>& answer_vars,
                  const DataInstance& d) {
  std::vector<std::string> dom = d.individuals();
  std::set<Atom> facts(d.atoms.begin(), d.atoms.end());
  AnswerSet out;
  out.arity = answer_vars.size();
  Env env;
  std::vector<std::string> tuple(answer_vars.size());
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == answer_vars.size()) {
      if (fo_truth(f, env, dom, facts)) out.tuples.insert(tuple);
      return;
    }
    for (const auto& c : dom) {
      env[answer_vars[i]] = c;
      tuple[i] = c;
      go(i + 1);
    }
    env.erase(answer_vars[i]);
  };
  if (answer_vars.empty()) {
    if (fo_truth(f, env, dom, facts)) out.tuples.insert(std::vector<std::string>{});
  } else {
    go(0);
  }
  return out;
}

// ------------------------------------------------------------------ ndl

namespace {

using Relation = std::set<std::vector<std::string>>;

void solve_body(const std::vector<NDLBodyAtom>& body, std::vector<bool>& done, Env& env,
                const std::map<std::string, Relation>& rels,
                const std::function<void()>& emit) {
  // pick an equality with a bound side if possible, else the first atom
  int pick = -1;
  for (size_t i = 0; i < body.size(); ++i) {
    if (done[i]) continue;
    if (body[i].is_eq) {
      if (env.count(body[i].lhs) || env.count(body[i].rhs)) {
        pick = (int)i;
        break;
      }
    } else if (pick < 0) {
      pick = (int)i;
    }
  }
  if (pick < 0) {
    for (size_t i = 0; i < body.size(); ++i)
      if (!done[i]) fail(Err::UnboundVariable, "equality between unbound variables");
    emit();
    return;
  }
  done[pick] = true;
  const NDLBodyAtom& b = body[pick];
  if (b.is_eq) {
    bool lb = env.count(b.lhs) > 0, rb = env.count(b.rhs) > 0;
    if (lb && rb) {
      if (env[b.lhs] == env[b.rhs]) solve_body(body, done, env, rels, emit);
    } else {
      const std::string& from = lb ? b.lhs : b.rhs;
      const std::string& to = lb ? b.rhs : b.lhs;
      env[to] = env[from];
      solve_body(body, done, env, rels, emit);
      env.erase(to);
    }
  } else {
    auto it = rels.find(b.atom.pred);
    if (it != rels.end()) {
      for (const auto& tup : it->second) {
        if (tup.size() != b.atom.args.size()) continue;
        std::vector<std::string> bound_here;
        bool ok = true;
        for (size_t k = 0; k < tup.size() && ok; ++k) {
          const Term& t = b.atom.args[k];
          if (!t.is_var) {
            ok = t.name == tup[k];
            continue;
          }
          auto e = env.find(t.name);
          if (e != env.end()) {
            ok = e->second == tup[k];
          } else {
            env[t.name] = tup[k];
            bound_here.push_back(t.name);
          }
        }
        if (ok) solve_body(body, done, env, rels, emit);
        for (const auto& v : bound_here) env.erase(v);
      }
    }
  }
  done[pick] = false;
}

}  // namespace

AnswerSet eval_ndl(const NDLProgram& p, const DataInstance& d) {
  std::vector<std::string> order = p.check_and_order();
  std::map<std::string, Relation> rels;
  for (const Atom& a : d.atoms) {
    std::vector<std::string> tup;
    for (const Term& t : a.args) tup.push_back(t.name);
    rels[a.pred].insert(std::move(tup));
  }
  std::set<std::string> intensional;
  for (const auto& pr : p.intensional()) {
    intensional.insert(pr);
    rels.erase(pr);  // intensional predicates never read from the data
  }
  for (const auto& pred : order) {
    if (!intensional.count(pred)) continue;
    Relation r = rels.count(pred) ? rels[pred] : Relation{};
    for (const NDLClause& c : p.clauses) {
      if (c.head.pred != pred) continue;
      std::vector<bool> done(c.body.size(), false);
      Env env;
      solve_body(c.body, done, env, rels, [&]() {
        std::vector<std::string> tup;
        for (const Term& t : c.head.args)
          tup.push_back(t.is_var ? term_value(t, env) : t.name);
        r.insert(std::move(tup));
      });
    }
    rels[pred] = std::move(r);
  }
  size_t arity = 0;
  for (const NDLClause& c : p.clauses)
    if (c.head.pred == p.goal) arity = c.head.arity();
  AnswerSet out;
  out.arity = arity;
  out.tuples = rels.count(p.goal) ? rels[p.goal] : Relation{};
  return out;
}

// ------------------------------------------------------------------ chase

AnswerSet certain_answers(const Ontology& t, const DataInstance& d,
                          const ConjunctiveQuery& q) {
  validate(q);
  CanonicalModel m = build_chase(t, d, {(int)q.all_vars().size(), 1u << 20});
  std::vector<std::string> vars = q.all_vars();
  std::map<std::string, int> vi;
  for (size_t i = 0; i < vars.size(); ++i) vi[vars[i]] = (int)i;
  size_t nv = vars.size(), ne = m.elems.size();
  std::set<std::string> answer(q.answer_vars.begin(), q.answer_vars.end());
  AnswerSet out;
  out.arity = q.answer_vars.size();

  std::map<std::string, std::vector<const GroundAtom*>> by_pred;
  for (const auto& g : m.atoms) by_pred[g.pred].push_back(&g);

  // homomorphism search as a binary constraint network: every atom has at
  // most two distinct variables, so atoms become unary domain restrictions
  // or allowed-pair constraints
  std::vector<std::vector<char>> dom(nv, std::vector<char>(ne, 1));
  for (size_t i = 0; i < nv; ++i)
    if (answer.count(vars[i]))  // answer variables never map to anonymous elements
      for (size_t e = 0; e < ne; ++e)
        if (m.elems[e].is_null) dom[i][e] = 0;

  std::map<std::pair<int, int>, std::set<std::pair<int, int>>> pair_allowed;
  std::map<std::pair<int, int>, bool> pair_seen;
  for (const Atom& at : q.atoms) {
    std::vector<int> avs;
    for (const Term& tm : at.args) avs.push_back(vi.at(tm.name));
    bool unary = avs.size() == 1 || avs[0] == avs[1];
    if (unary) {
      std::vector<char> ok(ne, 0);
      auto it = by_pred.find(at.pred);
      if (it != by_pred.end())
        for (const auto* g : it->second) {
          if (g->args.size() != at.args.size()) continue;
          if (g->args.size() == 2 && g->args[0] != g->args[1]) continue;
          ok[g->args[0]] = 1;
        }
      for (size_t e = 0; e < ne; ++e) dom[avs[0]][e] &= ok[e];
    } else {
      int u = std::min(avs[0], avs[1]), v = std::max(avs[0], avs[1]);
      std::set<std::pair<int, int>> allowed;
      auto it = by_pred.find(at.pred);
      if (it != by_pred.end())
        for (const auto* g : it->second) {
          if (g->args.size() != 2) continue;
          int a = avs[0] == u ? g->args[0] : g->args[1];
          int b = avs[0] == u ? g->args[1] : g->args[0];
          allowed.insert({a, b});
        }
      auto key = std::make_pair(u, v);
      if (!pair_seen[key]) {
        pair_seen[key] = true;
        pair_allowed[key] = std::move(allowed);
      } else {
        std::set<std::pair<int, int>> both;
        for (const auto& pr : pair_allowed[key])
          if (allowed.count(pr)) both.insert(pr);
        pair_allowed[key] = std::move(both);
      }
    }
  }

  struct Cons {
    int u, v;
    std::vector<std::vector<int>> fwd, bwd;  // fwd[a] = allowed v-values with u=a
  };
  std::vector<Cons> cons;
  std::vector<std::vector<int>> cons_of(nv);
  for (const auto& [key, allowed] : pair_allowed) {
    Cons c{key.first, key.second, std::vector<std::vector<int>>(ne),
           std::vector<std::vector<int>>(ne)};
    for (const auto& [a, b] : allowed) {
      c.fwd[a].push_back(b);
      c.bwd[b].push_back(a);
    }
    cons_of[c.u].push_back((int)cons.size());
    cons_of[c.v].push_back((int)cons.size());
    cons.push_back(std::move(c));
  }

  // prune tgt's domain to values supported by the other endpoint
  // returns -1 on wipe-out, 1 if narrowed, 0 otherwise
  auto revise = [&](int ci, int tgt) {
    const Cons& c = cons[ci];
    int oth = tgt == c.u ? c.v : c.u;
    const auto& adj = tgt == c.u ? c.fwd : c.bwd;
    int changed = 0;
    size_t left = 0;
    for (size_t a = 0; a < ne; ++a) {
      if (!dom[tgt][a]) continue;
      bool sup = false;
      for (int b : adj[a])
        if (dom[oth][b]) {
          sup = true;
          break;
        }
      if (sup)
        ++left;
      else {
        dom[tgt][a] = 0;
        changed = 1;
      }
    }
    return left == 0 ? -1 : changed;
  };
  auto propagate = [&](std::deque<std::pair<int, int>> work) {
    while (!work.empty()) {
      auto [ci, tgt] = work.front();
      work.pop_front();
      int r = revise(ci, tgt);
      if (r < 0) return false;
      if (r > 0)
        for (int cj : cons_of[tgt]) {
          int next = cons[cj].u == tgt ? cons[cj].v : cons[cj].u;
          work.push_back({cj, next});
        }
    }
    return true;
  };

  std::deque<std::pair<int, int>> init;
  for (size_t ci = 0; ci < cons.size(); ++ci) {
    init.push_back({(int)ci, cons[ci].u});
    init.push_back({(int)ci, cons[ci].v});
  }
  for (size_t i = 0; i < nv; ++i) {
    bool any = false;
    for (size_t e = 0; e < ne; ++e) any = any || dom[i][e];
    if (!any) return out;
  }
  if (!propagate(std::move(init))) return out;

  bool stop = false;  // Boolean queries need only one homomorphism
  std::function<void()> search = [&]() {
    int best = -1;
    size_t best_count = 0;
    for (size_t i = 0; i < nv; ++i) {
      size_t cnt = 0;
      for (size_t e = 0; e < ne; ++e) cnt += dom[i][e];
      if (cnt > 1 && (best < 0 || cnt < best_count)) {
        best = (int)i;
        best_count = cnt;
      }
    }
    if (best < 0) {  // all domains singleton: a homomorphism
      std::vector<std::string> tup;
      for (const auto& v : q.answer_vars) {
        int iv = vi.at(v);
        for (size_t e = 0; e < ne; ++e)
          if (dom[iv][e]) tup.push_back(m.elems[e].name);
      }
      out.tuples.insert(std::move(tup));
      stop = q.answer_vars.empty();
      return;
    }
    auto saved = dom;
    for (size_t e = 0; e < ne && !stop; ++e) {
      if (!saved[best][e]) continue;
      dom = saved;
      std::fill(dom[best].begin(), dom[best].end(), 0);
      dom[best][e] = 1;
      std::deque<std::pair<int, int>> work;
      for (int ci : cons_of[best])
        work.push_back({ci, cons[ci].u == best ? cons[ci].v : cons[ci].u});
      if (propagate(std::move(work))) search();
    }
    dom = std::move(saved);
  };
  search();
  return out;
}

// ------------------------------------------------------------------ tree CQ

AnswerSet eval_tree_cq(const ConjunctiveQuery& q, const DataInstance& d) {
  validate(q);
  std::vector<std::string> vars = q.all_vars();
  std::map<std::string, int> vidx;
  for (size_t i = 0; i < vars.size(); ++i) vidx[vars[i]] = (int)i;
  size_t n = vars.size();
  // unary constraints per var; binary atom lists per unordered var pair
  std::vector<std::vector<Atom>> local(n);
  std::map<std::pair<int, int>, std::vector<Atom>> pair_atoms;
  for (const Atom& a : q.atoms) {
    std::set<int> vs;
    for (const Term& t : a.args) vs.insert(vidx[t.name]);
    if (vs.size() == 1) {
      local[*vs.begin()].push_back(a);
    } else {
      int u = *vs.begin(), v = *std::next(vs.begin());
      pair_atoms[{u, v}].push_back(a);
    }
  }
  // spanning forest; any extra pair edge makes a cycle
  std::vector<int> parent(n, -2);
  std::vector<std::vector<int>> children(n);
  std::vector<std::vector<int>> roots_order;
  std::map<std::pair<int, int>, bool> used_edge;
  std::vector<int> comp(n, -1);
  std::vector<int> roots;
  for (size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int c = (int)roots.size();
    roots.push_back((int)s);
    parent[s] = -1;
    comp[s] = c;
    std::vector<int> stack{(int)s}, order;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (const auto& pr : pair_atoms) {
        int a = pr.first.first, b = pr.first.second;
        int other = a == v ? b : (b == v ? a : -1);
        if (other < 0) continue;
        if (comp[other] < 0) {
          comp[other] = c;
          parent[other] = v;
          children[v].push_back(other);
          used_edge[pr.first] = true;
          stack.push_back(other);
        } else if (other != parent[v] && !used_edge.count(pr.first)) {
          fail(Err::NotTree, "query graph has a cycle");
        }
      }
    }
    roots_order.push_back(std::move(order));
  }

  std::vector<std::string> dom = d.individuals();
  std::set<Atom> facts(d.atoms.begin(), d.atoms.end());
  auto sat_local = [&](int v, const std::string& c) {
    for (Atom a : local[v]) {
      for (auto& t : a.args) t = mkconst(c);
      if (!facts.count(a)) return false;
    }
    return true;
  };
  auto sat_pair = [&](int u, int v, const std::string& cu, const std::string& cv) {
    auto it = pair_atoms.find({std::min(u, v), std::max(u, v)});
    for (Atom a : it->second) {
      for (auto& t : a.args)
        t = mkconst(t.name == vars[u] ? cu : cv);
      if (!facts.count(a)) return false;
    }
    return true;
  };

  // bottom-up semi-join reduction
  std::vector<std::set<std::string>> cand(n);
  for (const auto& order : roots_order)
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      for (const auto& c : dom) {
        if (!sat_local(v, c)) continue;
        bool ok = true;
        for (int u : children[v]) {
          bool any = false;
          for (const auto& cu : cand[u]) any = any || sat_pair(v, u, c, cu);
          ok = ok && any;
          if (!ok) break;
        }
        if (ok) cand[v].insert(c);
      }
    }

  std::set<std::string> answer(q.answer_vars.begin(), q.answer_vars.end());
  AnswerSet out;
  out.arity = q.answer_vars.size();
  // per-component projections onto answer variables, then cartesian product
  std::vector<std::set<std::vector<std::string>>> projections;
  std::vector<std::vector<std::string>> proj_vars;
  for (size_t ci = 0; ci < roots_order.size(); ++ci) {
    const auto& order = roots_order[ci];
    std::vector<std::string> avars;
    for (int v : order)
      if (answer.count(vars[v])) avars.push_back(vars[v]);
    std::sort(avars.begin(), avars.end());
    if (avars.empty()) {
      if (cand[roots[ci]].empty()) return out;  // unsatisfiable component
      continue;
    }
    std::set<std::vector<std::string>> proj;
    std::vector<std::string> asg(n);
    std::function<void(size_t)> go = [&](size_t i) {
      if (i == order.size()) {
        std::vector<std::string> tup;
        for (const auto& v : avars) tup.push_back(asg[vidx[v]]);
        proj.insert(std::move(tup));
        return;
      }
      int v = order[i];
      for (const auto& c : cand[v]) {
        if (parent[v] >= 0 && !sat_pair(parent[v], v, asg[parent[v]], c)) continue;
        asg[v] = c;
        go(i + 1);
      }
    };
    go(0);
    if (proj.empty()) return out;
    projections.push_back(std::move(proj));
    proj_vars.push_back(std::move(avars));
  }
  // combine and order by q.answer_vars
  std::vector<std::vector<std::string>> acc{{}};
  std::vector<std::string> acc_vars;
  for (size_t i = 0; i < projections.size(); ++i) {
    std::vector<std::vector<std::string>> next;
    for (const auto& base : acc)
      for (const auto& tup : projections[i]) {
        auto row = base;
        row.insert(row.end(), tup.begin(), tup.end());
        next.push_back(std::move(row));
      }
    acc = std::move(next);
    acc_vars.insert(acc_vars.end(), proj_vars[i].begin(), proj_vars[i].end());
  }
  std::map<std::string, size_t> pos;
  for (size_t i = 0; i < acc_vars.size(); ++i) pos[acc_vars[i]] = i;
  for (const auto& row : acc) {
    std::vector<std::string> tup;
    for (const auto& v : q.answer_vars) tup.push_back(row[pos.at(v)]);
    out.tuples.insert(std::move(tup));
  }
  return out;
}

}  // namespace twr
