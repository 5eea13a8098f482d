#include "twr/chase.hpp"

#include <algorithm>
#include <cassert>

namespace twr {

int CanonicalModel::element_id(const std::string& name) const {
  for (size_t i = 0; i < elems.size(); i++)
    if (elems[i].name == name) return (int)i;
  return -1;
}

std::vector<int> CanonicalModel::constants() const {
  std::vector<int> out;
  for (size_t i = 0; i < elems.size(); i++)
    if (!elems[i].is_null) out.push_back((int)i);
  return out;
}

std::vector<int> CanonicalModel::nulls() const {
  std::vector<int> out;
  for (size_t i = 0; i < elems.size(); i++)
    if (elems[i].is_null) out.push_back((int)i);
  return out;
}

std::string CanonicalModel::render() const {
  std::string out;
  auto nm = [&](int e) {
    return elems[e].is_null ? "_:" + elems[e].name : elems[e].name;
  };
  for (const auto& a : atoms) {
    out += a.pred + "(";
    for (size_t i = 0; i < a.args.size(); i++) {
      if (i) out += ",";
      out += nm(a.args[i]);
    }
    out += ")\n";
  }
  return out;
}

CanonicalModel build_chase(const Ontology& t, const DataInstance& a, ChaseLimits lim) {
  CanonicalModel m;
  m.depth_bound = lim.depth_bound;
  for (const auto& c : a.individuals())
    m.elems.push_back({false, c, -1, -1, 0});
  auto cid = [&](const std::string& n) { return m.element_id(n); };
  for (const auto& at : a.atoms) {
    GroundAtom g{at.pred, {}};
    for (const auto& tm : at.args) g.args.push_back(cid(tm.name));
    m.atoms.insert(std::move(g));
  }

  std::map<std::pair<int, int>, int> null_of;  // (parent element, tgd idx) -> element

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ti = 0; ti < t.tgds.size(); ti++) {
      const TGD& g = t.tgds[ti];
      // collect triggers as variable bindings (u, v); v = -1 when absent
      std::vector<std::pair<int, int>> triggers;
      const Atom& b = g.body;
      for (const auto& at : m.atoms) {
        if (at.pred != b.pred || at.args.size() != b.args.size()) continue;
        if (b.args.size() == 1) {
          triggers.push_back({at.args[0], -1});
        } else if (b.args[0].name == b.args[1].name) {
          if (at.args[0] == at.args[1]) triggers.push_back({at.args[0], -1});
        } else {
          triggers.push_back({at.args[0], at.args[1]});
        }
      }
      const std::string& xv = b.args[0].name;
      const std::string yv = b.args.size() == 2 ? b.args[1].name : std::string();

      for (auto [u, v] : triggers) {
        int w = -1;
        if (g.head_existential) {
          auto key = std::make_pair(u, (int)ti);
          auto it = null_of.find(key);
          if (it != null_of.end()) {
            w = it->second;
          } else {
            if (m.elems[u].depth + 1 > lim.depth_bound) {
              m.truncated = true;
              continue;
            }
            if (m.elems.size() >= lim.max_elements) {
              m.truncated = true;
              continue;
            }
            CanonicalModel::Element e;
            e.is_null = true;
            e.parent = u;
            e.tgd = (int)ti;
            e.depth = m.elems[u].depth + 1;
            e.name = m.elems[u].name + "." + std::to_string(ti);
            m.elems.push_back(e);
            w = (int)m.elems.size() - 1;
            null_of[key] = w;
            changed = true;
          }
        }
        auto subst = [&](const Term& tm) {
          if (g.head_existential && tm.name == *g.head_existential) return w;
          if (tm.name == xv) return u;
          if (!yv.empty() && tm.name == yv) return v;
          assert(false);
          return -1;
        };
        for (const auto& h : g.head) {
          GroundAtom ga{h.pred, {}};
          for (const auto& tm : h.args) ga.args.push_back(subst(tm));
          if (m.atoms.insert(std::move(ga)).second) changed = true;
        }
      }
    }
  }
  return m;
}

static const char* kSeedPred = "Seed$";

CanonicalModel generator_model(const Ontology& t, const Generator& rho, ChaseLimits lim) {
  Ontology t2 = t;
  TGD seed;
  seed.body = atom1(kSeedPred, mkvar("x"));
  switch (rho.shape) {
    case GenShape::Unary: seed.head = {atom1(rho.pred, mkvar("x"))}; break;
    case GenShape::Reflexive: seed.head = {atom2(rho.pred, mkvar("x"), mkvar("x"))}; break;
    case GenShape::Out:
      seed.head_existential = "y";
      seed.head = {atom2(rho.pred, mkvar("x"), mkvar("y"))};
      break;
    case GenShape::In:
      seed.head_existential = "y";
      seed.head = {atom2(rho.pred, mkvar("y"), mkvar("x"))};
      break;
  }
  t2.tgds.push_back(seed);
  DataInstance a;
  a.atoms = {atom1(kSeedPred, mkconst("a"))};
  CanonicalModel m = build_chase(t2, a, lim);
  for (auto it = m.atoms.begin(); it != m.atoms.end();)
    it = it->pred == kSeedPred ? m.atoms.erase(it) : std::next(it);
  return m;
}

// ---------------------------------------------------------------- depth

namespace {

// incident-atom type of a null relative to its parent
struct NullConfig {
  std::set<std::string> unary, loops, in, out;
  friend auto operator<=>(const NullConfig&, const NullConfig&) = default;
};

NullConfig config_of(const CanonicalModel& m, int w) {
  NullConfig c;
  int p = m.elems[w].parent;
  for (const auto& a : m.atoms) {
    if (a.args.size() == 1) {
      if (a.args[0] == w) c.unary.insert(a.pred);
    } else {
      if (a.args[0] == w && a.args[1] == w) c.loops.insert(a.pred);
      else if (a.args[0] == p && a.args[1] == w) c.in.insert(a.pred);
      else if (a.args[0] == w && a.args[1] == p) c.out.insert(a.pred);
    }
  }
  return c;
}

}  // namespace

DepthResult ontology_depth(const Ontology& t, int cap) {
  Signature sig;
  sig.add(t);
  int best = 0;
  bool exceeded = false;
  for (const auto& rho : all_generators(sig)) {
    ChaseLimits lim;
    lim.depth_bound = cap + 2;
    lim.max_elements = 1u << 18;
    CanonicalModel m = generator_model(t, rho, lim);
    std::vector<NullConfig> cfg(m.elems.size());
    for (int w : m.nulls()) {
      cfg[w] = config_of(m, w);
      if (!cfg[w].loops.empty()) return {DepthResult::Kind::Unbounded, 0};
    }
    for (int w : m.nulls()) {
      best = std::max(best, m.elems[w].depth);
      for (int anc = m.elems[w].parent; anc >= 0 && m.elems[anc].is_null;
           anc = m.elems[anc].parent)
        if (cfg[anc] == cfg[w]) return {DepthResult::Kind::Unbounded, 0};
    }
    if (m.truncated || best > cap) exceeded = true;
  }
  if (exceeded) return {DepthResult::Kind::ExceedsCap, 0};
  return {DepthResult::Kind::Finite, best};
}

// ---------------------------------------------------------------- saturate

DataInstance saturate(const Ontology& t, const DataInstance& a) {
  DataInstance cur = a;
  for (;;) {
    ChaseLimits lim;
    lim.depth_bound = 2;  // ground backflow crosses at most one null level
    CanonicalModel m = build_chase(t, cur, lim);
    DataInstance next = cur;
    for (const auto& ga : m.atoms) {
      bool ground = true;
      for (int e : ga.args)
        if (m.elems[e].is_null) ground = false;
      if (!ground) continue;
      Atom at;
      at.pred = ga.pred;
      for (int e : ga.args) at.args.push_back(mkconst(m.elems[e].name));
      next.atoms.push_back(std::move(at));
    }
    next.normalize();
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------- order

int EntailmentOrder::uindex(const Generator& g) const {
  auto it = std::lower_bound(uforms.begin(), uforms.end(), g);
  if (it == uforms.end() || !(*it == g)) return -1;
  return (int)(it - uforms.begin());
}

int EntailmentOrder::bindex(const std::string& pred, bool rev) const {
  BinaryForm f{pred, rev};
  auto it = std::lower_bound(bforms.begin(), bforms.end(), f);
  if (it == bforms.end() || !(*it == f)) return -1;
  return (int)(it - bforms.begin());
}

std::vector<Generator> EntailmentOrder::below_unary(const Generator& g) const {
  std::vector<Generator> out;
  int j = uindex(g);
  if (j < 0) return {g};
  for (size_t i = 0; i < uforms.size(); i++)
    if (ule[i][j]) out.push_back(uforms[i]);
  return out;
}

std::vector<BinaryForm> EntailmentOrder::below_binary(const std::string& pred) const {
  std::vector<BinaryForm> out;
  int j = bindex(pred, false);
  if (j < 0) return {{pred, false}};
  for (size_t i = 0; i < bforms.size(); i++)
    if (ble[i][j]) out.push_back(bforms[i]);
  return out;
}

namespace {

void transitive_reflexive_close(std::vector<std::vector<bool>>& le) {
  size_t n = le.size();
  for (size_t i = 0; i < n; i++) le[i][i] = true;
  for (size_t k = 0; k < n; k++)
    for (size_t i = 0; i < n; i++)
      if (le[i][k])
        for (size_t j = 0; j < n; j++)
          if (le[k][j]) le[i][j] = true;
}

}  // namespace

EntailmentOrder entailment_order(const Ontology& t, const ConjunctiveQuery& q) {
  Signature sig;
  sig.add(t);
  sig.add(q);
  return entailment_order(t, sig);
}

EntailmentOrder entailment_order(const Ontology& t, const Signature& sig) {
  EntailmentOrder o;
  o.uforms = all_generators(sig);
  for (const auto& [p, ar] : sig.arity)
    if (ar == 2) {
      o.bforms.push_back({p, false});
      o.bforms.push_back({p, true});
    }
  std::sort(o.bforms.begin(), o.bforms.end());
  size_t nu = o.uforms.size(), nb = o.bforms.size();
  o.ule.assign(nu, std::vector<bool>(nu, false));
  o.ble.assign(nb, std::vector<bool>(nb, false));

  auto urel = [&](const Generator& lo, const Generator& hi) {
    int i = o.uindex(lo), j = o.uindex(hi);
    if (i >= 0 && j >= 0) o.ule[i][j] = true;
  };
  auto brel = [&](const std::string& lp, bool lr, const std::string& hp, bool hr) {
    int i = o.bindex(lp, lr), j = o.bindex(hp, hr);
    if (i >= 0 && j >= 0) o.ble[i][j] = true;
  };

  for (const auto& g : t.tgds) {
    const Atom& b = g.body;
    bool binary_body = b.args.size() == 2 && b.args[0].name != b.args[1].name;
    // pivots: body variable -> its unary form
    std::vector<std::pair<std::string, Generator>> pivots;
    if (b.args.size() == 1) {
      pivots.push_back({b.args[0].name, {GenShape::Unary, b.pred}});
    } else if (!binary_body) {
      pivots.push_back({b.args[0].name, {GenShape::Reflexive, b.pred}});
    } else {
      pivots.push_back({b.args[0].name, {GenShape::Out, b.pred}});
      pivots.push_back({b.args[1].name, {GenShape::In, b.pred}});
    }
    for (const auto& h : g.head) {
      for (const auto& [pv, pform] : pivots) {
        if (h.args.size() == 1) {
          if (h.args[0].name == pv) urel(pform, {GenShape::Unary, h.pred});
        } else if (h.args[0].name == pv && h.args[1].name == pv) {
          urel(pform, {GenShape::Reflexive, h.pred});
        } else if (h.args[0].name == pv) {
          urel(pform, {GenShape::Out, h.pred});
        } else if (h.args[1].name == pv) {
          urel(pform, {GenShape::In, h.pred});
        }
      }
      // binary order + lifted unary relations for two-variable heads
      if (binary_body && h.args.size() == 2 && h.args[0].name != h.args[1].name) {
        bool straight = h.args[0].name == b.args[0].name;
        if (straight) {
          brel(b.pred, false, h.pred, false);
          brel(b.pred, true, h.pred, true);
          urel({GenShape::Out, b.pred}, {GenShape::Out, h.pred});
          urel({GenShape::In, b.pred}, {GenShape::In, h.pred});
        } else {
          brel(b.pred, false, h.pred, true);
          brel(b.pred, true, h.pred, false);
          urel({GenShape::Out, b.pred}, {GenShape::In, h.pred});
          urel({GenShape::In, b.pred}, {GenShape::Out, h.pred});
        }
        urel({GenShape::Reflexive, b.pred}, {GenShape::Reflexive, h.pred});
      }
    }
  }
  transitive_reflexive_close(o.ule);
  transitive_reflexive_close(o.ble);
  return o;
}

}  // namespace twr
