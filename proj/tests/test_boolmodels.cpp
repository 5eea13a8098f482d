#include "twr/boolmodels.hpp"

#include <random>

#include "doctest.h"

using namespace twr;

namespace {

using Rng = std::mt19937_64;

size_t pick(Rng& rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

Label random_label(Rng& rng, bool monotone) {
  switch (pick(rng, 0, monotone ? 2 : 3)) {
    case 0: return lbl0();
    case 1: return lbl1();
    case 2: return lblv("p" + std::to_string(pick(rng, 1, 4)));
    default: return lblnv("p" + std::to_string(pick(rng, 1, 4)));
  }
}

// random hypergraph program; degree capped when degree2 is set
Hypergraph random_hgp(Rng& rng, bool monotone, bool degree2) {
  Hypergraph h;
  size_t nv = pick(rng, 1, 7), ne = pick(rng, 1, 5);
  for (size_t v = 0; v < nv; ++v)
    h.add_vertex("v" + std::to_string(v), random_label(rng, monotone));
  std::vector<std::vector<int>> members(ne);
  for (size_t v = 0; v < nv; ++v) {
    size_t deg = pick(rng, 0, 2);
    if (!degree2 && pick(rng, 0, 3) == 0) deg = 3;
    for (size_t i = 0; i < deg && i < ne; ++i) members[pick(rng, 0, ne - 1)].push_back(v);
  }
  for (size_t e = 0; e < ne; ++e) {
    auto& vs = members[e];
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    h.add_edge("e" + std::to_string(e), vs);
  }
  return h;
}

NBP random_monotone_nbp(Rng& rng) {
  NBP g;
  size_t extra = pick(rng, 0, 6);
  g.nodes = {"s", "t"};
  for (size_t i = 0; i < extra; ++i) g.nodes.push_back("n" + std::to_string(i));
  size_t narcs = pick(rng, 1, 10);
  for (size_t i = 0; i < narcs; ++i) {
    int from = (int)pick(rng, 0, g.nodes.size() - 1);
    int to = (int)pick(rng, 0, g.nodes.size() - 1);
    if (from == g.t) from = g.s;
    if (to == g.s) to = g.t;
    g.arcs.push_back({from, to, random_label(rng, true)});
  }
  return g;
}

Circuit random_monotone_circuit(Rng& rng) {
  Circuit c;
  std::vector<int> pool;
  size_t nin = pick(rng, 1, 6);
  for (size_t i = 0; i < nin; ++i) pool.push_back(c.input("p" + std::to_string(i)));
  pool.push_back(c.constant(false));
  pool.push_back(c.constant(true));
  size_t nops = pick(rng, 1, 12);
  for (size_t i = 0; i < nops; ++i) {
    int a = pool[pick(rng, 0, pool.size() - 1)];
    int b = pool[pick(rng, 0, pool.size() - 1)];
    pool.push_back(pick(rng, 0, 1) ? c.land(a, b) : c.lor(a, b));
  }
  c.output = pool.back();
  return c;
}

// all assignments over the given variables
template <typename F>
void forall_assignments(const std::vector<std::string>& vars, F f) {
  REQUIRE(vars.size() <= 12);
  for (size_t bits = 0; bits < (size_t)1 << vars.size(); ++bits) {
    Assignment a;
    for (size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (bits >> i) & 1;
    f(a);
  }
}

Assignment flip(const Assignment& a) {
  Assignment out;
  for (const auto& [k, v] : a) out[k] = !v;
  return out;
}

}  // namespace

TEST_CASE("hypergraph program evaluation on fixtures") {
  Hypergraph p;
  p.add_vertex("v1", lblv("p1"));
  p.add_vertex("v2", lblnv("p1"));
  p.add_edge("e1", {0});
  p.add_edge("e2", {1});
  // cover needs both edges, which share no vertex, so any p1 value works
  CHECK(evaluate(p, {{"p1", false}}));
  CHECK(evaluate(p, {{"p1", true}}));

  Hypergraph q;
  q.add_vertex("v1", lbl0());
  q.add_vertex("v2", lbl0());
  q.add_vertex("v3", lbl1());
  q.add_edge("e1", {0, 2});
  q.add_edge("e2", {1, 2});
  // both zero vertices need an edge, but the edges overlap in v3
  CHECK_FALSE(evaluate(q, {}));
  q.add_edge("e3", {1});
  CHECK(evaluate(q, {}));
}

TEST_CASE("hypergraph function agrees with independent set enumeration") {
  Rng rng(7);
  for (int round = 0; round < 40; ++round) {
    Hypergraph h = random_hgp(rng, true, false);
    std::vector<std::string> vars;
    for (const auto& v : h.vertices) vars.push_back(v.name);
    for (const auto& e : h.edge_names) vars.push_back(e);
    if (vars.size() > 10) continue;
    forall_assignments(vars, [&](const Assignment& a) {
      CHECK(hypergraph_function(h, a) == brute_hypergraph_function(h, a));
    });
  }
}

TEST_CASE("hgp_from_hypergraph has size 2|H| and computes f_H") {
  Rng rng(11);
  for (int round = 0; round < 40; ++round) {
    Hypergraph h = random_hgp(rng, true, false);
    Hypergraph p = hgp_from_hypergraph(h);
    CHECK(p.size() == 2 * h.size());
    CHECK(p.monotone());
    std::vector<std::string> vars;
    for (const auto& v : h.vertices) vars.push_back(v.name);
    for (const auto& e : h.edge_names) vars.push_back(e);
    if (vars.size() > 10) continue;
    forall_assignments(vars, [&](const Assignment& a) {
      CHECK(evaluate(p, a) == brute_hypergraph_function(h, a));
    });
  }
}

TEST_CASE("normalize_degree2 adds exactly three hyperedges and keeps the function") {
  Hypergraph solo;
  solo.add_vertex("v", lblv("p"));
  solo.add_edge("e", {0});
  Hypergraph n0 = normalize_degree2(solo);
  CHECK(n0.size() == solo.size() + 3);
  CHECK(n0.degree() == 2);
  forall_assignments({"p"}, [&](const Assignment& a) {
    CHECK(evaluate(n0, a) == evaluate(solo, a));
  });

  Rng rng(13);
  for (int round = 0; round < 40; ++round) {
    Hypergraph p = random_hgp(rng, false, true);
    Hypergraph n = normalize_degree2(p);
    CHECK(n.size() == p.size() + 3);
    CHECK(n.degree() == 2);
    forall_assignments(p.variables(), [&](const Assignment& a) {
      CHECK(evaluate(n, a) == evaluate(p, a));
    });
  }
}

TEST_CASE("hgp2_to_nbp computes the complement, dual computes the dual") {
  Rng rng(17);
  for (int round = 0; round < 40; ++round) {
    Hypergraph p = random_hgp(rng, true, true);
    NBP g = hgp2_to_nbp(p, false);
    g.check();
    NBP gd = hgp2_to_nbp(p, true);
    CHECK(gd.monotone());
    forall_assignments(p.variables(), [&](const Assignment& a) {
      CHECK(evaluate(g, a) == !evaluate(p, a));
      CHECK(evaluate(gd, a) == !evaluate(p, flip(a)));
    });
  }
}

TEST_CASE("nbp_to_hgp2 inverts hgp2_to_nbp") {
  // single s->t arc labelled p: the NBP computes p, the HGP computes !p
  NBP one;
  one.nodes = {"s", "t"};
  one.arcs = {{0, 1, lblv("p")}};
  Hypergraph h = nbp_to_hgp2(one);
  CHECK(h.degree() <= 2);
  forall_assignments({"p"}, [&](const Assignment& a) {
    CHECK(evaluate(h, a) == !evaluate(one, a));
  });

  Rng rng(19);
  for (int round = 0; round < 40; ++round) {
    Hypergraph p = random_hgp(rng, true, true);
    Hypergraph back = nbp_to_hgp2(hgp2_to_nbp(p, false));
    CHECK(back.degree() <= 2);
    forall_assignments(p.variables(), [&](const Assignment& a) {
      CHECK(evaluate(back, a) == evaluate(p, a));
    });
  }
}

TEST_CASE("nbp_to_monotone_circuit preserves the function") {
  Rng rng(23);
  for (int round = 0; round < 40; ++round) {
    NBP g = random_monotone_nbp(rng);
    Circuit c = nbp_to_monotone_circuit(g);
    CHECK(c.monotone());
    forall_assignments(g.variables(), [&](const Assignment& a) {
      CHECK(evaluate(c, a) == evaluate(g, a));
    });
  }
}

TEST_CASE("circuit_dualize satisfies the duality law") {
  Rng rng(29);
  for (int round = 0; round < 40; ++round) {
    Circuit c = random_monotone_circuit(rng);
    Circuit d = circuit_dualize(c);
    CHECK(d.monotone());
    forall_assignments(c.variables(), [&](const Assignment& a) {
      CHECK(evaluate(d, a) == !evaluate(c, flip(a)));
    });
  }
}

TEST_CASE("hgp_to_nbc and nbc_to_hgp3 preserve the function") {
  Rng rng(31);
  for (int round = 0; round < 30; ++round) {
    Hypergraph p = random_hgp(rng, true, false);
    NondetCircuit c = hgp_to_nbc(p);
    CHECK(c.monotone());
    if (c.advice.size() > 10 || p.variables().size() > 8) continue;
    forall_assignments(p.variables(), [&](const Assignment& a) {
      CHECK(evaluate(c, a) == evaluate(p, a));
    });
    Hypergraph back = nbc_to_hgp3(c);
    CHECK(back.degree() <= 3);
    forall_assignments(p.variables(), [&](const Assignment& a) {
      CHECK(evaluate(back, a) == evaluate(p, a));
    });
  }
}

TEST_CASE("hgp2_dual_circuit matches the dual NBP route") {
  Rng rng(37);
  for (int round = 0; round < 40; ++round) {
    Hypergraph p = random_hgp(rng, true, true);
    Circuit fast = hgp2_dual_circuit(p);
    CHECK(fast.monotone());
    forall_assignments(p.variables(), [&](const Assignment& a) {
      CHECK(evaluate(fast, a) == !evaluate(p, flip(a)));
    });
  }
}

TEST_CASE("model text round trips") {
  Rng rng(41);
  NBP g = random_monotone_nbp(rng);
  CHECK(print(parse_nbp(print(g))) == print(g));
  Circuit c = random_monotone_circuit(rng);
  CHECK(print(parse_circuit(print(c))) == print(c));
  // parsing renumbers gates; the format is stable after one normalization
  NondetCircuit nc = hgp_to_nbc(random_hgp(rng, true, false));
  std::string once = print(parse_nondet_circuit(print(nc)));
  CHECK(print(parse_nondet_circuit(once)) == once);
}
