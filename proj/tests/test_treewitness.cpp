#include "twr/treewitness.hpp"

#include "doctest.h"
#include "twr/gadgets.hpp"
#include "twr/textio.hpp"

using namespace twr;

namespace {

// A1 generates an outgoing R1/Q pair, A2 an outgoing R2 with inverse Q.
Ontology two_arrow_ontology() {
  return parse_ontology(
      "A1(x) -> exists y. R1(x,y), Q(x,y)\n"
      "A2(x) -> exists y. R2(x,y), Q(y,x)\n");
}

ConjunctiveQuery two_arrow_query() {
  return parse_query("q(x1,x2) <- R1(x1,y1), Q(y2,y1), R2(x2,y2)");
}

Hypergraph triple_edge_hypergraph() {
  // four vertices, three pairwise intersecting hyperedges, degree 2
  return parse_hypergraph(
      "vertex v1 i1=e1 i2=e3\n"
      "vertex v2 i1=e3 i2=e1\n"
      "vertex v3 i1=e1 i2=e2\n"
      "vertex v4 i1=e2 i2=e3\n"
      "edge e1 = v1 v2 v3\n"
      "edge e2 = v3 v4\n"
      "edge e3 = v1 v2 v4\n");
}

}  // namespace

TEST_CASE("two-arrow fixture has exactly the two one-variable witnesses") {
  auto tws = enumerate_tree_witnesses(two_arrow_query(), two_arrow_ontology());
  REQUIRE(tws.size() == 2);
  CHECK(tws[0].internals == std::vector<std::string>{"y1"});
  CHECK(tws[0].roots == std::vector<std::string>{"x1", "y2"});
  CHECK(tws[0].generators == std::vector<Generator>{{GenShape::Unary, "A1"}});
  REQUIRE(tws[0].covered.size() == 2);
  CHECK(tws[0].covered[0] == atom2("Q", mkvar("y2"), mkvar("y1")));
  CHECK(tws[0].covered[1] == atom2("R1", mkvar("x1"), mkvar("y1")));

  CHECK(tws[1].internals == std::vector<std::string>{"y2"});
  CHECK(tws[1].roots == std::vector<std::string>{"x2", "y1"});
  CHECK(tws[1].generators == std::vector<Generator>{{GenShape::Unary, "A2"}});
  REQUIRE(tws[1].covered.size() == 2);
  CHECK(tws[1].covered[0] == atom2("Q", mkvar("y2"), mkvar("y1")));
  CHECK(tws[1].covered[1] == atom2("R2", mkvar("x2"), mkvar("y2")));

  CHECK_FALSE(independent(tws[0], tws[1]));
  CHECK_FALSE(compatible(tws[0], tws[1]));
}

TEST_CASE("witness formula instantiates the generator disjunction") {
  auto tws = enumerate_tree_witnesses(two_arrow_query(), two_arrow_ontology());
  CHECK(print(tw_formula(tws[0])) ==
        "(exists (z) (and (atom A1 z) (eq x1 z) (eq y2 z)))\n");
  CHECK(print(tw_formula(tws[1])) ==
        "(exists (z) (and (atom A2 z) (eq x2 z) (eq y1 z)))\n");
  // bound variable avoids the caller's names
  Formula f = tw_formula(tws[0], {"z"});
  CHECK(print(f) == "(exists (z') (and (atom A1 z') (eq x1 z') (eq y2 z')))\n");
}

TEST_CASE("rootless witness formula is a detached existential") {
  TreeWitness t;
  t.internals = {"y"};
  t.covered = {atom2("S", mkvar("y"), mkvar("y'"))};
  t.generators = {{GenShape::Out, "S"}};
  CHECK(print(tw_formula(t)) == "(exists (z w) (atom S z w))\n");
  TreeWitness u = t;
  u.generators = {{GenShape::Unary, "A"}, {GenShape::In, "S"}};
  CHECK(print(tw_formula(u)) ==
        "(or (exists (z) (atom A z)) (exists (z w) (atom S w z)))\n");
}

TEST_CASE("queries without existential variables have no witnesses") {
  ConjunctiveQuery q = parse_query("q(x1,x2) <- R1(x1,x2)");
  CHECK(enumerate_tree_witnesses(q, two_arrow_ontology()).empty());
}

TEST_CASE("hypergraph-encoded query yields one witness per hyperedge") {
  OBDAInstance inst = hypergraph_to_obda(triple_edge_hypergraph());
  auto tws = enumerate_tree_witnesses(inst.query, inst.ontology);
  REQUIRE(tws.size() == 3);
  for (const auto& t : tws) {
    REQUIRE(t.internals.size() == 1);
    CHECK(t.roots.empty() == false);
  }
  CHECK(tws[0].internals == std::vector<std::string>{"z_e1"});
  CHECK(tws[1].internals == std::vector<std::string>{"z_e2"});
  CHECK(tws[2].internals == std::vector<std::string>{"z_e3"});
  CHECK(tws[0].generators == std::vector<Generator>{{GenShape::Unary, "A_e1"}});
  // e1 covers the atoms of its three incident vertices
  CHECK(tws[0].covered.size() == 3);
  CHECK(tws[1].covered.size() == 2);
  CHECK(tws[2].covered.size() == 3);
  CHECK_FALSE(independent(tws[0], tws[1]));
  CHECK_FALSE(independent(tws[0], tws[2]));
  CHECK_FALSE(independent(tws[1], tws[2]));
}

TEST_CASE("witness hypergraph and degree") {
  ConjunctiveQuery q = two_arrow_query();
  auto tws = enumerate_tree_witnesses(q, two_arrow_ontology());
  Hypergraph h = tw_hypergraph(q, tws);
  REQUIRE(h.vertices.size() == 3);
  CHECK(h.vertices[0].name == atom_key(q.atoms[0]));
  CHECK(h.size() == 2);
  CHECK(h.edge_names == std::vector<std::string>{"t0", "t1"});
  // both witnesses cover the middle atom
  int qv = h.vertex_id(atom_key(atom2("Q", mkvar("y2"), mkvar("y1"))));
  REQUIRE(qv >= 0);
  CHECK(h.incident()[qv].size() == 2);
  CHECK(tw_degree(q, tws) == 2);
}

TEST_CASE("witness cap raises a resource error") {
  OBDAInstance inst = hypergraph_to_obda(triple_edge_hypergraph());
  try {
    enumerate_tree_witnesses(inst.query, inst.ontology, {2});
    FAIL("expected TooManyTreeWitnesses");
  } catch (const Error& e) {
    CHECK(e.code == Err::TooManyTreeWitnesses);
  }
}
