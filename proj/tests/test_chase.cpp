#include "twr/chase.hpp"

#include "doctest.h"
#include "twr/textio.hpp"

using namespace twr;

namespace {

Ontology example_ontology() {
  return parse_ontology(
      "A1(x) -> exists y. R1(x,y), Q(x,y)\n"
      "A2(x) -> exists y. R2(x,y), Q(y,x)\n");
}

}  // namespace

TEST_CASE("chase creates one reused null per element and tgd") {
  Ontology t = example_ontology();
  DataInstance a = parse_data("A1(a)\nA1(b)\n");
  CanonicalModel m = build_chase(t, a, {2});
  CHECK_FALSE(m.truncated);
  // one null per constant for the A1 tgd
  CHECK(m.nulls().size() == 2);
  int na = m.element_id("a.0");
  REQUIRE(na >= 0);
  CHECK(m.elems[na].is_null);
  CHECK(m.elems[na].depth == 1);
  CHECK(m.has({"R1", {m.element_id("a"), na}}));
  CHECK(m.has({"Q", {m.element_id("a"), na}}));
}

TEST_CASE("chase truncates an unbounded chain at the depth bound") {
  Ontology t = parse_ontology(
      "A(x) -> exists y. R(x,y)\n"
      "R(x,y) -> A(y)\n");
  DataInstance a = parse_data("A(a)\n");
  CanonicalModel m = build_chase(t, a, {3});
  CHECK(m.truncated);
  CHECK(m.nulls().size() == 3);
  int deepest = 0;
  for (int n : m.nulls()) deepest = std::max(deepest, m.elems[n].depth);
  CHECK(deepest == 3);
}

TEST_CASE("generator models seed the four shapes") {
  Ontology t;
  CanonicalModel out = generator_model(t, {GenShape::Out, "S"}, {2});
  CHECK(out.constants().size() == 1);
  CHECK(out.nulls().size() == 1);
  CHECK(out.atoms.size() == 1);
  CHECK(out.has({"S", {out.element_id("a"), out.nulls()[0]}}));

  CanonicalModel in = generator_model(t, {GenShape::In, "S"}, {2});
  CHECK(in.has({"S", {in.nulls()[0], in.element_id("a")}}));

  CanonicalModel refl = generator_model(t, {GenShape::Reflexive, "S"}, {2});
  CHECK(refl.nulls().empty());
  CHECK(refl.has({"S", {refl.element_id("a"), refl.element_id("a")}}));

  CanonicalModel un = generator_model(t, {GenShape::Unary, "A"}, {2});
  CHECK(un.has({"A", {un.element_id("a")}}));
  // no seed predicate left behind
  for (const auto& at : un.atoms) CHECK(at.pred == "A");
}

TEST_CASE("ontology depth") {
  CHECK(ontology_depth(example_ontology()).depth == 1);
  CHECK(ontology_depth(example_ontology()).kind == DepthResult::Kind::Finite);

  Ontology loop = parse_ontology(
      "A(x) -> exists y. R(x,y)\n"
      "R(x,y) -> A(y)\n");
  CHECK(ontology_depth(loop).kind == DepthResult::Kind::Unbounded);

  Ontology two = parse_ontology(
      "A(x) -> exists y. R(x,y), L(y)\n"
      "L(x) -> exists y. S(x,y)\n");
  DepthResult d = ontology_depth(two);
  CHECK(d.kind == DepthResult::Kind::Finite);
  CHECK(d.depth == 2);
}

TEST_CASE("saturation adds only ground consequences") {
  // heads with existentials create nulls only: data is unchanged
  DataInstance a = parse_data("A1(a)\n");
  CHECK(saturate(example_ontology(), a) == a);

  Ontology t = parse_ontology(
      "A(x) -> B(x)\n"
      "R(x,y) -> B(y)\n");
  DataInstance d = parse_data("A(a)\nR(a,b)\n");
  DataInstance s = saturate(t, d);
  CHECK(s.contains(atom1("B", mkconst("a"))));
  CHECK(s.contains(atom1("B", mkconst("b"))));
  CHECK(s.atoms.size() == 4);
}

TEST_CASE("entailment order on unary forms") {
  Ontology t = parse_ontology("A(x) -> B(x)\n");
  ConjunctiveQuery q = parse_query("q() <- B(y1)");
  EntailmentOrder ord = entailment_order(t, q);
  auto below = ord.below_unary({GenShape::Unary, "B"});
  REQUIRE(below.size() == 2);
  CHECK(below[0] == Generator{GenShape::Unary, "A"});
  CHECK(below[1] == Generator{GenShape::Unary, "B"});
}

TEST_CASE("entailment order on binary forms tracks argument order") {
  Ontology t = parse_ontology("R(x,y) -> S(y,x)\n");
  ConjunctiveQuery q = parse_query("q() <- S(y1,y2), R(y1,y2)");
  EntailmentOrder ord = entailment_order(t, q);
  auto below = ord.below_binary("S");
  REQUIRE(below.size() == 2);
  CHECK(below[0] == BinaryForm{"R", true});  // R(x2,x1) entails S(x1,x2)
  CHECK(below[1] == BinaryForm{"S", false});
}
