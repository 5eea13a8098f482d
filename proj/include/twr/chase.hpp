#pragma once

// Canonical models (oblivious chase with deterministic null reuse),
// ontology depth, data saturation, and the entailment order on generator
// forms used to close rewritings for arbitrary data.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twr/core.hpp"

namespace twr {

struct GroundAtom {
  std::string pred;
  std::vector<int> args;  // element ids

  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

struct CanonicalModel {
  struct Element {
    bool is_null = false;
    std::string name;  // constant name, or null path like "a.0.2"
    int parent = -1;   // creating element for nulls
    int tgd = -1;      // creating tgd index for nulls
    int depth = 0;     // 0 for constants
  };
  std::vector<Element> elems;
  std::set<GroundAtom> atoms;
  int depth_bound = 0;
  bool truncated = false;

  int element_id(const std::string& name) const;  // -1 if absent
  std::vector<int> constants() const;
  std::vector<int> nulls() const;
  bool has(const GroundAtom& a) const { return atoms.count(a) > 0; }
  std::string render() const;  // .facts-style, nulls as _:path
};

struct ChaseLimits {
  int depth_bound = 0;
  size_t max_elements = 1u << 20;
};

CanonicalModel build_chase(const Ontology& t, const DataInstance& a, ChaseLimits lim);

// C_T^{rho(a)}: chase of (T + {Seed(x) -> rho(x)}, {Seed(a)}) with the seed
// predicate removed afterwards.
CanonicalModel generator_model(const Ontology& t, const Generator& rho, ChaseLimits lim);

struct DepthResult {
  enum class Kind { Finite, Unbounded, ExceedsCap } kind;
  int depth = 0;  // valid when Finite
};

DepthResult ontology_depth(const Ontology& t, int cap = 8);

DataInstance saturate(const Ontology& t, const DataInstance& a);

// ---------------------------------------------------------------- order

struct BinaryForm {
  std::string pred;
  bool rev = false;  // false: S(x1,x2); true: S(x2,x1)

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
  friend auto operator<=>(const BinaryForm&, const BinaryForm&) = default;
};

struct EntailmentOrder {
  std::vector<Generator> uforms;  // sorted
  std::vector<std::vector<bool>> ule;  // ule[i][j]: uforms[i] <= uforms[j]
  std::vector<BinaryForm> bforms;  // sorted
  std::vector<std::vector<bool>> ble;

  int uindex(const Generator& g) const;
  int bindex(const std::string& pred, bool rev) const;
  std::vector<Generator> below_unary(const Generator& g) const;
  std::vector<BinaryForm> below_binary(const std::string& pred) const;
};

EntailmentOrder entailment_order(const Ontology& t, const ConjunctiveQuery& q);
EntailmentOrder entailment_order(const Ontology& t, const Signature& sig);

}  // namespace twr
