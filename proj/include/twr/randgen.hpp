#pragma once

// Randomized differential testing and size-growth benchmarks: instance
// generation with controlled ontology depth, the rewriting-vs-chase
// verification sweep, and the path-query growth fixture.

#include <cstdint>
#include <string>
#include <vector>

#include "twr/core.hpp"

namespace twr {

struct RandomInstance {
  Ontology ontology;
  ConjunctiveQuery query;
  DataInstance data;
};

// Deterministic in seed; depth is 1 or 2 and is asserted on the result.
RandomInstance random_instance(uint64_t seed, int depth);

struct VerifyOptions {
  size_t trials = 200;
  int depth = 1;
  uint64_t seed = 1;
  bool parallel = true;
  bool check_ndl = true;  // depth-1 pipeline comparisons
};

struct VerifyReport {
  size_t trials = 0;
  size_t mismatches = 0;
  std::vector<std::string> failures;
};

VerifyReport verify_random(const VerifyOptions& opt);

// Path-query fixture: single binary predicate R with A(x) -> exists y
// (R(x,y) and R(y,x)); q_n is the Boolean chain of n R-atoms.
Ontology path_ontology();
ConjunctiveQuery path_query(size_t n);

struct BenchRow {
  std::string family;
  size_t n = 0;
  size_t size = 0;
  double millis = 0;
};

std::vector<BenchRow> bench_growth(const std::vector<size_t>& lengths);
double fit_exponent(const std::vector<BenchRow>& rows);  // log-log slope
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace twr
