#pragma once

// Boolean computation models: hypergraph programs, nondeterministic
// branching programs, circuits and formulas, with evaluators and the
// translations between them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twr/hypergraph.hpp"

namespace twr {

using Assignment = std::map<std::string, bool>;

bool eval_label(const Label& l, const Assignment& a);

// ------------------------------------------------------------------ NBP

struct NBP {
  struct Arc {
    int from, to;
    Label label;
  };
  std::vector<std::string> nodes;  // nodes[s]="s", nodes[t]="t"
  int s = 0, t = 1;
  std::vector<Arc> arcs;

  size_t size() const { return arcs.size(); }
  bool monotone() const;
  std::vector<std::string> variables() const;
  void check() const;  // s no incoming, t no outgoing
};

// ------------------------------------------------------------------ circuits

struct Circuit {
  enum class Op { Input, Const, And, Or, Not };
  struct Gate {
    Op op;
    bool cval = false;
    std::string name;  // Input
    int a = -1, b = -1;
  };
  std::vector<Gate> gates;
  int output = -1;

  // building (constant-folding + structural sharing)
  int input(const std::string& name);
  int constant(bool v);
  int land(int a, int b);
  int lor(int a, int b);
  int lnot(int a);

  size_t size() const { return gates.size(); }
  bool monotone() const;
  std::vector<std::string> variables() const;

 private:
  std::map<std::string, int> input_cache_;
  std::map<std::tuple<int, int, int>, int> op_cache_;
};

struct NondetCircuit {
  Circuit circuit;
  std::vector<std::string> x_inputs;
  std::vector<std::string> advice;

  // negations reach only advice variables
  bool monotone() const;
};

// ------------------------------------------------------------------ formulas

struct BForm {
  enum class Kind { Const, Lit, And, Or, Not };
  Kind kind = Kind::Const;
  bool cval = false;
  std::string var;
  bool neg = false;  // Lit: negated literal
  std::vector<BForm> kids;

  size_t size() const;  // leaf count
};

BForm bf_const(bool v);
BForm bf_lit(std::string v, bool neg = false);
BForm bf_and(std::vector<BForm> kids);
BForm bf_or(std::vector<BForm> kids);
BForm bf_not(BForm f);

// ------------------------------------------------------------------ evaluate

bool evaluate(const Hypergraph& hgp, const Assignment& a);  // cover search
bool evaluate(const NBP& g, const Assignment& a);
bool evaluate(const Circuit& c, const Assignment& a);
bool evaluate(const NondetCircuit& c, const Assignment& a);  // brute advice
bool evaluate(const BForm& f, const Assignment& a);

// f_H over p_v (vertex names) and p_e (edge names)
bool hypergraph_function(const Hypergraph& h, const Assignment& a);
// independent-set enumeration oracle for f_H
bool brute_hypergraph_function(const Hypergraph& h, const Assignment& a);

// ------------------------------------------------------------------ translations

// monotone HGP of size 2|H| computing f_H
Hypergraph hgp_from_hypergraph(const Hypergraph& h);

// degree <= 2 in, degree exactly 2 out, size +3, same function
Hypergraph normalize_degree2(const Hypergraph& p);

// NBP computing the complement of P's function (dual=false), or, for
// monotone P, the monotone NBP computing the dual function (dual=true).
NBP hgp2_to_nbp(const Hypergraph& p, bool dual = false);

// HGP of degree <= 2 computing f, from an NBP computing the complement of f
Hypergraph nbp_to_hgp2(const NBP& g);

// s-t reachability circuit by repeated squaring of the labelled adjacency
Circuit nbp_to_monotone_circuit(const NBP& g);

Circuit circuit_dualize(const Circuit& c);

NondetCircuit hgp_to_nbc(const Hypergraph& p);

// HGP of degree <= 3; for monotone input the result has the monotone-closure
// semantics: 1 iff C(a',b)=1 for some advice b and some a' <= a
Hypergraph nbc_to_hgp3(const NondetCircuit& c);

// Shortcut used by the depth-1 NDL pipeline: monotone circuit computing the
// dual of a monotone degree-<=2 HGP, built directly on the implication graph
// (transitive closure by squaring + the per-edge cycle test).
Circuit hgp2_dual_circuit(const Hypergraph& p);

// ------------------------------------------------------------------ io

std::string print(const NBP& g);
NBP parse_nbp(const std::string& text);
std::string print(const Circuit& c);
std::string print(const NondetCircuit& c);
Circuit parse_circuit(const std::string& text);
NondetCircuit parse_nondet_circuit(const std::string& text);

}  // namespace twr
