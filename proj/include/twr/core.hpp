#pragma once

// Abstract syntax for ontologies (linear tgds over unary/binary predicates),
// conjunctive queries, data instances and rewriting formulas.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace twr {

enum class Err {
  Syntax,
  ArityMismatch,
  ConstantInRule,
  TooManyTgdVariables,
  EmptyQuery,
  AnswerVarNotInBody,
  UnknownVertex,
  DegreeMapInconsistent,
  TooManyTreeWitnesses,
  RewritingTooLarge,
  IncompatibleTreeWitnesses,
  NotTree,
  NonMonotoneCircuit,
  NotDepthOne,
  NameClash,
  RecursionDetected,
  AdviceTooLarge,
  UnboundVariable,
  DegreeTooHigh,
  NonMonotoneNBP,
  UnnormalizedCircuit,
  NotDegreeTwo,
  MissingIncidence,
  LengthMismatch,
  BadParameters,
  UnmappedAtom,
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] void fail(Err c, const std::string& msg);

const char* err_name(Err c);

// ---------------------------------------------------------------- terms/atoms

struct Term {
  bool is_var = true;
  std::string name;

  friend bool operator==(const Term& a, const Term& b) {
    return a.is_var == b.is_var && a.name == b.name;
  }
  friend auto operator<=>(const Term& a, const Term& b) = default;
};

inline Term mkvar(std::string n) { return Term{true, std::move(n)}; }
inline Term mkconst(std::string n) { return Term{false, std::move(n)}; }

struct Atom {
  std::string pred;
  std::vector<Term> args;

  size_t arity() const { return args.size(); }
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

inline Atom atom1(std::string p, Term t) { return Atom{std::move(p), {std::move(t)}}; }
inline Atom atom2(std::string p, Term s, Term t) {
  return Atom{std::move(p), {std::move(s), std::move(t)}};
}

// ------------------------------------------------------------------ tgds

// body(x) -> exists y. head; at most two distinct variables in total.
struct TGD {
  Atom body;
  std::optional<std::string> head_existential;
  std::vector<Atom> head;

  friend bool operator==(const TGD&, const TGD&) = default;
};

struct Ontology {
  std::vector<TGD> tgds;

  // number of predicate occurrences
  size_t size() const;
  friend bool operator==(const Ontology&, const Ontology&) = default;
};

struct ConjunctiveQuery {
  std::vector<std::string> answer_vars;
  std::vector<Atom> atoms;  // kept sorted + unique

  std::vector<std::string> all_vars() const;          // sorted
  std::vector<std::string> existential_vars() const;  // sorted
  void normalize();                                   // sort + dedupe atoms
  friend bool operator==(const ConjunctiveQuery&, const ConjunctiveQuery&) = default;
};

struct DataInstance {
  std::vector<Atom> atoms;  // ground, sorted + unique

  std::vector<std::string> individuals() const;  // sorted constants
  void normalize();
  bool contains(const Atom& a) const;
  friend bool operator==(const DataInstance&, const DataInstance&) = default;
};

// ------------------------------------------------------------------ generators

// The four seed shapes S(x), S(x,x), exists y S(x,y), exists y S(y,x).
enum class GenShape { Unary, Reflexive, Out, In };

struct Generator {
  GenShape shape;
  std::string pred;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);

// ------------------------------------------------------------------ formulas

struct Formula {
  enum class Kind { True, False, Atom, Eq, And, Or, Not, Exists, Forall };
  Kind kind = Kind::True;
  twr::Atom atom;                  // Kind::Atom
  std::string lhs, rhs;            // Kind::Eq (variables)
  std::vector<std::string> bound;  // Exists / Forall
  std::vector<Formula> kids;       // And/Or: n-ary; Not/Exists/Forall: 1

  friend bool operator==(const Formula&, const Formula&) = default;
};

Formula f_true();
Formula f_false();
Formula f_atom(Atom a);
Formula f_eq(std::string l, std::string r);
Formula f_and(std::vector<Formula> kids);  // flattens, drops units
Formula f_or(std::vector<Formula> kids);
Formula f_not(Formula f);
Formula f_exists(std::vector<std::string> vars, Formula body);
Formula f_forall(std::vector<std::string> vars, Formula body);

size_t pe_size(const Formula& f);  // atom + equality leaves
bool is_pe(const Formula& f);
std::vector<std::string> free_vars(const Formula& f);

// ------------------------------------------------------------------ signature

struct Signature {
  std::map<std::string, size_t> arity;  // predicate -> 1 or 2

  void add(const Atom& a);
  void add(const Ontology& t);
  void add(const ConjunctiveQuery& q);
  void add(const DataInstance& a);
};

// All generator shapes over a signature (Unary for unary preds, the other
// three for binary preds), in canonical order.
std::vector<Generator> all_generators(const Signature& sig);

// ------------------------------------------------------------------ validation

void validate(const Ontology& t);
void validate(const ConjunctiveQuery& q);
void validate(const DataInstance& a);

}  // namespace twr
