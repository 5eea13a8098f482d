#include "twr/core.hpp"

#include <algorithm>
#include <set>

namespace twr {

void fail(Err c, const std::string& msg) { throw Error(c, msg); }

const char* err_name(Err c) {
  switch (c) {
    case Err::Syntax: return "Syntax";
    case Err::ArityMismatch: return "ArityMismatch";
    case Err::ConstantInRule: return "ConstantInRule";
    case Err::TooManyTgdVariables: return "TooManyTgdVariables";
    case Err::EmptyQuery: return "EmptyQuery";
    case Err::AnswerVarNotInBody: return "AnswerVarNotInBody";
    case Err::UnknownVertex: return "UnknownVertex";
    case Err::DegreeMapInconsistent: return "DegreeMapInconsistent";
    case Err::TooManyTreeWitnesses: return "TooManyTreeWitnesses";
    case Err::RewritingTooLarge: return "RewritingTooLarge";
    case Err::IncompatibleTreeWitnesses: return "IncompatibleTreeWitnesses";
    case Err::NotTree: return "NotTree";
    case Err::NonMonotoneCircuit: return "NonMonotoneCircuit";
    case Err::NotDepthOne: return "NotDepthOne";
    case Err::NameClash: return "NameClash";
    case Err::RecursionDetected: return "RecursionDetected";
    case Err::AdviceTooLarge: return "AdviceTooLarge";
    case Err::UnboundVariable: return "UnboundVariable";
    case Err::DegreeTooHigh: return "DegreeTooHigh";
    case Err::NonMonotoneNBP: return "NonMonotoneNBP";
    case Err::UnnormalizedCircuit: return "UnnormalizedCircuit";
    case Err::NotDegreeTwo: return "NotDegreeTwo";
    case Err::MissingIncidence: return "MissingIncidence";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::BadParameters: return "BadParameters";
    case Err::UnmappedAtom: return "UnmappedAtom";
  }
  return "Unknown";
}

size_t Ontology::size() const {
  size_t n = 0;
  for (const auto& t : tgds) n += 1 + t.head.size();
  return n;
}

std::vector<std::string> ConjunctiveQuery::all_vars() const {
  std::set<std::string> vs;
  for (const auto& a : atoms)
    for (const auto& t : a.args)
      if (t.is_var) vs.insert(t.name);
  return {vs.begin(), vs.end()};
}

std::vector<std::string> ConjunctiveQuery::existential_vars() const {
  std::set<std::string> ans(answer_vars.begin(), answer_vars.end());
  std::vector<std::string> out;
  for (const auto& v : all_vars())
    if (!ans.count(v)) out.push_back(v);
  return out;
}

void ConjunctiveQuery::normalize() {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

std::vector<std::string> DataInstance::individuals() const {
  std::set<std::string> cs;
  for (const auto& a : atoms)
    for (const auto& t : a.args) cs.insert(t.name);
  return {cs.begin(), cs.end()};
}

void DataInstance::normalize() {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

bool DataInstance::contains(const Atom& a) const {
  return std::binary_search(atoms.begin(), atoms.end(), a);
}

std::string to_string(const Generator& g) {
  switch (g.shape) {
    case GenShape::Unary: return g.pred + "(x)";
    case GenShape::Reflexive: return g.pred + "(x,x)";
    case GenShape::Out: return "exists y " + g.pred + "(x,y)";
    case GenShape::In: return "exists y " + g.pred + "(y,x)";
  }
  return "?";
}

// ------------------------------------------------------------------ formulas

Formula f_true() {
  Formula f;
  f.kind = Formula::Kind::True;
  return f;
}
Formula f_false() {
  Formula f;
  f.kind = Formula::Kind::False;
  return f;
}

Formula f_atom(Atom a) {
  Formula f;
  f.kind = Formula::Kind::Atom;
  f.atom = std::move(a);
  return f;
}

Formula f_eq(std::string l, std::string r) {
  Formula f;
  f.kind = Formula::Kind::Eq;
  f.lhs = std::move(l);
  f.rhs = std::move(r);
  return f;
}

Formula f_and(std::vector<Formula> kids) {
  std::vector<Formula> flat;
  for (auto& k : kids) {
    if (k.kind == Formula::Kind::True) continue;
    if (k.kind == Formula::Kind::False) return f_false();
    if (k.kind == Formula::Kind::And) {
      for (auto& g : k.kids) flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(k));
    }
  }
  if (flat.empty()) return f_true();
  if (flat.size() == 1) return flat[0];
  Formula f;
  f.kind = Formula::Kind::And;
  f.kids = std::move(flat);
  return f;
}

Formula f_or(std::vector<Formula> kids) {
  std::vector<Formula> flat;
  for (auto& k : kids) {
    if (k.kind == Formula::Kind::False) continue;
    if (k.kind == Formula::Kind::True) return f_true();
    if (k.kind == Formula::Kind::Or) {
      for (auto& g : k.kids) flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(k));
    }
  }
  if (flat.empty()) return f_false();
  if (flat.size() == 1) return flat[0];
  Formula f;
  f.kind = Formula::Kind::Or;
  f.kids = std::move(flat);
  return f;
}

Formula f_not(Formula f) {
  Formula g;
  g.kind = Formula::Kind::Not;
  g.kids.push_back(std::move(f));
  return g;
}

Formula f_exists(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  if (body.kind == Formula::Kind::Exists) {
    // merge nested quantifier blocks
    vars.insert(vars.end(), body.bound.begin(), body.bound.end());
    Formula inner = std::move(body.kids[0]);
    body = std::move(inner);
  }
  Formula f;
  f.kind = Formula::Kind::Exists;
  f.bound = std::move(vars);
  f.kids.push_back(std::move(body));
  return f;
}

Formula f_forall(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  Formula f;
  f.kind = Formula::Kind::Forall;
  f.bound = std::move(vars);
  f.kids.push_back(std::move(body));
  return f;
}

size_t pe_size(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::Eq: return 1;
    default: break;
  }
  size_t n = 0;
  for (const auto& k : f.kids) n += pe_size(k);
  return n;
}

bool is_pe(const Formula& f) {
  if (f.kind == Formula::Kind::Not || f.kind == Formula::Kind::Forall) return false;
  for (const auto& k : f.kids)
    if (!is_pe(k)) return false;
  return true;
}

static void free_vars_rec(const Formula& f, std::set<std::string>& bound,
                          std::set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      for (const auto& t : f.atom.args)
        if (t.is_var && !bound.count(t.name)) out.insert(t.name);
      return;
    case Formula::Kind::Eq:
      if (!bound.count(f.lhs)) out.insert(f.lhs);
      if (!bound.count(f.rhs)) out.insert(f.rhs);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      std::vector<std::string> added;
      for (const auto& v : f.bound)
        if (bound.insert(v).second) added.push_back(v);
      free_vars_rec(f.kids[0], bound, out);
      for (const auto& v : added) bound.erase(v);
      return;
    }
    default:
      for (const auto& k : f.kids) free_vars_rec(k, bound, out);
  }
}

std::vector<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return {out.begin(), out.end()};
}

// ------------------------------------------------------------------ signature

void Signature::add(const Atom& a) {
  if (a.arity() != 1 && a.arity() != 2)
    fail(Err::ArityMismatch, "predicate " + a.pred + " has arity " + std::to_string(a.arity()));
  auto [it, fresh] = arity.emplace(a.pred, a.arity());
  if (!fresh && it->second != a.arity())
    fail(Err::ArityMismatch, "predicate " + a.pred + " used with two arities");
}

void Signature::add(const Ontology& t) {
  for (const auto& g : t.tgds) {
    add(g.body);
    for (const auto& h : g.head) add(h);
  }
}

void Signature::add(const ConjunctiveQuery& q) {
  for (const auto& a : q.atoms) add(a);
}

void Signature::add(const DataInstance& a) {
  for (const auto& at : a.atoms) add(at);
}

std::vector<Generator> all_generators(const Signature& sig) {
  std::vector<Generator> out;
  for (const auto& [p, ar] : sig.arity) {
    if (ar == 1) {
      out.push_back({GenShape::Unary, p});
    } else {
      out.push_back({GenShape::Reflexive, p});
      out.push_back({GenShape::Out, p});
      out.push_back({GenShape::In, p});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ validation

static void check_no_constants(const Atom& a, const char* where) {
  for (const auto& t : a.args)
    if (!t.is_var) fail(Err::ConstantInRule, std::string("constant in ") + where);
}

void validate(const Ontology& t) {
  Signature sig;
  sig.add(t);  // throws on arity trouble
  for (const auto& g : t.tgds) {
    check_no_constants(g.body, "tgd body");
    std::set<std::string> vars;
    for (const auto& tm : g.body.args) vars.insert(tm.name);
    std::set<std::string> all = vars;
    if (g.head_existential) {
      if (vars.count(*g.head_existential))
        fail(Err::TooManyTgdVariables, "head existential also occurs in body");
      all.insert(*g.head_existential);
    }
    if (all.size() > 2) fail(Err::TooManyTgdVariables, "tgd uses more than 2 variables");
    if (g.head.empty()) fail(Err::Syntax, "tgd with empty head");
    for (const auto& h : g.head) {
      check_no_constants(h, "tgd head");
      for (const auto& tm : h.args)
        if (!all.count(tm.name))
          fail(Err::TooManyTgdVariables, "head variable " + tm.name + " unbound");
    }
  }
}

void validate(const ConjunctiveQuery& q) {
  if (q.atoms.empty()) fail(Err::EmptyQuery, "query has no atoms");
  Signature sig;
  sig.add(q);
  for (const auto& a : q.atoms) check_no_constants(a, "query atom");
  std::set<std::string> vs;
  for (const auto& a : q.atoms)
    for (const auto& t : a.args) vs.insert(t.name);
  for (const auto& v : q.answer_vars)
    if (!vs.count(v)) fail(Err::AnswerVarNotInBody, "answer variable " + v + " not in body");
}

void validate(const DataInstance& a) {
  Signature sig;
  sig.add(a);
  for (const auto& at : a.atoms)
    for (const auto& t : at.args)
      if (t.is_var) fail(Err::ConstantInRule, "variable in data atom");
}

}  // namespace twr
