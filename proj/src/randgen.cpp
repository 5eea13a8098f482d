#include "twr/randgen.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twr/chase.hpp"
#include "twr/evaluate.hpp"
#include "twr/rewrite_ndl.hpp"
#include "twr/rewrite_pe.hpp"
#include "twr/textio.hpp"

namespace twr {

namespace {

using Rng = std::mt19937_64;

size_t pick(Rng& rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

template <typename T>
const T& choice(Rng& rng, const std::vector<T>& xs) {
  return xs[pick(rng, 0, xs.size() - 1)];
}

// Trigger predicates (unary U*, reflexive-body B1) never occur in heads, so
// no tgd fires on a labelled null and the depth-1 bound is structural.
const std::vector<std::string> kTriggers{"U1", "U2"};
const std::vector<std::string> kUnary{"C1", "C2"};
const std::vector<std::string> kBinary{"E1", "E2", "F1"};

Atom head_over(Rng& rng, const std::string& x, const std::string& y) {
  const std::string& p = choice(rng, kBinary);
  switch (pick(rng, 0, 1)) {
    case 0:
      return atom2(p, mkvar(x), mkvar(y));
    default:
      return atom2(p, mkvar(y), mkvar(x));
  }
}

Ontology random_ontology(Rng& rng, int depth) {
  Ontology t;
  size_t nex = pick(rng, 1, 3);
  for (size_t i = 0; i < nex; ++i) {
    TGD g;
    if (pick(rng, 0, 3) == 0)
      g.body = atom2("B1", mkvar("x"), mkvar("x"));
    else
      g.body = atom1(choice(rng, kTriggers), mkvar("x"));
    g.head_existential = "y";
    size_t natoms = pick(rng, 1, 3);
    for (size_t j = 0; j < natoms; ++j) g.head.push_back(head_over(rng, "x", "y"));
    if (depth == 2 && i == 0) g.head.push_back(atom1("L1", mkvar("y")));
    std::sort(g.head.begin(), g.head.end());
    g.head.erase(std::unique(g.head.begin(), g.head.end()), g.head.end());
    t.tgds.push_back(std::move(g));
  }
  if (depth == 2) {
    TGD g;
    g.body = atom1("L1", mkvar("x"));
    g.head_existential = "y";
    size_t natoms = pick(rng, 1, 2);
    for (size_t j = 0; j < natoms; ++j) g.head.push_back(head_over(rng, "x", "y"));
    std::sort(g.head.begin(), g.head.end());
    g.head.erase(std::unique(g.head.begin(), g.head.end()), g.head.end());
    t.tgds.push_back(std::move(g));
  }
  size_t nplain = pick(rng, 0, 3);
  for (size_t i = 0; i < nplain; ++i) {
    TGD g;
    std::vector<std::string> body_vars;
    switch (pick(rng, 0, 2)) {
      case 0:
        g.body = atom1(choice(rng, kUnary), mkvar("x"));
        body_vars = {"x"};
        break;
      case 1:
        g.body = atom2(choice(rng, kBinary), mkvar("x"), mkvar("x"));
        body_vars = {"x"};
        break;
      default:
        g.body = atom2(choice(rng, kBinary), mkvar("x"), mkvar("y"));
        body_vars = {"x", "y"};
        break;
    }
    if (pick(rng, 0, 1) == 0) {
      g.head.push_back(atom1(choice(rng, kUnary), mkvar(choice(rng, body_vars))));
    } else {
      g.head.push_back(atom2(choice(rng, kBinary), mkvar(choice(rng, body_vars)),
                             mkvar(choice(rng, body_vars))));
    }
    if (g.head[0] == g.body) continue;
    t.tgds.push_back(std::move(g));
  }
  return t;
}

}  // namespace

RandomInstance random_instance(uint64_t seed, int depth) {
  if (depth != 1 && depth != 2) fail(Err::BadParameters, "depth must be 1 or 2");
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 1);
  RandomInstance inst;
  for (int attempt = 0;; ++attempt) {
    inst.ontology = random_ontology(rng, depth);
    DepthResult d = ontology_depth(inst.ontology);
    if (d.kind == DepthResult::Kind::Finite && d.depth == depth) break;
    if (attempt > 50) fail(Err::BadParameters, "could not reach the requested depth");
  }
  std::vector<std::string> preds1 = kTriggers;
  preds1.insert(preds1.end(), kUnary.begin(), kUnary.end());
  if (depth == 2) preds1.push_back("L1");
  std::vector<std::string> preds2 = kBinary;
  preds2.push_back("B1");

  std::vector<std::string> vars{"y1", "y2", "y3", "y4", "y5"};
  size_t nvars = pick(rng, 2, 5);
  vars.resize(nvars);
  size_t natoms = pick(rng, 2, 6);
  std::vector<std::string> used;
  for (size_t i = 0; i < natoms; ++i) {
    if (pick(rng, 0, 3) == 0) {
      inst.query.atoms.push_back(atom1(choice(rng, preds1), mkvar(choice(rng, vars))));
    } else {
      inst.query.atoms.push_back(
          atom2(choice(rng, preds2), mkvar(choice(rng, vars)), mkvar(choice(rng, vars))));
    }
  }
  inst.query.normalize();
  for (const Atom& a : inst.query.atoms)
    for (const Term& u : a.args) used.push_back(u.name);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  size_t nanswer = std::min(pick(rng, 0, 2), used.size());
  for (size_t i = 0; i < nanswer; ++i) inst.query.answer_vars.push_back(used[i]);

  std::vector<std::string> consts{"a", "b", "c", "d"};
  consts.resize(pick(rng, 1, 4));
  size_t nfacts = pick(rng, 2, 10);
  for (size_t i = 0; i < nfacts; ++i) {
    if (pick(rng, 0, 2) == 0) {
      inst.data.atoms.push_back(atom1(choice(rng, preds1), mkconst(choice(rng, consts))));
    } else {
      inst.data.atoms.push_back(atom2(choice(rng, preds2), mkconst(choice(rng, consts)),
                                      mkconst(choice(rng, consts))));
    }
  }
  inst.data.normalize();
  validate(inst.ontology);
  validate(inst.query);
  validate(inst.data);
  return inst;
}

// ------------------------------------------------------------------ verify

namespace {

Formula cq_formula(const ConjunctiveQuery& q) {
  std::vector<Formula> conj;
  for (const Atom& a : q.atoms) conj.push_back(f_atom(a));
  Formula body = f_and(std::move(conj));
  auto ys = q.existential_vars();
  return ys.empty() ? body : f_exists(ys, std::move(body));
}

std::string run_trial(uint64_t seed, int depth, bool check_ndl) {
  RandomInstance inst = random_instance(seed, depth);
  const auto& [t, q, a] = inst;
  std::ostringstream why;
  try {
    DataInstance sat = saturate(t, a);
    AnswerSet ca = certain_answers(t, sat, q);

    PERewriting pe = tw_rewrite(q, t);
    if (eval_fo(pe.formula, q.answer_vars, sat) != ca) why << "tw_rewrite mismatch; ";
    Formula arb = to_arbitrary_data(pe.formula, t, q);
    if (eval_fo(arb, q.answer_vars, a) != certain_answers(t, a, q))
      why << "to_arbitrary_data mismatch; ";

    try {
      PERewriting cpe = compact_tw_rewrite(q, t);
      if (eval_fo(cpe.formula, q.answer_vars, sat) != ca) why << "compact mismatch; ";
    } catch (const Error& e) {
      if (e.code != Err::IncompatibleTreeWitnesses) throw;
    }

    bool tree = true;
    try {
      if (eval_tree_cq(q, sat) != eval_fo(cq_formula(q), q.answer_vars, sat))
        why << "tree-cq evaluation mismatch; ";
    } catch (const Error& e) {
      if (e.code != Err::NotTree) throw;
      tree = false;
    }
    if (tree) {
      for (auto strat : {SplitStrategy::Balanced, SplitStrategy::LeafFirst}) {
        PERewriting sp = split_rewrite(q, t, strat);
        if (eval_fo(sp.formula, q.answer_vars, sat) != ca)
          why << (strat == SplitStrategy::Balanced ? "split-balanced" : "split-leaf")
              << " mismatch; ";
      }
    }

    if (check_ndl && depth == 1) {
      NDLRewriting ndl = depth1_ndl_pipeline(q, t);
      if (eval_ndl(ndl.program, sat) != ca) why << "ndl pipeline mismatch; ";
      NDLProgram closed = ndl_to_arbitrary_data(ndl.program, t);
      if (eval_ndl(closed, a) != certain_answers(t, a, q))
        why << "ndl arbitrary-data mismatch; ";
    }
  } catch (const Error& e) {
    why << "error " << err_name(e.code) << ": " << e.what() << "; ";
  }
  if (why.str().empty()) return "";
  std::ostringstream out;
  out << "seed " << seed << ": " << why.str() << "\n"
      << print(t) << print(q) << print(a);
  return out.str();
}

}  // namespace

VerifyReport verify_random(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.trials = opt.trials;
  std::vector<std::string> results(opt.trials);
#ifdef _OPENMP
  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)opt.trials; ++i)
      results[i] = run_trial(opt.seed + i, opt.depth, opt.check_ndl);
  } else
#endif
  {
    for (size_t i = 0; i < opt.trials; ++i)
      results[i] = run_trial(opt.seed + i, opt.depth, opt.check_ndl);
  }
  for (auto& r : results)
    if (!r.empty()) {
      ++rep.mismatches;
      rep.failures.push_back(std::move(r));
    }
  return rep;
}

// ------------------------------------------------------------------ bench

Ontology path_ontology() {
  TGD g;
  g.body = atom1("A", mkvar("x"));
  g.head_existential = "y";
  g.head = {atom2("R", mkvar("x"), mkvar("y")), atom2("R", mkvar("y"), mkvar("x"))};
  return Ontology{{g}};
}

ConjunctiveQuery path_query(size_t n) {
  ConjunctiveQuery q;
  for (size_t i = 1; i <= n; ++i)
    q.atoms.push_back(atom2("R", mkvar("y" + std::to_string(i)),
                            mkvar("y" + std::to_string(i + 1))));
  q.normalize();
  return q;
}

std::vector<BenchRow> bench_growth(const std::vector<size_t>& lengths) {
  Ontology t = path_ontology();
  std::vector<BenchRow> rows;
  for (size_t n : lengths) {
    ConjunctiveQuery q = path_query(n);
    auto start = std::chrono::steady_clock::now();
    PERewriting sp = split_rewrite(q, t, SplitStrategy::Balanced,
                                   {.max_size = 100000000});
    auto stop = std::chrono::steady_clock::now();
    BenchRow row;
    row.family = "path-split";
    row.n = n;
    row.size = pe_size(sp.formula);
    row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(row);
  }
  return rows;
}

double fit_exponent(const std::vector<BenchRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t n = rows.size();
  for (const auto& r : rows) {
    double x = std::log((double)r.n), y = std::log((double)r.size);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,n,size,millis\n";
  for (const auto& r : rows)
    out << r.family << "," << r.n << "," << r.size << "," << r.millis << "\n";
  return out.str();
}

}  // namespace twr
