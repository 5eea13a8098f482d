// Command-line front end: rewriting, answering, statistics, gadget
// generation, Boolean-model translation, randomized verification and
// benchmarks.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twr/boolmodels.hpp"
#include "twr/evaluate.hpp"
#include "twr/gadgets.hpp"
#include "twr/randgen.hpp"
#include "twr/rewrite_ndl.hpp"
#include "twr/rewrite_pe.hpp"
#include "twr/textio.hpp"
#include "twr/treewitness.hpp"

namespace {

using namespace twr;

int exit_code_for(const Error& e) {
  switch (e.code) {
    case Err::TooManyTreeWitnesses:
    case Err::RewritingTooLarge:
    case Err::AdviceTooLarge:
      return 3;
    default:
      return 1;
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

std::string show(const AnswerSet& a) {
  std::ostringstream out;
  if (a.arity == 0) {
    out << (a.holds() ? "true" : "false") << "\n";
    return out.str();
  }
  for (const auto& t : a.tuples) {
    for (size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree-witness query rewriting over linear tgd ontologies"};
  app.require_subcommand(1);

  std::string ont_path, query_path, data_path, in_path, out_path;
  std::string mode = "pe", family, op, edges_bits;
  bool arbitrary = false, trace = false;
  uint64_t seed = 1;
  int jobs = 0, depth = 1;
  size_t trials = 200, n = 4, k = 2;
  RewriteLimits limits;

  auto add_limits = [&](CLI::App* c) {
    c->add_option("--max-disjuncts", limits.max_disjuncts, "disjunct cap");
    c->add_option("--max-tree-witnesses", limits.max_tree_witnesses, "witness cap");
  };

  auto* rw = app.add_subcommand("rewrite", "compile a rewriting of a query");
  rw->add_option("--ontology", ont_path, ".tgd file")->required();
  rw->add_option("--query", query_path, ".cq file")->required();
  rw->add_option("--mode", mode, "pe | compact | split-balanced | split-leaf | ndl")
      ->check(CLI::IsMember({"pe", "compact", "split-balanced", "split-leaf", "ndl"}));
  rw->add_flag("--arbitrary-data", arbitrary, "close the rewriting for incomplete data");
  rw->add_flag("--trace", trace, "print the ndl pipeline stage sizes to stderr");
  rw->add_option("--out", out_path, "output file (default stdout)");
  add_limits(rw);

  auto* an = app.add_subcommand("answer", "answer a query over a data instance");
  an->add_option("--ontology", ont_path, ".tgd file")->required();
  an->add_option("--query", query_path, ".cq file")->required();
  an->add_option("--data", data_path, ".facts file")->required();
  an->add_option("--mode", mode,
                 "certain | pe | compact | split-balanced | split-leaf | ndl | tree")
      ->check(CLI::IsMember(
          {"certain", "pe", "compact", "split-balanced", "split-leaf", "ndl", "tree"}));
  add_limits(an);

  auto* st = app.add_subcommand("stats", "tree-witness statistics for a query");
  st->add_option("--ontology", ont_path, ".tgd file")->required();
  st->add_option("--query", query_path, ".cq file")->required();
  add_limits(st);

  auto* gd = app.add_subcommand("gadget", "generate a gadget family instance");
  gd->add_option("--family", family,
                 "hypergraph-obda | clique-hgp | clique-obda | clique-data")
      ->required()
      ->check(CLI::IsMember({"hypergraph-obda", "clique-hgp", "clique-obda", "clique-data"}));
  gd->add_option("--hypergraph", in_path, ".hg input for hypergraph-obda");
  gd->add_option("--n", n, "number of graph vertices");
  gd->add_option("--k", k, "clique size");
  gd->add_option("--edges", edges_bits, "edge bit vector, lexicographic pairs");
  gd->add_option("--out", out_path, "output file (default stdout)");

  auto* tr = app.add_subcommand("translate", "translate between Boolean models");
  tr->add_option("--op", op,
                 "hgp-normalize | hgp2-to-nbp | hgp2-to-nbp-dual | nbp-to-hgp2 | "
                 "nbp-to-circuit | dualize | hgp-to-nbc | nbc-to-hgp3")
      ->required()
      ->check(CLI::IsMember({"hgp-normalize", "hgp2-to-nbp", "hgp2-to-nbp-dual",
                             "nbp-to-hgp2", "nbp-to-circuit", "dualize", "hgp-to-nbc",
                             "nbc-to-hgp3"}));
  tr->add_option("--in", in_path, "input model file")->required();
  tr->add_option("--out", out_path, "output file (default stdout)");

  auto* vf = app.add_subcommand("verify", "differential rewriting verification");
  vf->add_option("--trials", trials, "number of random instances");
  vf->add_option("--depth", depth, "ontology depth class (1 or 2)");
  vf->add_option("--seed", seed, "base random seed");
  vf->add_option("--jobs", jobs, "1 = serial, otherwise OpenMP");

  auto* bn = app.add_subcommand("bench", "size growth on path queries");
  std::vector<size_t> lengths{4, 8, 16, 32, 64};
  bn->add_option("--lengths", lengths, "path lengths");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rw->parsed()) {
      Ontology t = parse_ontology(read_file(ont_path));
      ConjunctiveQuery q = parse_query(read_file(query_path));
      if (mode == "ndl") {
        NDLRewriting r = depth1_ndl_pipeline(q, t);
        if (trace) std::cerr << r.trace.to_json() << "\n";
        emit(out_path, print(arbitrary ? ndl_to_arbitrary_data(r.program, t) : r.program));
      } else {
        PERewriting r = mode == "pe"        ? tw_rewrite(q, t, limits)
                        : mode == "compact" ? compact_tw_rewrite(q, t, limits)
                        : split_rewrite(q, t,
                                        mode == "split-balanced" ? SplitStrategy::Balanced
                                                                 : SplitStrategy::LeafFirst,
                                        limits);
        for (const auto& w : r.notes) std::cerr << "warning: " << w << "\n";
        Formula f = arbitrary ? to_arbitrary_data(r.formula, t, q) : r.formula;
        emit(out_path, print(f) + "\n");
      }
    } else if (an->parsed()) {
      Ontology t = parse_ontology(read_file(ont_path));
      ConjunctiveQuery q = parse_query(read_file(query_path));
      DataInstance d = parse_data(read_file(data_path));
      AnswerSet ans;
      if (mode == "certain") {
        ans = certain_answers(t, d, q);
      } else if (mode == "tree") {
        ans = eval_tree_cq(q, d);
      } else if (mode == "ndl") {
        ans = eval_ndl(ndl_to_arbitrary_data(depth1_ndl_pipeline(q, t).program, t), d);
      } else {
        PERewriting r = mode == "pe"        ? tw_rewrite(q, t, limits)
                        : mode == "compact" ? compact_tw_rewrite(q, t, limits)
                        : split_rewrite(q, t,
                                        mode == "split-balanced" ? SplitStrategy::Balanced
                                                                 : SplitStrategy::LeafFirst,
                                        limits);
        ans = eval_fo(to_arbitrary_data(r.formula, t, q), q.answer_vars, d);
      }
      std::cout << show(ans);
    } else if (st->parsed()) {
      Ontology t = parse_ontology(read_file(ont_path));
      ConjunctiveQuery q = parse_query(read_file(query_path));
      auto tws = enumerate_tree_witnesses(q, t, {limits.max_tree_witnesses});
      size_t conflicts = 0;
      for (size_t i = 0; i < tws.size(); ++i)
        for (size_t j = i + 1; j < tws.size(); ++j)
          if (!independent(tws[i], tws[j])) ++conflicts;
      std::cout << "tree_witnesses: " << tws.size() << "\n"
                << "degree: " << tw_degree(q, tws) << "\n"
                << "conflicting_pairs: " << conflicts << "\n"
                << print(tw_hypergraph(q, tws));
    } else if (gd->parsed()) {
      if (family == "hypergraph-obda") {
        OBDAInstance g = hypergraph_to_obda(parse_hypergraph(read_file(in_path)));
        emit(out_path, print(g.ontology) + print(g.query));
      } else if (family == "clique-hgp") {
        emit(out_path, print(clique_hgp(n, k)));
      } else {
        CliqueInstance inst{n, k, {}};
        inst.edges.assign(n * (n - 1) / 2, false);
        for (size_t i = 0; i < edges_bits.size() && i < inst.edges.size(); ++i)
          inst.edges[i] = edges_bits[i] == '1';
        if (family == "clique-obda") {
          OBDAInstance g = clique_obda(n, k);
          emit(out_path, print(g.ontology) + print(g.query));
        } else {
          emit(out_path, print(clique_data(inst)));
        }
      }
    } else if (tr->parsed()) {
      std::string text = read_file(in_path);
      std::string result;
      if (op == "hgp-normalize")
        result = print(normalize_degree2(parse_hypergraph(text)));
      else if (op == "hgp2-to-nbp")
        result = print(hgp2_to_nbp(parse_hypergraph(text), false));
      else if (op == "hgp2-to-nbp-dual")
        result = print(hgp2_to_nbp(parse_hypergraph(text), true));
      else if (op == "nbp-to-hgp2")
        result = print(nbp_to_hgp2(parse_nbp(text)));
      else if (op == "nbp-to-circuit")
        result = print(nbp_to_monotone_circuit(parse_nbp(text)));
      else if (op == "dualize")
        result = print(circuit_dualize(parse_circuit(text)));
      else if (op == "hgp-to-nbc")
        result = print(hgp_to_nbc(parse_hypergraph(text)));
      else
        result = print(nbc_to_hgp3(parse_nondet_circuit(text)));
      emit(out_path, result);
    } else if (vf->parsed()) {
      VerifyOptions opt;
      opt.trials = trials;
      opt.depth = depth;
      opt.seed = seed;
      opt.parallel = jobs != 1;
      VerifyReport rep = verify_random(opt);
      std::cout << "trials: " << rep.trials << "\nmismatches: " << rep.mismatches << "\n";
      for (const auto& f : rep.failures) std::cout << f << "\n";
      return rep.mismatches == 0 ? 0 : 1;
    } else if (bn->parsed()) {
      auto rows = bench_growth(lengths);
      std::cout << bench_csv(rows);
      std::cout << "fitted_exponent: " << fit_exponent(rows) << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error (" << err_name(e.code) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
