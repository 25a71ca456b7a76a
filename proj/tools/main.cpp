#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nutl/bench.hpp"
#include "nutl/modelcheck.hpp"
#include "nutl/parse.hpp"
#include "nutl/sat.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nutl::InputError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw nutl::InputError("cannot write file '" + path + "'");
  out << content;
}

struct FormulaInput {
  std::string inline_text;
  std::string file;

  nutl::Ref get() const {
    if (!inline_text.empty() && !file.empty())
      throw nutl::InputError("give the formula either inline (-e) or as a file (-f), not both");
    if (!inline_text.empty()) return nutl::parse_formula(inline_text);
    if (!file.empty()) return nutl::parse_formula(slurp(file));
    throw nutl::InputError("no formula given (use -e or -f)");
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("-e,--formula", inline_text, "formula text");
    cmd->add_option("-f,--file", file, "file containing the formula");
  }
};

struct CommonFlags {
  bool guard = false;
  bool paper_prune = false;
  long node_budget = 250000;
  double timeout = 0;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--guard", guard, "apply the guarded transformation when needed");
    cmd->add_flag("--paper-prune", paper_prune, "single-pass dead-node pruning");
    cmd->add_option("--node-budget", node_budget, "cap on PFG nodes");
    cmd->add_option("--timeout", timeout, "wall-clock limit in seconds");
  }

  nutl::BuildOptions build() const {
    nutl::BuildOptions b;
    b.paper_prune = paper_prune;
    b.node_budget = node_budget;
    if (timeout > 0)
      b.deadline = std::chrono::steady_clock::now() +
                   std::chrono::microseconds(static_cast<long>(timeout * 1e6));
    return b;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nutl - linear time mu-calculus satisfiability and model checking"};
  app.require_subcommand(1);

  FormulaInput sat_in, mc_in, pfg_in, eval_in;
  CommonFlags sat_flags, mc_flags, pfg_flags;
  std::string sat_dot, mc_dot, pfg_dot, mc_model, eval_lasso_text, bench_family, bench_out;
  bool sat_no_witness = false, pfg_text = false;
  int bench_from = 0, bench_to = 0, bench_reps = 1;
  double bench_timeout = 0;
  bool bench_paper_prune = false;

  auto* sat = app.add_subcommand("sat", "decide satisfiability");
  sat_in.attach(sat);
  sat_flags.attach(sat);
  sat->add_option("--dot", sat_dot, "write the PFG as DOT (nu-loop in red)");
  sat->add_flag("--no-witness", sat_no_witness, "suppress the witness lasso");

  auto* mc = app.add_subcommand("mc", "model-check a Kripke structure");
  mc_in.attach(mc);
  mc_flags.attach(mc);
  mc->add_option("--model", mc_model, "Kripke structure file")->required();
  mc->add_option("--dot", mc_dot, "write the product graph as DOT");

  auto* pfg = app.add_subcommand("pfg", "build and export the PFG");
  pfg_in.attach(pfg);
  pfg_flags.attach(pfg);
  pfg->add_option("--dot", pfg_dot, "write DOT to a file instead of stdout");
  pfg->add_flag("--text", pfg_text, "plain-text dump instead of DOT");

  auto* ev = app.add_subcommand("eval", "evaluate a formula on a lasso word");
  eval_in.attach(ev);
  ev->add_option("--lasso", eval_lasso_text, "lasso, e.g. \"prefix: {p} ; period: {q} {}\"")
      ->required();

  auto* bench = app.add_subcommand("bench", "run a benchmark family");
  bench->add_option("--family", bench_family, "include | nester | counter")->required();
  bench->add_option("--from", bench_from, "first index");
  bench->add_option("--to", bench_to, "last index");
  bench->add_option("--reps", bench_reps, "repetitions per row (median reported)");
  bench->add_option("--timeout", bench_timeout, "per-row limit in seconds");
  bench->add_option("--out", bench_out, "write CSV to a file instead of stdout");
  bench->add_flag("--paper-prune", bench_paper_prune, "single-pass pruning");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sat->parsed()) {
      nutl::SatOptions opts{sat_flags.guard, sat_flags.build()};
      nutl::SatResult res = nutl::solve_sat(sat_in.get(), opts);
      std::cout << (res.verdict.satisfiable ? "SAT" : "UNSAT") << "\n";
      if (res.verdict.satisfiable && !sat_no_witness)
        std::cout << nutl::format_lasso(*res.verdict.lasso) << "\n";
      if (!sat_dot.empty()) {
        std::vector<int> red;
        if (res.verdict.witness) {
          red = res.verdict.witness->loop_edges;
          red.insert(red.end(), res.verdict.witness->prefix_edges.begin(),
                     res.verdict.witness->prefix_edges.end());
        }
        write_file(sat_dot, nutl::dot_export(res.pfg, red));
      }
    } else if (mc->parsed()) {
      nutl::KripkeStructure model = nutl::parse_kripke(slurp(mc_model));
      nutl::MCOptions opts{mc_flags.guard, mc_flags.build()};
      nutl::MCResult res = nutl::solve_mc(model, mc_in.get(), opts);
      std::cout << (res.verdict.holds ? "HOLDS" : "VIOLATED") << "\n";
      if (res.verdict.counterexample) std::cout << res.verdict.counterexample->text() << "\n";
      if (!mc_dot.empty()) write_file(mc_dot, nutl::dot_export(res.product, model, res.witness_edges));
    } else if (pfg->parsed()) {
      nutl::SatOptions opts{pfg_flags.guard, pfg_flags.build()};
      nutl::Ref f = nutl::prepare_formula(pfg_in.get(), opts);
      nutl::BinderInfo info = nutl::dependencies(f);
      nutl::PFG g = nutl::build_pfg(f, info, opts.build);
      std::string out = pfg_text ? nutl::dump_text(g) : nutl::dot_export(g);
      if (pfg_dot.empty())
        std::cout << out;
      else
        write_file(pfg_dot, out);
    } else if (ev->parsed()) {
      nutl::Ref f = eval_in.get();
      if (!nutl::is_closed(f)) throw nutl::InputError("formula is not closed");
      bool v = nutl::eval_lasso(f, nutl::parse_lasso(eval_lasso_text));
      std::cout << (v ? "true" : "false") << "\n";
    } else if (bench->parsed()) {
      nutl::Family fam;
      if (bench_family == "include") fam = nutl::Family::Include;
      else if (bench_family == "nester") fam = nutl::Family::Nester;
      else if (bench_family == "counter") fam = nutl::Family::Counter;
      else throw nutl::InputError("unknown family '" + bench_family + "'");
      nutl::BenchOptions opts;
      opts.reps = bench_reps;
      opts.paper_prune = bench_paper_prune;
      if (bench_timeout > 0) opts.timeout_seconds = bench_timeout;
      std::string csv = nutl::to_csv(nutl::run_bench(fam, bench_from, bench_to, opts));
      if (bench_out.empty())
        std::cout << csv;
      else
        write_file(bench_out, csv);
    }
  } catch (const nutl::TimeoutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nutl::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
