#include "nutl/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "nutl/parse.hpp"
#include "nutl/sat.hpp"

namespace nutl {

Ref gen_include(int n) {
  if (n < 0) throw InputError("Include_n needs n >= 0");
  std::string core = "!q /\\ ()X";
  for (int i = 0; i < 2 * n; ++i) core = "q /\\ ()(" + core + ")";
  std::string lhs = "nu X . (" + core + ")";
  std::string rhs = "nu Z . mu Y . (!q /\\ ()Z \\/ q /\\ ()(q /\\ ()Y))";
  return parse_formula("(" + lhs + ") -> (" + rhs + ")");
}

Ref gen_nester(int n) {
  if (n < 1) throw InputError("Nester_n needs n >= 1");
  std::string inner = "q" + std::to_string(n) + " \\/ ()X" + std::to_string(n);
  for (int i = n - 1; i >= 1; --i) {
    std::string qi = "q" + std::to_string(i);
    std::string xi = "X" + std::to_string(i);
    inner = qi + " \\/ ()(" + xi + " /\\ (" + inner + "))";
  }
  std::string psi;
  for (int i = 1; i <= n; ++i)
    psi += (i % 2 == 1 ? "mu X" : "nu X") + std::to_string(i) + " . ";
  psi += "(" + inner + ")";
  return parse_formula("(" + psi + ") \\/ !(" + psi + ")");
}

Ref gen_counter(int n) {
  if (n < 0) throw InputError("Counter_n needs n >= 0");
  std::string disj;
  for (int i = 0; i <= n; ++i) disj += (i ? " \\/ " : "") + std::string("!c") + std::to_string(i);
  std::string body = "()X \\/ (c0 ^ ()!c0)";
  for (int i = 1; i <= n; ++i) {
    std::string ci = "c" + std::to_string(i);
    std::string cp = "c" + std::to_string(i - 1);
    body += " \\/ (()" + ci + " ^ (" + ci + " /\\ !" + cp + " \\/ " + cp + " /\\ (()" + cp +
            " <-> " + ci + ")))";
  }
  return parse_formula(disj + " \\/ mu X . (" + body + ")");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Include: return "include";
    case Family::Nester: return "nester";
    case Family::Counter: return "counter";
  }
  return "?";
}

namespace {

Ref gen(Family f, int n) {
  switch (f) {
    case Family::Include: return gen_include(n);
    case Family::Nester: return gen_nester(n);
    case Family::Counter: return gen_counter(n);
  }
  throw InputError("unknown family");
}

}  // namespace

std::vector<BenchRecord> run_bench(Family family, int n_from, int n_to, const BenchOptions& opts) {
  std::vector<BenchRecord> rows;
  for (int n = n_from; n <= n_to; ++n) {
    if (family == Family::Nester && n < 1) continue;
    BenchRecord row{family_name(family), n};
    Ref target = negate(gen(family, n));
    std::vector<double> times;
    for (int rep = 0; rep < std::max(1, opts.reps); ++rep) {
      SatOptions sopts;
      sopts.build.paper_prune = opts.paper_prune;
      sopts.build.node_budget = opts.node_budget;
      if (opts.timeout_seconds)
        sopts.build.deadline = std::chrono::steady_clock::now() +
                               std::chrono::microseconds(static_cast<long>(*opts.timeout_seconds * 1e6));
      auto t0 = std::chrono::steady_clock::now();
      try {
        SatResult res = solve_sat(target, sopts);
        row.verdict = res.verdict.satisfiable ? "sat" : "unsat";
        row.pfg_nodes = static_cast<long>(res.pfg.nodes.size());
        row.pfg_edges = static_cast<long>(res.pfg.edges.size());
      } catch (const TimeoutError&) {
        row.verdict = "timeout";
      } catch (const BudgetError&) {
        row.verdict = "budget";
      }
      auto t1 = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      if (row.verdict == "timeout" || row.verdict == "budget") break;
    }
    std::sort(times.begin(), times.end());
    row.time_ms = times[times.size() / 2];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRecord>& rows) {
  std::ostringstream os;
  os << "family,n,time_ms,nodes,edges,verdict\n";
  os.setf(std::ios::fixed);
  os.precision(3);
  for (const auto& r : rows)
    os << r.family << ',' << r.n << ',' << r.time_ms << ',' << r.pfg_nodes << ',' << r.pfg_edges
       << ',' << r.verdict << '\n';
  return os.str();
}

}  // namespace nutl
