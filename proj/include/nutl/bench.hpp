#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nutl/formula.hpp"

namespace nutl {

enum class Family { Include, Nester, Counter };

// Include_n: nu X.(q /\ ()(... 2n q-layers ...) (!q /\ ()X)) -> nu Z. mu Y.(...)
Ref gen_include(int n);
// Nester_n: psi \/ !psi with an alternating mu/nu chain of depth n (outer mu).
Ref gen_nester(int n);
// Counter_n over c0..cn; its negation describes an (n+1)-bit counter run.
Ref gen_counter(int n);

struct BenchRecord {
  std::string family;
  int n = 0;
  double time_ms = 0;
  long pfg_nodes = 0;
  long pfg_edges = 0;
  std::string verdict;  // sat | unsat | timeout | budget
};

struct BenchOptions {
  int reps = 1;
  std::optional<double> timeout_seconds;  // per row
  bool paper_prune = false;
  long node_budget = 250000;
};

// Runs checkSat on the negation of each family formula; wall-clock median
// over reps. A timed-out row is recorded and the run continues.
std::vector<BenchRecord> run_bench(Family family, int n_from, int n_to,
                                   const BenchOptions& opts = {});

std::string family_name(Family f);
std::string to_csv(const std::vector<BenchRecord>& rows);

}  // namespace nutl
