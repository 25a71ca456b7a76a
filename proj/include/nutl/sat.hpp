#pragma once

#include "nutl/lasso.hpp"
#include "nutl/pfg.hpp"
#include "nutl/search.hpp"

namespace nutl {

// Path from the root ending in a simple cycle, as PFG edge ids.
struct LoopWitness {
  std::vector<int> prefix_edges;
  std::vector<int> loop_edges;  // nonempty cycle
};

struct Verdict {
  bool satisfiable = false;
  std::optional<LoopWitness> witness;
  std::optional<LassoWord> lasso;
};

struct SatOptions {
  bool apply_guard_transform = false;  // otherwise unguarded input is an error
  BuildOptions build;
};

struct SatResult {
  Verdict verdict;
  PFG pfg;
  Ref normalized;  // the formula the PFG was built from
};

// Guards (per options) and ()-normalizes phi. Throws InputError when phi is
// open or unguarded with the transform disabled.
Ref prepare_formula(const Ref& phi, const SatOptions& opts);

MarkedGraph view_of(const PFG& g);

// PFG emptiness / nu-path search; a found loop is turned into a lasso,
// validated against the evaluator before it is returned.
SatResult solve_sat(const Ref& phi, const SatOptions& opts = {});
Verdict check_sat(const Ref& phi, const SatOptions& opts = {});

LassoWord extract_lasso(const LoopWitness& w, const PFG& g);

}  // namespace nutl
