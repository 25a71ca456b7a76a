#pragma once

#include "nutl/kripke.hpp"
#include "nutl/sat.hpp"

namespace nutl {

struct ProductNode {
  int state;
  int pfg_node;  // -1 only for the placeholder root over an empty PFG
};

struct ProductEdge {
  int src;
  PresentPart label;
  std::set<std::string> mark;
  int dst;
};

// Synchronized product of a Kripke structure with a PFG; edges mirror a
// Kripke transition and a PFG edge whose label holds in the source state.
struct ProductGraph {
  std::vector<ProductNode> nodes;
  std::vector<ProductEdge> edges;
  std::vector<std::vector<int>> out;
  int root = -1;

  bool empty() const { return nodes.empty(); }
};

ProductGraph build_product(const KripkeStructure& m, const PFG& g);

// Dead-node elimination, same policy switch as the PFG pruning.
ProductGraph pg_reduction(const ProductGraph& pg, bool paper_prune = false);

MarkedGraph view_of(const ProductGraph& pg);

// Counterexample as a lasso of model states.
struct StateLasso {
  std::vector<std::string> prefix;
  std::vector<std::string> period;
  std::string text() const;  // prefix: s0 s2 ; period: s3
};

struct MCVerdict {
  bool holds = true;
  std::optional<StateLasso> counterexample;
};

struct MCOptions {
  bool apply_guard_transform = false;
  BuildOptions build;
};

struct MCResult {
  MCVerdict verdict;
  PFG pfg;               // PFG of the negated property
  ProductGraph product;  // reduced product
  std::vector<int> witness_edges;  // loop edge ids into `product`
};

// M |= phi iff the product of M with the PFG of !phi has no nu-path; a found
// nu-path projects to a counterexample, validated against the evaluator.
MCResult solve_mc(const KripkeStructure& m, const Ref& phi, const MCOptions& opts = {});
MCVerdict model_check(const KripkeStructure& m, const Ref& phi, const MCOptions& opts = {});

std::string dot_export(const ProductGraph& pg, const KripkeStructure& m,
                       const std::vector<int>& highlight_edges = {});

}  // namespace nutl
