#pragma once

#include <chrono>
#include <optional>

#include "nutl/pf.hpp"

namespace nutl {

// A node is a canonical set of closure members: sorted, deduplicated, `true`
// elided (empty set = the true node), `false` absorbing.
struct PfgNode {
  std::vector<Ref> conjuncts;
  bool is_false_node() const {
    return conjuncts.size() == 1 && conjuncts[0]->kind == Kind::False;
  }
};

struct PfgEdge {
  int src;
  PresentPart label;
  std::set<std::string> mark;
  int dst;
};

struct PFG {
  std::vector<PfgNode> nodes;
  std::vector<PfgEdge> edges;
  std::vector<std::vector<int>> out;  // edge ids per source, in creation order
  int root = -1;

  bool empty() const { return nodes.empty(); }
};

struct BuildOptions {
  bool paper_prune = false;  // literal single pruning pass instead of fixpoint + reachability
  long node_budget = 250000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Worklist construction per the PF transformation; prunes dead nodes
// afterwards. Requires phi closed, guarded and push_next-normalized.
PFG build_pfg(const Ref& phi, const BinderInfo& info, const BuildOptions& opts = {});

std::string node_text(const PfgNode& n);
std::string dump_text(const PFG& g);  // node table plus one line per edge
std::string dot_export(const PFG& g, const std::vector<int>& highlight_edges = {});

}  // namespace nutl
