#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nutl/normalize.hpp"

namespace nutl {

// Search view shared by PFGs and product graphs: dense nodes, edges carrying
// variable-set marks (borrowed from the owning graph).
struct MarkedGraph {
  int node_count = 0;
  std::vector<int> src, dst;                        // per edge
  std::vector<const std::set<std::string>*> mark;   // per edge, non-owning
  std::vector<std::vector<int>> out;                // edge ids per node, in id order
  int root = 0;

  void add_edge(int s, int d, const std::set<std::string>* m) {
    src.push_back(s);
    dst.push_back(d);
    mark.push_back(m);
    out[s].push_back(static_cast<int>(src.size()) - 1);
  }
};

// SCCs of the part reachable from root, in completion order of the DFS.
std::vector<std::vector<int>> tarjan_scc(const MarkedGraph& g, int root);

// A loop satisfies the nu-path condition iff every mu-variable V occurring in
// its marks has some loop edge whose mark avoids V and everything V depends
// on.
bool is_nu_path(const MarkedGraph& g, const std::vector<int>& loop_edges, const BinderInfo& info);

// DFS over the SCC's edges (each visited at most once per search); on the
// first node revisit the loop suffix is tested with is_nu_path. Returns the
// first accepted loop as an edge-id list.
std::optional<std::vector<int>> scc_nu_search(const MarkedGraph& g, const std::vector<int>& scc_nodes,
                                              const BinderInfo& info);

// tarjan_scc + scc_nu_search per component, components in completion order,
// entry node = lowest id in the component.
std::optional<std::vector<int>> find_nu_loop(const MarkedGraph& g, const BinderInfo& info);

// Shortest edge path from `from` to `to` (BFS, lowest edge id first); empty
// when from == to.
std::vector<int> bfs_edge_path(const MarkedGraph& g, int from, int to);

struct PruneResult {
  std::vector<int> node_map;    // old id -> new id, -1 = removed
  std::vector<char> edge_keep;  // per edge
};

// Removes nodes with no outgoing edge. paper_prune does one literal pass;
// otherwise iterate to fixpoint and drop root-unreachable nodes too.
PruneResult prune_graph(int node_count, const std::vector<std::pair<int, int>>& arcs, int root,
                        bool paper_prune);

}  // namespace nutl
