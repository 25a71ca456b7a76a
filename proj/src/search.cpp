#include "nutl/search.hpp"

#include <algorithm>
#include <deque>

namespace nutl {

std::vector<std::vector<int>> tarjan_scc(const MarkedGraph& g, int root) {
  const int n = g.node_count;
  std::vector<int> dfn(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int index = 0;

  // Iterative DFS; frames carry the next out-edge position to resume at.
  struct Frame {
    int v;
    size_t next = 0;
  };
  std::vector<Frame> frames;
  if (root < 0 || n == 0) return sccs;
  frames.push_back({root});
  dfn[root] = low[root] = index++;
  stack.push_back(root);
  on_stack[root] = 1;

  while (!frames.empty()) {
    Frame& fr = frames.back();
    if (fr.next < g.out[fr.v].size()) {
      int eid = g.out[fr.v][fr.next++];
      int w = g.dst[eid];
      if (dfn[w] < 0) {
        dfn[w] = low[w] = index++;
        stack.push_back(w);
        on_stack[w] = 1;
        frames.push_back({w});
      } else if (on_stack[w]) {
        low[fr.v] = std::min(low[fr.v], dfn[w]);
      }
      continue;
    }
    int v = fr.v;
    frames.pop_back();
    if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
    if (low[v] == dfn[v]) {
      std::vector<int> scc;
      for (;;) {
        int u = stack.back();
        stack.pop_back();
        on_stack[u] = 0;
        scc.push_back(u);
        if (u == v) break;
      }
      sccs.push_back(std::move(scc));
    }
  }
  return sccs;
}

bool is_nu_path(const MarkedGraph& g, const std::vector<int>& loop_edges, const BinderInfo& info) {
  std::set<std::string> ms;
  for (int e : loop_edges)
    for (const auto& v : *g.mark[e])
      if (info.is_mu(v)) ms.insert(v);
  for (const auto& v : ms) {
    bool found = false;
    for (int e : loop_edges) {
      const auto& m = *g.mark[e];
      if (m.count(v)) continue;
      bool dependent_present = false;
      for (const auto& w : m)
        if (info.in_depends(v, w)) {
          dependent_present = true;
          break;
        }
      if (!dependent_present) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

struct NuSearch {
  const MarkedGraph& g;
  const BinderInfo& info;
  const std::vector<char>& in_scc;
  std::vector<char> visited;  // per edge, global across the whole search
  std::vector<int> ns;        // node sequence
  std::vector<int> es;        // edge sequence
  std::optional<std::vector<int>> found;

  NuSearch(const MarkedGraph& g_, const BinderInfo& info_, const std::vector<char>& in_scc_)
      : g(g_), info(info_), in_scc(in_scc_), visited(g_.src.size(), 0) {}

  bool run(int v) {
    ns.push_back(v);
    for (int eid : g.out[v]) {
      if (visited[eid] || !in_scc[g.dst[eid]]) continue;
      visited[eid] = 1;
      es.push_back(eid);
      auto pos = std::find(ns.begin(), ns.end(), g.dst[eid]);
      if (pos != ns.end()) {
        std::vector<int> loop(es.begin() + (pos - ns.begin()), es.end());
        if (is_nu_path(g, loop, info)) {
          found = std::move(loop);
          return true;
        }
        es.pop_back();
      } else {
        if (run(g.dst[eid])) return true;
      }
    }
    if (!es.empty()) es.pop_back();  // the edge that led here
    ns.pop_back();
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> scc_nu_search(const MarkedGraph& g, const std::vector<int>& scc_nodes,
                                              const BinderInfo& info) {
  std::vector<char> in_scc(g.node_count, 0);
  for (int v : scc_nodes) in_scc[v] = 1;
  int start = *std::min_element(scc_nodes.begin(), scc_nodes.end());
  NuSearch search(g, info, in_scc);
  search.run(start);
  return search.found;
}

std::optional<std::vector<int>> find_nu_loop(const MarkedGraph& g, const BinderInfo& info) {
  for (const auto& scc : tarjan_scc(g, g.root))
    if (auto loop = scc_nu_search(g, scc, info)) return loop;
  return std::nullopt;
}

std::vector<int> bfs_edge_path(const MarkedGraph& g, int from, int to) {
  if (from == to) return {};
  std::vector<int> via(g.node_count, -1);
  std::deque<int> queue{from};
  std::vector<char> seen(g.node_count, 0);
  seen[from] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int eid : g.out[v]) {
      int w = g.dst[eid];
      if (seen[w]) continue;
      seen[w] = 1;
      via[w] = eid;
      if (w == to) {
        std::vector<int> path;
        for (int u = to; u != from; u = g.src[via[u]]) path.push_back(via[u]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  throw InputError("bfs_edge_path: target unreachable");
}

PruneResult prune_graph(int node_count, const std::vector<std::pair<int, int>>& arcs, int root,
                        bool paper_prune) {
  std::vector<char> node_keep(node_count, 1);
  std::vector<int> outdeg(node_count, 0);
  std::vector<std::vector<int>> in_arcs(node_count), out_arcs(node_count);
  for (size_t i = 0; i < arcs.size(); ++i) {
    ++outdeg[arcs[i].first];
    in_arcs[arcs[i].second].push_back(static_cast<int>(i));
    out_arcs[arcs[i].first].push_back(static_cast<int>(i));
  }

  if (paper_prune) {
    for (int v = 0; v < node_count; ++v)
      if (outdeg[v] == 0) node_keep[v] = 0;
  } else {
    std::deque<int> dead;
    for (int v = 0; v < node_count; ++v)
      if (outdeg[v] == 0) dead.push_back(v);
    while (!dead.empty()) {
      int v = dead.front();
      dead.pop_front();
      if (!node_keep[v]) continue;
      node_keep[v] = 0;
      for (int eid : in_arcs[v]) {
        int u = arcs[eid].first;
        if (node_keep[u] && --outdeg[u] == 0) dead.push_back(u);
      }
    }
    // Root-unreachable nodes cannot lie on any path from the root.
    std::vector<char> reach(node_count, 0);
    if (root >= 0 && node_keep[root]) {
      std::deque<int> queue{root};
      reach[root] = 1;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int eid : out_arcs[v]) {
          int w = arcs[eid].second;
          if (node_keep[w] && !reach[w]) {
            reach[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    for (int v = 0; v < node_count; ++v)
      if (!reach[v]) node_keep[v] = 0;
  }

  PruneResult pr;
  pr.node_map.assign(node_count, -1);
  int next = 0;
  for (int v = 0; v < node_count; ++v)
    if (node_keep[v]) pr.node_map[v] = next++;
  pr.edge_keep.assign(arcs.size(), 1);
  for (size_t i = 0; i < arcs.size(); ++i)
    if (!node_keep[arcs[i].first] || !node_keep[arcs[i].second]) pr.edge_keep[i] = 0;
  return pr;
}

}  // namespace nutl
