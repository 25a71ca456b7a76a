#include "nutl/modelcheck.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace nutl {

ProductGraph build_product(const KripkeStructure& m, const PFG& g) {
  ProductGraph pg;
  if (g.empty()) {
    pg.nodes.push_back(ProductNode{m.init, -1});
    pg.out.emplace_back();
    pg.root = 0;
    return pg;
  }
  std::map<std::pair<int, int>, int> registry;
  auto intern = [&](int state, int node) {
    auto [it, fresh] = registry.emplace(std::pair{state, node}, static_cast<int>(pg.nodes.size()));
    if (fresh) {
      pg.nodes.push_back(ProductNode{state, node});
      pg.out.emplace_back();
    }
    return std::pair{it->second, fresh};
  };
  pg.root = intern(m.init, g.root).first;
  std::deque<int> work{pg.root};
  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    auto [s, n] = std::pair{pg.nodes[id].state, pg.nodes[id].pfg_node};
    for (int s2 : m.succ[s]) {
      for (int eid : g.out[n]) {
        const PfgEdge& e = g.edges[eid];
        if (!label_check(m, s, e.label)) continue;
        auto [dst, fresh] = intern(s2, e.dst);
        if (fresh) work.push_back(dst);
        pg.edges.push_back(ProductEdge{id, e.label, e.mark, dst});
        pg.out[id].push_back(static_cast<int>(pg.edges.size()) - 1);
      }
    }
  }
  return pg;
}

ProductGraph pg_reduction(const ProductGraph& pg, bool paper_prune) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(pg.edges.size());
  for (const auto& e : pg.edges) arcs.emplace_back(e.src, e.dst);
  auto pr = prune_graph(static_cast<int>(pg.nodes.size()), arcs, pg.root, paper_prune);

  ProductGraph out;
  out.root = pg.root >= 0 && pr.node_map[pg.root] >= 0 ? pr.node_map[pg.root] : -1;
  for (size_t i = 0; i < pg.nodes.size(); ++i)
    if (pr.node_map[i] >= 0) out.nodes.push_back(pg.nodes[i]);
  out.out.resize(out.nodes.size());
  for (size_t i = 0; i < pg.edges.size(); ++i) {
    if (!pr.edge_keep[i]) continue;
    ProductEdge e = pg.edges[i];
    e.src = pr.node_map[e.src];
    e.dst = pr.node_map[e.dst];
    out.edges.push_back(std::move(e));
    out.out[out.edges.back().src].push_back(static_cast<int>(out.edges.size()) - 1);
  }
  if (out.root < 0) return ProductGraph{};
  return out;
}

MarkedGraph view_of(const ProductGraph& pg) {
  MarkedGraph v;
  v.node_count = static_cast<int>(pg.nodes.size());
  v.out.resize(v.node_count);
  v.root = pg.root;
  for (const auto& e : pg.edges) v.add_edge(e.src, e.dst, &e.mark);
  return v;
}

std::string StateLasso::text() const {
  std::ostringstream os;
  if (!prefix.empty()) {
    os << "prefix:";
    for (const auto& s : prefix) os << ' ' << s;
    os << " ; ";
  }
  os << "period:";
  for (const auto& s : period) os << ' ' << s;
  return os.str();
}

MCResult solve_mc(const KripkeStructure& m, const Ref& phi, const MCOptions& opts) {
  if (!is_closed(phi)) throw InputError("property is not closed");
  Ref nphi = negate(phi);
  SatOptions sopts{opts.apply_guard_transform, opts.build};
  Ref prepared = prepare_formula(nphi, sopts);
  BinderInfo info = dependencies(prepared);

  MCResult r;
  r.pfg = build_pfg(prepared, info, opts.build);
  r.product = pg_reduction(build_product(m, r.pfg), opts.build.paper_prune);
  if (r.product.empty()) return r;

  MarkedGraph view = view_of(r.product);
  auto loop = find_nu_loop(view, info);
  if (!loop) return r;

  std::vector<int> prefix = bfs_edge_path(view, r.product.root, view.src[loop->front()]);

  StateLasso cex;
  LassoWord word;
  for (int eid : prefix) {
    int s = r.product.nodes[r.product.edges[eid].src].state;
    cex.prefix.push_back(m.states[s]);
    word.prefix.push_back(m.label[s]);
  }
  for (int eid : *loop) {
    int s = r.product.nodes[r.product.edges[eid].src].state;
    cex.period.push_back(m.states[s]);
    word.period.push_back(m.label[s]);
  }
  if (!eval_lasso(nphi, word))
    throw std::logic_error("internal error: counterexample rejected by the evaluator");

  r.verdict.holds = false;
  r.verdict.counterexample = std::move(cex);
  r.witness_edges = *loop;
  r.witness_edges.insert(r.witness_edges.end(), prefix.begin(), prefix.end());
  return r;
}

MCVerdict model_check(const KripkeStructure& m, const Ref& phi, const MCOptions& opts) {
  return solve_mc(m, phi, opts).verdict;
}

std::string dot_export(const ProductGraph& pg, const KripkeStructure& m,
                       const std::vector<int>& highlight_edges) {
  std::set<int> red(highlight_edges.begin(), highlight_edges.end());
  std::ostringstream os;
  os << "digraph Product {\n";
  if (!pg.empty()) {
    os << "  rankdir=LR;\n";
    for (size_t i = 0; i < pg.nodes.size(); ++i) {
      const auto& n = pg.nodes[i];
      os << "  v" << i << " [shape=" << (static_cast<int>(i) == pg.root ? "doublecircle" : "circle")
         << ", label=\"(" << m.states[n.state] << ", "
         << (n.pfg_node < 0 ? std::string("-") : "n" + std::to_string(n.pfg_node)) << ")\"];\n";
    }
    for (size_t i = 0; i < pg.edges.size(); ++i) {
      const auto& e = pg.edges[i];
      os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label.text();
      if (!e.mark.empty()) {
        os << " / {";
        bool first = true;
        for (const auto& v : e.mark) {
          if (!first) os << ' ';
          os << v;
          first = false;
        }
        os << "}";
      }
      os << "\"";
      if (red.count(static_cast<int>(i))) os << ", color=red, fontcolor=red";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace nutl
