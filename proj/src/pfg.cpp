#include "nutl/pfg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

#include "nutl/search.hpp"

namespace nutl {

namespace {

std::vector<Ref> canon_node_set(std::vector<Ref> fs) {
  std::sort(fs.begin(), fs.end(), [](const Ref& a, const Ref& b) { return compare(a, b) < 0; });
  std::vector<Ref> out;
  for (auto& f : fs) {
    if (f->kind == Kind::True) continue;
    if (f->kind == Kind::False) return {f_false()};
    if (out.empty() || !equal(out.back(), f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Ref> root_set(const Ref& phi) {
  std::vector<Ref> parts;
  std::function<void(const Ref&)> split = [&](const Ref& f) {
    if (f->kind == Kind::And) {
      split(f->lhs);
      split(f->rhs);
    } else {
      parts.push_back(f);
    }
  };
  split(phi);
  return canon_node_set(std::move(parts));
}

struct VecLess {
  bool operator()(const std::vector<Ref>& a, const std::vector<Ref>& b) const {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](const Ref& x, const Ref& y) { return compare(x, y) < 0; });
  }
};

}  // namespace

PFG build_pfg(const Ref& phi, const BinderInfo& info, const BuildOptions& opts) {
  PFG g;
  std::map<std::vector<Ref>, int, VecLess> registry;
  std::map<Ref, PFForm, FormulaLess> member_pf;  // each closure member transformed once

  auto intern = [&](std::vector<Ref> fs) {
    auto it = registry.find(fs);
    if (it != registry.end()) return std::pair{it->second, false};
    int id = static_cast<int>(g.nodes.size());
    if (id + 1 > opts.node_budget) throw BudgetError("PFG node budget exceeded");
    registry.emplace(fs, id);
    g.nodes.push_back(PfgNode{std::move(fs)});
    g.out.emplace_back();
    return std::pair{id, true};
  };

  g.root = intern(root_set(phi)).first;
  std::deque<int> work;
  if (!g.nodes[g.root].is_false_node()) work.push_back(g.root);

  while (!work.empty()) {
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
      throw TimeoutError("PFG construction timed out");
    int id = work.front();
    work.pop_front();

    PFForm pf;
    pf.disjuncts.push_back(PFDisjunct{PresentPart{}, {}});  // unit: true /\ ()true
    for (const Ref& c : g.nodes[id].conjuncts) {
      auto it = member_pf.find(c);
      if (it == member_pf.end()) it = member_pf.emplace(c, pf_tran(c, info)).first;
      pf = pf_and(pf, it->second);
    }

    std::map<std::pair<int, std::string>, int> merged;  // (dst, label) -> edge id
    for (const auto& d : pf.disjuncts) {
      if (d.present.contradictory) continue;
      std::vector<Ref> fs;
      fs.reserve(d.future.size());
      for (const auto& fc : d.future) fs.push_back(fc.formula);
      auto [dst, fresh] = intern(std::move(fs));
      if (fresh && !g.nodes[dst].is_false_node()) work.push_back(dst);
      auto mark = mark_of(d);
      auto key = std::pair{dst, d.present.text()};
      auto mit = merged.find(key);
      if (mit == merged.end()) {
        g.edges.push_back(PfgEdge{id, d.present, std::move(mark), dst});
        g.out[id].push_back(static_cast<int>(g.edges.size()) - 1);
        merged.emplace(key, static_cast<int>(g.edges.size()) - 1);
      } else {
        g.edges[mit->second].mark.insert(mark.begin(), mark.end());
      }
    }
  }

  // Dead-node elimination.
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(g.edges.size());
  for (const auto& e : g.edges) arcs.emplace_back(e.src, e.dst);
  auto pr = prune_graph(static_cast<int>(g.nodes.size()), arcs, g.root, opts.paper_prune);

  PFG out;
  out.root = g.root >= 0 && pr.node_map[g.root] >= 0 ? pr.node_map[g.root] : -1;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    if (pr.node_map[i] >= 0) out.nodes.push_back(std::move(g.nodes[i]));
  out.out.resize(out.nodes.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (!pr.edge_keep[i]) continue;
    PfgEdge e = std::move(g.edges[i]);
    e.src = pr.node_map[e.src];
    e.dst = pr.node_map[e.dst];
    out.edges.push_back(std::move(e));
    out.out[out.edges.back().src].push_back(static_cast<int>(out.edges.size()) - 1);
  }
  if (out.root < 0) return PFG{};  // root pruned away: the PFG is empty
  return out;
}

std::string node_text(const PfgNode& n) {
  if (n.conjuncts.empty()) return "true";
  std::string out;
  for (size_t i = 0; i < n.conjuncts.size(); ++i) {
    if (i) out += " ; ";
    out += to_text(n.conjuncts[i]);
  }
  return out;
}

namespace {

std::string mark_text(const std::set<std::string>& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : m) {
    if (!first) out += ' ';
    out += v;
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string dump_text(const PFG& g) {
  std::ostringstream os;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    os << "node " << i << " = " << node_text(g.nodes[i]) << "\n";
  for (const auto& e : g.edges)
    os << e.src << " -> " << e.dst << " : " << e.label.text() << " : " << mark_text(e.mark) << "\n";
  return os.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string dot_export(const PFG& g, const std::vector<int>& highlight_edges) {
  std::set<int> red(highlight_edges.begin(), highlight_edges.end());
  std::ostringstream os;
  os << "digraph PFG {\n";
  if (!g.empty()) {
    os << "  rankdir=LR;\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
      os << "  n" << i << " [shape=" << (static_cast<int>(i) == g.root ? "doublecircle" : "circle")
         << ", label=\"n" << i << "\", tooltip=\"" << dot_escape(node_text(g.nodes[i])) << "\"];\n";
    }
    for (size_t i = 0; i < g.edges.size(); ++i) {
      const auto& e = g.edges[i];
      os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << dot_escape(e.label.text());
      if (!e.mark.empty()) os << " / " << dot_escape(mark_text(e.mark));
      os << "\"";
      if (red.count(static_cast<int>(i))) os << ", color=red, fontcolor=red";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace nutl
