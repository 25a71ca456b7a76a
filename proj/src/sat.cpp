#include "nutl/sat.hpp"

namespace nutl {

Ref prepare_formula(const Ref& phi, const SatOptions& opts) {
  if (!is_closed(phi)) throw InputError("formula is not closed");
  Ref f = phi;
  if (!is_guarded(f)) {
    if (!opts.apply_guard_transform)
      throw InputError("formula is not guarded (enable the guard transformation)");
    f = guard_transform(f);
  }
  return push_next(f);
}

MarkedGraph view_of(const PFG& g) {
  MarkedGraph v;
  v.node_count = static_cast<int>(g.nodes.size());
  v.out.resize(v.node_count);
  v.root = g.root;
  for (const auto& e : g.edges) v.add_edge(e.src, e.dst, &e.mark);
  return v;
}

LassoWord extract_lasso(const LoopWitness& w, const PFG& g) {
  LassoWord lw;
  for (int eid : w.prefix_edges) lw.prefix.push_back(g.edges[eid].label.atom());
  for (int eid : w.loop_edges) lw.period.push_back(g.edges[eid].label.atom());
  return lw;
}

SatResult solve_sat(const Ref& phi, const SatOptions& opts) {
  SatResult r;
  r.normalized = prepare_formula(phi, opts);
  BinderInfo info = dependencies(r.normalized);
  r.pfg = build_pfg(r.normalized, info, opts.build);
  if (r.pfg.empty()) return r;  // no nu-path in an empty PFG

  MarkedGraph view = view_of(r.pfg);
  auto loop = find_nu_loop(view, info);
  if (!loop) return r;

  LoopWitness w;
  w.loop_edges = *loop;
  w.prefix_edges = bfs_edge_path(view, r.pfg.root, view.src[w.loop_edges.front()]);
  LassoWord lasso = extract_lasso(w, r.pfg);
  if (!eval_lasso(phi, lasso))
    throw std::logic_error("internal error: witness lasso rejected by the evaluator");
  r.verdict.satisfiable = true;
  r.verdict.witness = std::move(w);
  r.verdict.lasso = std::move(lasso);
  return r;
}

Verdict check_sat(const Ref& phi, const SatOptions& opts) { return solve_sat(phi, opts).verdict; }

}  // namespace nutl
