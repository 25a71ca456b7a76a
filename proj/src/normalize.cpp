#include "nutl/normalize.hpp"

#include <algorithm>
#include <functional>

namespace nutl {

Ref negate(const Ref& f) {
  switch (f->kind) {
    case Kind::True: return f_false();
    case Kind::False: return f_true();
    case Kind::Lit: return lit(f->name, !f->positive);
    case Kind::Var: return f;  // dualized binder re-binds it positively
    case Kind::Or: return f_and(negate(f->lhs), negate(f->rhs));
    case Kind::And: return f_or(negate(f->lhs), negate(f->rhs));
    case Kind::Next: return next(negate(f->lhs));
    case Kind::Mu: return nu(f->name, negate(f->lhs));
    case Kind::Nu: return mu(f->name, negate(f->lhs));
  }
  return f;
}

Ref substitute(const Ref& phi, const std::string& x, const Ref& psi) {
  switch (phi->kind) {
    case Kind::True:
    case Kind::False:
    case Kind::Lit: return phi;
    case Kind::Var: return phi->name == x ? psi : phi;
    case Kind::Or: {
      Ref a = substitute(phi->lhs, x, psi);
      Ref b = substitute(phi->rhs, x, psi);
      return a == phi->lhs && b == phi->rhs ? phi : f_or(a, b);
    }
    case Kind::And: {
      Ref a = substitute(phi->lhs, x, psi);
      Ref b = substitute(phi->rhs, x, psi);
      return a == phi->lhs && b == phi->rhs ? phi : f_and(a, b);
    }
    case Kind::Next: {
      Ref a = substitute(phi->lhs, x, psi);
      return a == phi->lhs ? phi : next(a);
    }
    case Kind::Mu:
    case Kind::Nu: {
      if (phi->name == x) return phi;  // shadowed
      Ref body = substitute(phi->lhs, x, psi);
      return body == phi->lhs ? phi : binder(phi->kind, phi->name, body);
    }
  }
  return phi;
}

Ref unfold(const Ref& fix) {
  if (!is_fixpoint(fix)) throw InputError("unfold applied to a non-fixpoint formula");
  return substitute(fix->lhs, fix->name, fix);
}

Ref push_next(const Ref& f) {
  switch (f->kind) {
    case Kind::Or: return f_or(push_next(f->lhs), push_next(f->rhs));
    case Kind::And: return f_and(push_next(f->lhs), push_next(f->rhs));
    case Kind::Next: {
      Ref c = push_next(f->lhs);
      if (c->kind == Kind::Or) return f_or(push_next(next(c->lhs)), push_next(next(c->rhs)));
      return next(c);
    }
    case Kind::Mu:
    case Kind::Nu: return binder(f->kind, f->name, push_next(f->lhs));
    default: return f;
  }
}

namespace {

// `open` holds binders whose path so far has no (); a () guards everything
// entered above it.
bool guarded_rec(const Ref& f, std::set<std::string>& open) {
  switch (f->kind) {
    case Kind::Var: return !open.count(f->name);
    case Kind::Next: {
      std::set<std::string> none;
      return guarded_rec(f->lhs, none);
    }
    case Kind::Mu:
    case Kind::Nu: {
      bool fresh = open.insert(f->name).second;
      bool ok = guarded_rec(f->lhs, open);
      if (fresh) open.erase(f->name);
      return ok;
    }
    default:
      if (f->lhs && !guarded_rec(f->lhs, open)) return false;
      if (f->rhs && !guarded_rec(f->rhs, open)) return false;
      return true;
  }
}

}  // namespace

bool is_guarded(const Ref& f) {
  std::set<std::string> open;
  return guarded_rec(f, open);
}

namespace {

struct GuardCtx {
  long budget;
  int fresh_counter = 0;
  std::set<std::string> avoid;

  void spend(long n) {
    budget -= n;
    if (budget < 0) throw BudgetError("transformation budget exceeded in guard transformation");
  }
  std::string fresh() {
    std::string n;
    do {
      n = "X" + std::to_string(fresh_counter++);
    } while (avoid.count(n));
    avoid.insert(n);
    return n;
  }
};

// Occurrence of Var(x) not below any () within f.
bool has_open_var(const Ref& f, const std::string& x) {
  switch (f->kind) {
    case Kind::Var: return f->name == x;
    case Kind::Next: return false;
    case Kind::Mu:
    case Kind::Nu: return f->name != x && has_open_var(f->lhs, x);
    default:
      return (f->lhs && has_open_var(f->lhs, x)) || (f->rhs && has_open_var(f->rhs, x));
  }
}

Ref freshen_binders(const Ref& f, std::map<std::string, std::string>& env, GuardCtx& ctx) {
  switch (f->kind) {
    case Kind::True:
    case Kind::False:
    case Kind::Lit: return f;
    case Kind::Var: {
      auto it = env.find(f->name);
      return it == env.end() ? f : var(it->second);
    }
    case Kind::Or: return f_or(freshen_binders(f->lhs, env, ctx), freshen_binders(f->rhs, env, ctx));
    case Kind::And: return f_and(freshen_binders(f->lhs, env, ctx), freshen_binders(f->rhs, env, ctx));
    case Kind::Next: return next(freshen_binders(f->lhs, env, ctx));
    case Kind::Mu:
    case Kind::Nu: {
      std::string nn = ctx.fresh();
      auto it = env.find(f->name);
      std::string saved;
      bool had = it != env.end();
      if (had) saved = it->second;
      env[f->name] = nn;
      Ref body = freshen_binders(f->lhs, env, ctx);
      if (had)
        env[f->name] = saved;
      else
        env.erase(f->name);
      return binder(f->kind, nn, body);
    }
  }
  return f;
}

// body[fix/Y] with the binders of every inserted copy renamed fresh, so the
// rewrite never creates duplicate binder names.
Ref unfold_freshened(const Ref& fix, GuardCtx& ctx) {
  ctx.spend(fix->size);
  std::function<Ref(const Ref&)> sub = [&](const Ref& t) -> Ref {
    switch (t->kind) {
      case Kind::Var:
        if (t->name == fix->name) {
          std::map<std::string, std::string> env;
          return freshen_binders(fix, env, ctx);
        }
        return t;
      case Kind::Or: return f_or(sub(t->lhs), sub(t->rhs));
      case Kind::And: return f_and(sub(t->lhs), sub(t->rhs));
      case Kind::Next: return next(sub(t->lhs));
      case Kind::Mu:
      case Kind::Nu:
        return t->name == fix->name ? t : binder(t->kind, t->name, sub(t->lhs));
      default: return t;
    }
  };
  return sub(fix->lhs);
}

// Unfolds, in place, every nested binder of t that still hides an un-guarded
// occurrence of x. Subtrees below () are already safe.
Ref lift_open_occurrences(const Ref& t, const std::string& x, GuardCtx& ctx) {
  switch (t->kind) {
    case Kind::Next:
    case Kind::True:
    case Kind::False:
    case Kind::Lit:
    case Kind::Var: return t;
    case Kind::Or: return f_or(lift_open_occurrences(t->lhs, x, ctx), lift_open_occurrences(t->rhs, x, ctx));
    case Kind::And: return f_and(lift_open_occurrences(t->lhs, x, ctx), lift_open_occurrences(t->rhs, x, ctx));
    case Kind::Mu:
    case Kind::Nu:
      if (has_open_var(t->lhs, x)) {
        ctx.spend(t->size);
        return lift_open_occurrences(unfold_freshened(t, ctx), x, ctx);
      }
      return t;
  }
  return t;
}

struct ExposedDisjunct {
  bool has_var = false;
  std::vector<Ref> rest;  // conjuncts without the Var(x) atoms
};

// Minimal DNF of t over the un-guarded occurrences of x: subterms without an
// open x stay atomic.
void expose(const Ref& t, const std::string& x, std::vector<ExposedDisjunct>& out) {
  if (t->kind == Kind::Var && t->name == x) {
    out.push_back({true, {}});
    return;
  }
  if (!has_open_var(t, x)) {
    out.push_back({false, {t}});
    return;
  }
  if (t->kind == Kind::Or) {
    expose(t->lhs, x, out);
    expose(t->rhs, x, out);
    return;
  }
  if (t->kind == Kind::And) {
    std::vector<ExposedDisjunct> ls, rs;
    expose(t->lhs, x, ls);
    expose(t->rhs, x, rs);
    for (const auto& l : ls)
      for (const auto& r : rs) {
        ExposedDisjunct d;
        d.has_var = l.has_var || r.has_var;
        d.rest = l.rest;
        d.rest.insert(d.rest.end(), r.rest.begin(), r.rest.end());
        out.push_back(std::move(d));
      }
    return;
  }
  throw InputError("guard transformation: unexpected open occurrence shape");
}

Ref conj_of(const std::vector<Ref>& parts) {
  Ref acc = f_true();
  for (const auto& p : parts) acc = f_and(acc, p);
  return acc;
}

// Applies nu X.(X /\ a \/ b) == nu X.(a \/ b) and the mu duals
// mu X.(X \/ b) == mu X.(b), mu X.(X /\ a \/ b) == mu X.(b).
Ref fix_binder(Kind k, const std::string& x, Ref body, GuardCtx& ctx) {
  body = lift_open_occurrences(body, x, ctx);
  if (!has_open_var(body, x)) return binder(k, x, body);
  std::vector<ExposedDisjunct> ds;
  expose(body, x, ds);
  Ref acc = f_false();
  for (const auto& d : ds) {
    if (d.has_var && k == Kind::Mu) continue;
    acc = f_or(acc, conj_of(d.rest));
    ctx.spend(1);
  }
  return binder(k, x, acc);
}

Ref guard_pass(const Ref& f, GuardCtx& ctx, bool& changed) {
  switch (f->kind) {
    case Kind::Or: return f_or(guard_pass(f->lhs, ctx, changed), guard_pass(f->rhs, ctx, changed));
    case Kind::And: return f_and(guard_pass(f->lhs, ctx, changed), guard_pass(f->rhs, ctx, changed));
    case Kind::Next: return next(guard_pass(f->lhs, ctx, changed));
    case Kind::Mu:
    case Kind::Nu: {
      Ref body = guard_pass(f->lhs, ctx, changed);  // innermost first
      if (has_open_var(body, f->name)) {
        changed = true;
        return fix_binder(f->kind, f->name, body, ctx);
      }
      return binder(f->kind, f->name, body);
    }
    default: return f;
  }
}

}  // namespace

Ref guard_transform(const Ref& f, long node_budget) {
  if (is_guarded(f)) return f;
  GuardCtx ctx{node_budget};
  for (const auto& n : binder_names(f)) ctx.avoid.insert(n);
  for (const auto& p : propositions(f)) ctx.avoid.insert(p);
  Ref cur = f;
  while (!is_guarded(cur)) {
    bool changed = false;
    cur = guard_pass(cur, ctx, changed);
    if (!changed) throw InputError("guard transformation made no progress");
    ctx.spend(1);
  }
  return rename_canonical(cur);
}

std::vector<Ref> closure(const Ref& phi) {
  std::set<Ref, FormulaLess> seen;
  std::vector<Ref> work{phi, f_true()};
  for (const auto& w : work) seen.insert(w);
  while (!work.empty()) {
    Ref f = work.back();
    work.pop_back();
    auto add = [&](const Ref& g) {
      if (seen.insert(g).second) work.push_back(g);
    };
    switch (f->kind) {
      case Kind::Or:
      case Kind::And:
        add(f->lhs);
        add(f->rhs);
        break;
      case Kind::Next: add(f->lhs); break;
      case Kind::Mu:
      case Kind::Nu: add(unfold(f)); break;
      default: break;
    }
  }
  return {seen.begin(), seen.end()};
}

BinderInfo dependencies(const Ref& phi) {
  BinderInfo info;
  std::vector<std::string> stack;
  std::function<void(const Ref&)> walk = [&](const Ref& f) {
    switch (f->kind) {
      case Kind::Var: {
        auto it = std::find(stack.begin(), stack.end(), f->name);
        if (it != stack.end())
          for (auto jt = it + 1; jt != stack.end(); ++jt) info.depends.insert({f->name, *jt});
        return;
      }
      case Kind::Mu:
      case Kind::Nu: {
        info.kind[f->name] = f->kind;
        for (const auto& outer : stack) info.higher.insert({outer, f->name});
        stack.push_back(f->name);
        walk(f->lhs);
        stack.pop_back();
        return;
      }
      default:
        if (f->lhs) walk(f->lhs);
        if (f->rhs) walk(f->rhs);
    }
  };
  walk(phi);

  // The relation is transitive; close it.
  std::vector<std::string> vars;
  for (const auto& [v, k] : info.kind) vars.push_back(v);
  for (const auto& m : vars)
    for (const auto& a : vars)
      for (const auto& b : vars)
        if (info.depends.count({a, m}) && info.depends.count({m, b})) info.depends.insert({a, b});
  return info;
}

}  // namespace nutl
