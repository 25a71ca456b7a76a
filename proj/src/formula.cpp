#include "nutl/formula.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace nutl {

namespace {

size_t mix(size_t h, size_t v) {
  // boost::hash_combine flavor
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

Ref make(Kind k, std::string name, bool positive, Ref lhs, Ref rhs) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->name = std::move(name);
  f->positive = positive;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  size_t h = static_cast<size_t>(k) * 0x9e3779b1u;
  h = mix(h, std::hash<std::string>{}(f->name));
  h = mix(h, f->positive ? 1u : 2u);
  int sz = 1;
  if (f->lhs) {
    h = mix(h, f->lhs->hash);
    sz += f->lhs->size;
  }
  if (f->rhs) {
    h = mix(h, f->rhs->hash);
    sz += f->rhs->size;
  }
  f->hash = h;
  f->size = sz;
  return f;
}

}  // namespace

Ref f_true() {
  static const Ref t = make(Kind::True, "", true, nullptr, nullptr);
  return t;
}

Ref f_false() {
  static const Ref f = make(Kind::False, "", true, nullptr, nullptr);
  return f;
}

Ref lit(std::string prop, bool positive) {
  return make(Kind::Lit, std::move(prop), positive, nullptr, nullptr);
}

Ref var(std::string name) { return make(Kind::Var, std::move(name), true, nullptr, nullptr); }

Ref f_or(Ref a, Ref b) {
  if (a->kind == Kind::True || b->kind == Kind::True) return f_true();
  if (a->kind == Kind::False) return b;
  if (b->kind == Kind::False) return a;
  return make(Kind::Or, "", true, std::move(a), std::move(b));
}

Ref f_and(Ref a, Ref b) {
  if (a->kind == Kind::False || b->kind == Kind::False) return f_false();
  if (a->kind == Kind::True) return b;
  if (b->kind == Kind::True) return a;
  return make(Kind::And, "", true, std::move(a), std::move(b));
}

Ref next(Ref a) { return make(Kind::Next, "", true, std::move(a), nullptr); }

Ref mu(std::string v, Ref body) { return make(Kind::Mu, std::move(v), true, std::move(body), nullptr); }

Ref nu(std::string v, Ref body) { return make(Kind::Nu, std::move(v), true, std::move(body), nullptr); }

Ref binder(Kind k, std::string v, Ref body) {
  return k == Kind::Mu ? mu(std::move(v), std::move(body)) : nu(std::move(v), std::move(body));
}

int compare(const Ref& a, const Ref& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  if (a->positive != b->positive) return a->positive ? -1 : 1;
  for (auto sel : {&Formula::lhs, &Formula::rhs}) {
    const Ref& ca = (*a).*sel;
    const Ref& cb = (*b).*sel;
    if (!ca || !cb) {
      if (ca != cb) return ca ? 1 : -1;
      continue;
    }
    if (int c = compare(ca, cb)) return c;
  }
  return 0;
}

bool equal(const Ref& a, const Ref& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->size != b->size) return false;
  return compare(a, b) == 0;
}

namespace {

// Precedence used by the printer (loosest = 0): binders 0, \/ 1, /\ 2,
// prefix ! and () 3, atoms 4.
int prec(const Ref& f) {
  switch (f->kind) {
    case Kind::Mu:
    case Kind::Nu: return 0;
    case Kind::Or: return 1;
    case Kind::And: return 2;
    case Kind::Next: return 3;
    default: return 4;
  }
}

void print(const Ref& f, int min_prec, std::string& out) {
  bool paren = prec(f) < min_prec;
  if (paren) out += "(";
  switch (f->kind) {
    case Kind::True: out += "true"; break;
    case Kind::False: out += "false"; break;
    case Kind::Lit:
      if (!f->positive) out += "!";
      out += f->name;
      break;
    case Kind::Var: out += f->name; break;
    case Kind::Or:
      print(f->lhs, 1, out);
      out += " \\/ ";
      print(f->rhs, 2, out);
      break;
    case Kind::And:
      print(f->lhs, 2, out);
      out += " /\\ ";
      print(f->rhs, 3, out);
      break;
    case Kind::Next:
      out += "()";
      print(f->lhs, 3, out);
      break;
    case Kind::Mu:
    case Kind::Nu:
      out += f->kind == Kind::Mu ? "mu " : "nu ";
      out += f->name;
      out += " . ";
      print(f->lhs, 0, out);
      break;
  }
  if (paren) out += ")";
}

}  // namespace

std::string to_text(const Ref& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

bool is_fixpoint(const Ref& f) { return f->kind == Kind::Mu || f->kind == Kind::Nu; }

namespace {

void collect_free(const Ref& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f->kind) {
    case Kind::Var:
      if (!bound.count(f->name)) out.insert(f->name);
      return;
    case Kind::Mu:
    case Kind::Nu: {
      bool fresh = bound.insert(f->name).second;
      collect_free(f->lhs, bound, out);
      if (fresh) bound.erase(f->name);
      return;
    }
    default:
      if (f->lhs) collect_free(f->lhs, bound, out);
      if (f->rhs) collect_free(f->rhs, bound, out);
  }
}

}  // namespace

std::set<std::string> free_vars(const Ref& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool is_closed(const Ref& f) { return free_vars(f).empty(); }

std::set<std::string> propositions(const Ref& f) {
  std::set<std::string> out;
  std::function<void(const Ref&)> walk = [&](const Ref& g) {
    if (g->kind == Kind::Lit) out.insert(g->name);
    if (g->lhs) walk(g->lhs);
    if (g->rhs) walk(g->rhs);
  };
  walk(f);
  return out;
}

std::vector<std::string> binder_names(const Ref& f) {
  std::vector<std::string> out;
  std::function<void(const Ref&)> walk = [&](const Ref& g) {
    if (is_fixpoint(g)) out.push_back(g->name);
    if (g->lhs) walk(g->lhs);
    if (g->rhs) walk(g->rhs);
  };
  walk(f);
  return out;
}

namespace {

Ref rename_rec(const Ref& f, std::map<std::string, std::string>& env,
               const std::set<std::string>& avoid, int& counter) {
  switch (f->kind) {
    case Kind::True:
    case Kind::False:
    case Kind::Lit: return f;
    case Kind::Var: {
      auto it = env.find(f->name);
      return it == env.end() ? f : var(it->second);
    }
    case Kind::Or: {
      Ref a = rename_rec(f->lhs, env, avoid, counter);
      Ref b = rename_rec(f->rhs, env, avoid, counter);
      return f_or(a, b);
    }
    case Kind::And: {
      Ref a = rename_rec(f->lhs, env, avoid, counter);
      Ref b = rename_rec(f->rhs, env, avoid, counter);
      return f_and(a, b);
    }
    case Kind::Next: return next(rename_rec(f->lhs, env, avoid, counter));
    case Kind::Mu:
    case Kind::Nu: {
      std::string fresh;
      do {
        fresh = "X" + std::to_string(counter++);
      } while (avoid.count(fresh));
      auto it = env.find(f->name);
      std::string saved;
      bool had = it != env.end();
      if (had) saved = it->second;
      env[f->name] = fresh;
      Ref body = rename_rec(f->lhs, env, avoid, counter);
      if (had)
        env[f->name] = saved;
      else
        env.erase(f->name);
      return binder(f->kind, fresh, body);
    }
  }
  return f;  // unreachable
}

}  // namespace

Ref rename_canonical(const Ref& f) {
  std::map<std::string, std::string> env;
  std::set<std::string> avoid = propositions(f);
  int counter = 0;
  return rename_rec(f, env, avoid, counter);
}

}  // namespace nutl
