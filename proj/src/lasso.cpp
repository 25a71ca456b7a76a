#include "nutl/lasso.hpp"

#include <cctype>
#include <sstream>

namespace nutl {

namespace {

PosSet eval_rec(const Ref& f, const LassoWord& w, std::map<std::string, PosSet>& env) {
  const int n = w.positions();
  switch (f->kind) {
    case Kind::True: return PosSet::full(n);
    case Kind::False: return PosSet(n);
    case Kind::Lit: {
      PosSet m(n);
      for (int i = 0; i < n; ++i)
        if ((w.at(i).count(f->name) != 0) == f->positive) m.set(i);
      return m;
    }
    case Kind::Var: {
      auto it = env.find(f->name);
      if (it == env.end()) throw InputError("evaluation of open formula: free variable " + f->name);
      return it->second;
    }
    case Kind::Or: return eval_rec(f->lhs, w, env) | eval_rec(f->rhs, w, env);
    case Kind::And: return eval_rec(f->lhs, w, env) & eval_rec(f->rhs, w, env);
    case Kind::Next: {
      PosSet body = eval_rec(f->lhs, w, env);
      PosSet m(n);
      for (int i = 0; i < n; ++i) {
        int succ = i + 1 < n ? i + 1 : static_cast<int>(w.prefix.size());
        if (body.test(succ)) m.set(i);
      }
      return m;
    }
    case Kind::Mu:
    case Kind::Nu: {
      PosSet cur = f->kind == Kind::Mu ? PosSet(n) : PosSet::full(n);
      for (;;) {
        auto saved = env.find(f->name);
        PosSet old;
        bool had = saved != env.end();
        if (had) old = saved->second;
        env[f->name] = cur;
        PosSet nxt = eval_rec(f->lhs, w, env);
        if (had)
          env[f->name] = old;
        else
          env.erase(f->name);
        if (nxt == cur) return cur;
        cur = nxt;
      }
    }
  }
  return PosSet(n);
}

}  // namespace

PosSet eval_positions(const Ref& f, const LassoWord& w, std::map<std::string, PosSet> env) {
  if (w.period.empty()) throw InputError("lasso period must be nonempty");
  return eval_rec(f, w, env);
}

bool eval_lasso(const Ref& f, const LassoWord& w) { return eval_positions(f, w).test(0); }

namespace {

std::vector<std::set<std::string>> parse_sets(const std::string& part, const char* what) {
  std::vector<std::set<std::string>> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < part.size() && std::isspace(static_cast<unsigned char>(part[i]))) ++i;
  };
  skip_ws();
  while (i < part.size()) {
    if (part[i] != '{') throw InputError(std::string("expected '{' in lasso ") + what);
    ++i;
    std::set<std::string> s;
    std::string name;
    while (i < part.size() && part[i] != '}') {
      char c = part[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!name.empty()) {
          s.insert(name);
          name.clear();
        }
      } else {
        name += c;
      }
      ++i;
    }
    if (i >= part.size()) throw InputError("unterminated '{' in lasso");
    if (!name.empty()) s.insert(name);
    ++i;
    out.push_back(std::move(s));
    skip_ws();
  }
  return out;
}

}  // namespace

LassoWord parse_lasso(const std::string& text) {
  std::string prefix_part, period_part;
  size_t semi = text.find(';');
  std::string head = semi == std::string::npos ? text : text.substr(0, semi);
  std::string tail = semi == std::string::npos ? "" : text.substr(semi + 1);
  auto strip_tag = [](const std::string& s, const std::string& tag) {
    size_t p = s.find(tag);
    if (p == std::string::npos) return std::pair{false, s};
    return std::pair{true, s.substr(p + tag.size())};
  };
  if (auto [is_period, rest] = strip_tag(head, "period:"); is_period) {
    if (semi != std::string::npos) throw InputError("lasso: text after the period part");
    period_part = rest;
  } else {
    auto [has_prefix, pre] = strip_tag(head, "prefix:");
    if (!has_prefix) throw InputError("lasso must contain a 'period:' part");
    prefix_part = pre;
    auto [has_period, per] = strip_tag(tail, "period:");
    if (!has_period) throw InputError("lasso must contain a 'period:' part");
    period_part = per;
  }
  LassoWord w;
  w.prefix = parse_sets(prefix_part, "prefix");
  w.period = parse_sets(period_part, "period");
  if (w.period.empty()) throw InputError("lasso period must be nonempty");
  return w;
}

std::string format_lasso(const LassoWord& w) {
  std::ostringstream os;
  auto put = [&](const std::vector<std::set<std::string>>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) os << ' ';
      os << '{';
      bool first = true;
      for (const auto& p : v[i]) {
        if (!first) os << ' ';
        os << p;
        first = false;
      }
      os << '}';
    }
  };
  if (!w.prefix.empty()) {
    os << "prefix: ";
    put(w.prefix);
    os << " ; ";
  }
  os << "period: ";
  put(w.period);
  return os.str();
}

void enumerate_lassos(const std::vector<std::string>& props, int max_prefix, int max_period,
                      const std::function<bool(const LassoWord&)>& visit) {
  const int np = static_cast<int>(props.size());
  const uint64_t alphabet = 1ull << np;
  auto set_of = [&](uint64_t bits) {
    std::set<std::string> s;
    for (int i = 0; i < np; ++i)
      if (bits & (1ull << i)) s.insert(props[i]);
    return s;
  };
  for (int pl = 0; pl <= max_prefix; ++pl) {
    for (int pe = 1; pe <= max_period; ++pe) {
      int total = pl + pe;
      uint64_t combos = 1;
      for (int i = 0; i < total; ++i) combos *= alphabet;
      for (uint64_t c = 0; c < combos; ++c) {
        LassoWord w;
        uint64_t rest = c;
        for (int i = 0; i < pl; ++i) {
          w.prefix.push_back(set_of(rest % alphabet));
          rest /= alphabet;
        }
        for (int i = 0; i < pe; ++i) {
          w.period.push_back(set_of(rest % alphabet));
          rest /= alphabet;
        }
        if (!visit(w)) return;
      }
    }
  }
}

}  // namespace nutl
