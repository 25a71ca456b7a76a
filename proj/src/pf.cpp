#include "nutl/pf.hpp"

#include <algorithm>
#include <sstream>

namespace nutl {

PresentPart normalize_present(std::vector<std::pair<std::string, bool>> lits) {
  std::sort(lits.begin(), lits.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  PresentPart p;
  for (size_t i = 0; i < lits.size(); ++i) {
    if (i + 1 < lits.size() && lits[i].first == lits[i + 1].first) {
      p.contradictory = true;
      return p;
    }
  }
  p.lits = std::move(lits);
  return p;
}

std::string PresentPart::text() const {
  if (contradictory) return "false";
  if (lits.empty()) return "true";
  std::string out;
  for (size_t i = 0; i < lits.size(); ++i) {
    if (i) out += " /\\ ";
    if (!lits[i].second) out += "!";
    out += lits[i].first;
  }
  return out;
}

std::set<std::string> PresentPart::atom() const {
  std::set<std::string> s;
  for (const auto& [p, pos] : lits)
    if (pos) s.insert(p);
  return s;
}

namespace {

// Canonical future part: sorted, `true` elided, duplicates merged with the
// mark winning (suppress = and of the bits), `false` absorbing.
std::vector<FutureConjunct> canon_future(std::vector<FutureConjunct> cs) {
  std::sort(cs.begin(), cs.end(),
            [](const FutureConjunct& a, const FutureConjunct& b) { return compare(a.formula, b.formula) < 0; });
  std::vector<FutureConjunct> out;
  for (auto& c : cs) {
    if (c.formula->kind == Kind::True) continue;
    if (c.formula->kind == Kind::False) return {FutureConjunct{f_false(), false}};
    if (!out.empty() && equal(out.back().formula, c.formula))
      out.back().suppress_mark = out.back().suppress_mark && c.suppress_mark;
    else
      out.push_back(std::move(c));
  }
  return out;
}

// The last unfolding event covering the current region of the term: the
// suppress bit of a surfacing fixpoint conjunct of variable W is 1 exactly
// when that event was a nu unfolding of a strictly higher binder.
struct Event {
  bool active = false;
  bool is_nu = false;
  std::string binder;
};

struct PfCtx {
  const BinderInfo& info;
  long unfolds_left;
};

void flatten_and(const Ref& f, std::vector<Ref>& out) {
  if (f->kind == Kind::And) {
    flatten_and(f->lhs, out);
    flatten_and(f->rhs, out);
  } else {
    out.push_back(f);
  }
}

PFForm pf_rec(const Ref& f, const Event& ev, PfCtx& ctx);

PFForm pf_next(const Ref& body, PresentPart present, const Event& ev, PfCtx& ctx) {
  std::vector<Ref> parts;
  flatten_and(body, parts);
  std::vector<FutureConjunct> future;
  for (const auto& p : parts) {
    const Formula* core = p.get();
    while (core->kind == Kind::Next) core = core->lhs.get();
    if (core->kind == Kind::Or)
      throw InputError("pf_tran: \\/ directly under a () operator; apply push_next first");
    bool suppress = false;
    if ((core->kind == Kind::Mu || core->kind == Kind::Nu) && ev.active && ev.is_nu)
      suppress = ctx.info.is_higher(ev.binder, core->name);
    future.push_back(FutureConjunct{p, suppress});
  }
  PFForm out;
  out.disjuncts.push_back(PFDisjunct{std::move(present), canon_future(std::move(future))});
  return out;
}

PFForm pf_rec(const Ref& f, const Event& ev, PfCtx& ctx) {
  switch (f->kind) {
    case Kind::True: {
      PFForm out;
      out.disjuncts.push_back(PFDisjunct{PresentPart{}, {}});
      return out;
    }
    case Kind::False: return PFForm{};
    case Kind::Lit: {
      PFForm out;
      out.disjuncts.push_back(PFDisjunct{normalize_present({{f->name, f->positive}}), {}});
      return out;
    }
    case Kind::Var:
      throw InputError("pf_tran: free variable " + f->name + " (input not closed)");
    case Kind::Or: {
      PFForm l = pf_rec(f->lhs, ev, ctx);
      PFForm r = pf_rec(f->rhs, ev, ctx);
      l.disjuncts.insert(l.disjuncts.end(), r.disjuncts.begin(), r.disjuncts.end());
      return l;
    }
    case Kind::And: return pf_and(pf_rec(f->lhs, ev, ctx), pf_rec(f->rhs, ev, ctx));
    case Kind::Next: return pf_next(f->lhs, PresentPart{}, ev, ctx);
    case Kind::Mu:
    case Kind::Nu: {
      if (--ctx.unfolds_left < 0)
        throw InputError("pf_tran: unfolding does not terminate (input not guarded)");
      Event ev2{true, f->kind == Kind::Nu, f->name};
      return pf_rec(unfold(f), ev2, ctx);
    }
  }
  return PFForm{};
}

}  // namespace

PFForm pf_and(const PFForm& a, const PFForm& b) {
  PFForm out;
  for (const auto& da : a.disjuncts)
    for (const auto& db : b.disjuncts) {
      std::vector<std::pair<std::string, bool>> lits = da.present.lits;
      lits.insert(lits.end(), db.present.lits.begin(), db.present.lits.end());
      PresentPart present = normalize_present(std::move(lits));
      if (da.present.contradictory || db.present.contradictory || present.contradictory)
        continue;  // p /\ !p disjuncts contribute nothing
      std::vector<FutureConjunct> future = da.future;
      future.insert(future.end(), db.future.begin(), db.future.end());
      out.disjuncts.push_back(PFDisjunct{std::move(present), canon_future(std::move(future))});
    }
  return out;
}

PFForm pf_tran(const Ref& chi, const BinderInfo& info) {
  // A guarded transformation unfolds each binder position at most once.
  PfCtx ctx{info, 4l * chi->size + 64};
  return pf_rec(chi, Event{}, ctx);
}

std::set<std::string> mark_of(const PFDisjunct& d) {
  std::set<std::string> m;
  for (const auto& c : d.future) {
    if (c.suppress_mark) continue;
    const Formula* core = c.formula.get();
    while (core->kind == Kind::Next) core = core->lhs.get();
    if (core->kind == Kind::Mu || core->kind == Kind::Nu) m.insert(core->name);
  }
  return m;
}

std::string to_text(const PFForm& f) {
  if (f.disjuncts.empty()) return "false";
  std::ostringstream os;
  for (size_t i = 0; i < f.disjuncts.size(); ++i) {
    const auto& d = f.disjuncts[i];
    if (i) os << "  \\/  ";
    os << d.present.text() << " /\\ ()(";
    if (d.future.empty()) os << "true";
    for (size_t j = 0; j < d.future.size(); ++j) {
      if (j) os << " /\\ ";
      os << to_text(d.future[j].formula);
    }
    os << ")";
    auto m = mark_of(d);
    os << " [";
    bool first = true;
    for (const auto& v : m) {
      if (!first) os << ' ';
      os << v;
      first = false;
    }
    os << "]";
  }
  return os.str();
}

}  // namespace nutl
