#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nutl/normalize.hpp"

namespace nutl {

// Literal conjunction over propositions of the root formula.
struct PresentPart {
  std::vector<std::pair<std::string, bool>> lits;  // sorted by name, positives first
  bool contradictory = false;

  bool is_true() const { return lits.empty() && !contradictory; }
  std::string text() const;
  std::set<std::string> atom() const;  // positive propositions only
};

PresentPart normalize_present(std::vector<std::pair<std::string, bool>> lits);

// One conjunct of a future part: a closure member under n >= 0 leading ()
// operators. suppress_mark is set when this occurrence was produced solely by
// unfolding a strictly-higher nu binder during the node's transformation.
struct FutureConjunct {
  Ref formula;
  bool suppress_mark = false;
};

// Future conjuncts are kept in canonical order with `true` stripped; a
// `false` conjunct collapses the whole future part to just { false }.
struct PFDisjunct {
  PresentPart present;
  std::vector<FutureConjunct> future;
};

struct PFForm {
  std::vector<PFDisjunct> disjuncts;  // empty list = false
};

// PF form of a conjunction of closure members of a guarded, ()-normalized
// root. Contradictory-present disjuncts are dropped. Throws InputError on
// unguarded input (detected as runaway unfolding) and when an \/ sits
// directly under a () operator.
PFForm pf_tran(const Ref& chi, const BinderInfo& info);

PFForm pf_and(const PFForm& a, const PFForm& b);

// Variables X with some future conjunct ()^n sigma X. ... left unsuppressed.
std::set<std::string> mark_of(const PFDisjunct& d);

std::string to_text(const PFForm& f);  // debug form with [m]-bracketed marks

}  // namespace nutl
