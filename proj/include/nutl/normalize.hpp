#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "nutl/errors.hpp"
#include "nutl/formula.hpp"

namespace nutl {

// Dual formula: swaps true/false, literal polarity, \// /\, mu/nu; () commutes;
// bound variables stay positive. Involution up to renaming.
Ref negate(const Ref& f);

// Textual substitution of psi for every free occurrence of Var(x) in phi.
// Sound as long as binder names on the path do not collide with free
// variables of psi; parse-time canonical renaming guarantees that, and
// guard_transform freshens the copies it creates.
Ref substitute(const Ref& phi, const std::string& x, const Ref& psi);

// One-step unfolding body[fix/X] of a fixpoint formula.
Ref unfold(const Ref& fix);

// Rewrites ()(a \/ b) to ()a \/ ()b everywhere, to fixpoint.
Ref push_next(const Ref& f);

// Every bound-variable occurrence below at least one () inside its binder.
bool is_guarded(const Ref& f);

// Unfold-then-simplify guarded transformation, innermost binder first.
// Throws BudgetError when more than node_budget formula nodes get created.
Ref guard_transform(const Ref& f, long node_budget = 500000);

// Least set containing phi and true, closed under subterm and one-step
// unfolding rules. Canonically ordered.
std::vector<Ref> closure(const Ref& phi);

struct BinderInfo {
  std::map<std::string, Kind> kind;                      // Mu or Nu per binder
  std::set<std::pair<std::string, std::string>> higher;  // (x,y): y's binder inside x's body
  std::set<std::pair<std::string, std::string>> depends; // x |> y, transitively closed

  bool is_mu(const std::string& v) const {
    auto it = kind.find(v);
    return it != kind.end() && it->second == Kind::Mu;
  }
  bool is_higher(const std::string& x, const std::string& y) const {
    return higher.count({x, y}) != 0;
  }
  bool in_depends(const std::string& x, const std::string& y) const {
    return depends.count({x, y}) != 0;
  }
};

// Dependency relation x |> y plus the higher-than order, over the binders of
// a canonically renamed formula.
BinderInfo dependencies(const Ref& phi);

}  // namespace nutl
