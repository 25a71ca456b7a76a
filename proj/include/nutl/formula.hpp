#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace nutl {

enum class Kind : uint8_t { True, False, Lit, Var, Or, And, Next, Mu, Nu };

struct Formula;
using Ref = std::shared_ptr<const Formula>;

// Immutable AST node. Negation appears only on literals (positive = false);
// Mu/Nu keep the binder variable in `name` and the body in `lhs`.
struct Formula {
  Kind kind;
  std::string name;      // Lit: proposition, Var/Mu/Nu: variable
  bool positive = true;  // Lit polarity
  Ref lhs, rhs;          // Or/And: both children; Next/Mu/Nu: lhs only
  size_t hash = 0;
  int size = 1;  // node count
};

Ref f_true();
Ref f_false();
Ref lit(std::string prop, bool positive = true);
Ref var(std::string name);
Ref f_or(Ref a, Ref b);  // folds true/false units
Ref f_and(Ref a, Ref b);
Ref next(Ref a);
Ref mu(std::string v, Ref body);
Ref nu(std::string v, Ref body);
Ref binder(Kind k, std::string v, Ref body);

bool equal(const Ref& a, const Ref& b);

// Total order: constructor tag, then node fields, then children.
int compare(const Ref& a, const Ref& b);

struct FormulaLess {
  bool operator()(const Ref& a, const Ref& b) const { return compare(a, b) < 0; }
};

// Emits the input grammar back; parse(to_text(f)) reproduces f up to
// canonical renaming.
std::string to_text(const Ref& f);

bool is_fixpoint(const Ref& f);
bool is_closed(const Ref& f);
std::set<std::string> free_vars(const Ref& f);
std::set<std::string> propositions(const Ref& f);
std::vector<std::string> binder_names(const Ref& f);  // preorder, with duplicates

// Binders renamed X0, X1, ... in preorder (skipping names that collide with
// propositions of f). Free variables are left untouched.
Ref rename_canonical(const Ref& f);

}  // namespace nutl
