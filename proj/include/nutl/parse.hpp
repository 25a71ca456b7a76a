#pragma once

#include "nutl/errors.hpp"
#include "nutl/formula.hpp"

namespace nutl {

// Grammar, tightest first: ! , () , /\ , \/ , -> , <-> , ^ ; `mu V . body`
// and `nu V . body` extend maximally right; parentheses group. Derived
// operators and ! over compound terms are desugared through negate, and
// binders come out renamed X0, X1, ... in preorder. With strict_closed set,
// a variable outside any matching binder is an error.
Ref parse_formula(const std::string& text, bool strict_closed = true);

}  // namespace nutl
