#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nutl/errors.hpp"
#include "nutl/pf.hpp"

namespace nutl {

// Finite total transition system with a labeling function.
struct KripkeStructure {
  std::vector<std::string> states;
  std::map<std::string, int> index;
  int init = -1;
  std::vector<std::vector<int>> succ;          // sorted successor ids per state
  std::vector<std::set<std::string>> label;    // propositions per state

  int state_id(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw InputError("unknown state '" + name + "'");
    return it->second;
  }
};

// Line-oriented format, '#' comments:
//   states: s0 s1 s2
//   init: s0
//   label s0: p q
//   trans: s0 -> s1, s1 -> s2, s2 -> s2
// Totality of the transition relation is enforced.
KripkeStructure parse_kripke(const std::string& text);

// true iff the label is `true` or every positive literal is in I(s) and
// every negative one absent.
bool label_check(const KripkeStructure& m, int state, const PresentPart& label);

}  // namespace nutl
