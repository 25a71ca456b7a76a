#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nutl/errors.hpp"
#include "nutl/formula.hpp"

namespace nutl {

// Ultimately periodic word over proposition sets. Positions are
// 0..prefix+period-1; the successor of the last position wraps to
// prefix.size().
struct LassoWord {
  std::vector<std::set<std::string>> prefix;
  std::vector<std::set<std::string>> period;  // nonempty

  int positions() const { return static_cast<int>(prefix.size() + period.size()); }
  const std::set<std::string>& at(size_t i) const {
    return i < prefix.size() ? prefix[i] : period[i - prefix.size()];
  }
};

// Text format: `prefix: {p q} {} ; period: {r}`; the prefix part may be
// omitted when empty.
LassoWord parse_lasso(const std::string& text);
std::string format_lasso(const LassoWord& w);

// Position set of a lasso, as a packed bit vector.
class PosSet {
 public:
  PosSet() = default;
  explicit PosSet(int n) : n_(n), w_((n + 63) / 64, 0) {}
  static PosSet full(int n) {
    PosSet s(n);
    for (auto& x : s.w_) x = ~0ull;
    s.trim();
    return s;
  }
  int size() const { return n_; }
  bool test(int i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  void set(int i) { w_[i / 64] |= 1ull << (i % 64); }
  bool operator==(const PosSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  PosSet operator|(const PosSet& o) const {
    PosSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  PosSet operator&(const PosSet& o) const {
    PosSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

 private:
  void trim() {
    if (n_ % 64) w_.back() &= (1ull << (n_ % 64)) - 1;
  }
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Set of positions where f is true, by Kleene iteration over the finite
// position set: mu from empty upward, nu from full downward, inner fixpoints
// re-evaluated per outer step.
PosSet eval_positions(const Ref& f, const LassoWord& w, std::map<std::string, PosSet> env = {});

// Truth of a closed formula at position 0.
bool eval_lasso(const Ref& f, const LassoWord& w);

// Exhaustive enumeration of all lassos with prefix length 0..max_prefix and
// period length 1..max_period over the given propositions, in a fixed order.
// The visitor returns false to stop.
void enumerate_lassos(const std::vector<std::string>& props, int max_prefix, int max_period,
                      const std::function<bool(const LassoWord&)>& visit);

}  // namespace nutl
