#include "nutl/kripke.hpp"

#include <algorithm>
#include <sstream>

namespace nutl {

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string strip_comment(const std::string& line) {
  size_t h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

}  // namespace

KripkeStructure parse_kripke(const std::string& text) {
  KripkeStructure m;
  std::vector<std::pair<std::string, std::string>> trans;
  std::string init_name;
  std::vector<std::pair<std::string, std::set<std::string>>> labels;

  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (words(line).empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'key: ...' in model description", lineno, 1);
    std::string key_part = line.substr(0, colon);
    std::string rest = line.substr(colon + 1);
    auto key = words(key_part);
    if (key.size() == 1 && key[0] == "states") {
      for (const auto& s : words(rest)) {
        if (m.index.count(s)) throw ParseError("duplicate state '" + s + "'", lineno, 1);
        m.index[s] = static_cast<int>(m.states.size());
        m.states.push_back(s);
      }
    } else if (key.size() == 1 && key[0] == "init") {
      auto v = words(rest);
      if (v.size() != 1) throw ParseError("init expects exactly one state", lineno, 1);
      init_name = v[0];
    } else if (key.size() == 2 && key[0] == "label") {
      auto props = words(rest);
      labels.emplace_back(key[1], std::set<std::string>(props.begin(), props.end()));
    } else if (key.size() == 1 && key[0] == "trans") {
      std::string item;
      std::istringstream items(rest);
      while (std::getline(items, item, ',')) {
        auto v = words(item);
        if (v.empty()) continue;
        if (v.size() != 3 || v[1] != "->")
          throw ParseError("expected 'src -> dst' in trans", lineno, 1);
        trans.emplace_back(v[0], v[2]);
      }
    } else {
      throw ParseError("unknown key '" + key_part + "'", lineno, 1);
    }
  }

  if (m.states.empty()) throw InputError("model has no states");
  if (init_name.empty()) throw InputError("model has no init state");
  m.init = m.state_id(init_name);
  m.label.assign(m.states.size(), {});
  for (const auto& [s, props] : labels) m.label[m.state_id(s)] = props;
  m.succ.assign(m.states.size(), {});
  for (const auto& [a, b] : trans) m.succ[m.state_id(a)].push_back(m.state_id(b));
  for (auto& v : m.succ) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  for (size_t i = 0; i < m.succ.size(); ++i)
    if (m.succ[i].empty())
      throw InputError("transition relation is not total: state '" + m.states[i] +
                       "' has no successor");
  return m;
}

bool label_check(const KripkeStructure& m, int state, const PresentPart& label) {
  if (label.contradictory) return false;
  for (const auto& [p, positive] : label.lits)
    if ((m.label[state].count(p) != 0) != positive) return false;
  return true;
}

}  // namespace nutl
