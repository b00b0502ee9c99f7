#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace aik {

enum class Role : std::uint8_t { over, under };

// One entry of a component's cyclic token sequence.  A passage records one
// of the two visits to a classical crossing; bars and oriented cut points
// decorate the arcs between passages.  Cut direction is stored relative to
// traversal: coherent means the cut points along the traversal orientation.
struct Token {
  enum class Kind : std::uint8_t { passage, bar, cut };

  Kind kind = Kind::bar;
  Role role = Role::over;  // passage only
  int crossing = 0;        // passage only
  bool coherent = false;   // cut only

  static Token passage(Role r, int id) {
    Token t;
    t.kind = Kind::passage;
    t.role = r;
    t.crossing = id;
    return t;
  }
  static Token bar() {
    Token t;
    t.kind = Kind::bar;
    return t;
  }
  static Token cut(bool coherent) {
    Token t;
    t.kind = Kind::cut;
    t.coherent = coherent;
    return t;
  }

  bool is_passage() const { return kind == Kind::passage; }
  bool is_bar() const { return kind == Kind::bar; }
  bool is_cut() const { return kind == Kind::cut; }
  bool is_over() const { return is_passage() && role == Role::over; }
  bool is_under() const { return is_passage() && role == Role::under; }

  friend bool operator==(const Token&, const Token&) = default;
};

using Component = std::vector<Token>;

// A decorated Gauss code: one cyclic token sequence per component plus a
// sign for every classical crossing.  The stored linear order of each
// component is its serialization cut; all cyclic rotations describe the
// same diagram.
struct LinkCode {
  std::vector<Component> components;
  std::map<int, int> signs;  // crossing id -> +1 / -1

  bool has_bars() const {
    for (const auto& comp : components)
      for (const auto& t : comp)
        if (t.is_bar()) return true;
    return false;
  }
  bool has_cuts() const {
    for (const auto& comp : components)
      for (const auto& t : comp)
        if (t.is_cut()) return true;
    return false;
  }
  int max_crossing_id() const {
    int m = 0;
    for (const auto& [id, sign] : signs)
      if (id > m) m = id;
    return m;
  }

  friend bool operator==(const LinkCode&, const LinkCode&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string joined() const {
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += v;
    }
    return out;
  }
};

inline ValidationReport validate(const LinkCode& code) {
  ValidationReport report;
  std::map<int, int> over_count, under_count;
  for (const auto& comp : code.components) {
    for (const auto& t : comp) {
      if (!t.is_passage()) continue;
      if (t.crossing < 1)
        report.violations.push_back("crossing " + std::to_string(t.crossing) +
                                    " is not a positive id");
      (t.role == Role::over ? over_count : under_count)[t.crossing]++;
    }
  }
  std::set<int> ids;
  for (const auto& [id, n] : over_count) ids.insert(id);
  for (const auto& [id, n] : under_count) ids.insert(id);
  for (int id : ids) {
    int o = over_count.count(id) ? over_count.at(id) : 0;
    int u = under_count.count(id) ? under_count.at(id) : 0;
    if (o != 1)
      report.violations.push_back("crossing " + std::to_string(id) + " has " +
                                  std::to_string(o) + " over passages");
    if (u != 1)
      report.violations.push_back("crossing " + std::to_string(id) + " has " +
                                  std::to_string(u) + " under passages");
    if (!code.signs.count(id))
      report.violations.push_back("crossing " + std::to_string(id) +
                                  " has no sign");
  }
  for (const auto& [id, sign] : code.signs) {
    if (!ids.count(id))
      report.violations.push_back("sign given for absent crossing " +
                                  std::to_string(id));
    else if (sign != 1 && sign != -1)
      report.violations.push_back("sign of crossing " + std::to_string(id) +
                                  " must be +1 or -1");
  }
  return report;
}

inline void require_valid(const LinkCode& code) {
  auto report = validate(code);
  if (!report.ok()) throw std::invalid_argument("invalid code: " + report.joined());
}

// Location of one token inside a code.
struct TokenPos {
  int component = 0;
  int index = 0;
  friend bool operator==(const TokenPos&, const TokenPos&) = default;
};

struct PassagePair {
  TokenPos over;
  TokenPos under;
};

// Positions of both passages of every crossing.  Assumes a validated code.
inline std::map<int, PassagePair> locate_passages(const LinkCode& code) {
  std::map<int, PassagePair> where;
  for (int k = 0; k < static_cast<int>(code.components.size()); ++k) {
    const auto& comp = code.components[k];
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
      const Token& t = comp[i];
      if (!t.is_passage()) continue;
      auto& pair = where[t.crossing];
      (t.role == Role::over ? pair.over : pair.under) = TokenPos{k, i};
    }
  }
  return where;
}

// Crossings whose over and under passages lie on the same component.
inline std::set<int> self_crossings(const LinkCode& code) {
  std::set<int> result;
  for (const auto& [id, pair] : locate_passages(code))
    if (pair.over.component == pair.under.component) result.insert(id);
  return result;
}

// The two arcs of a smoothed self-crossing.  over_arc holds the tokens met
// when leaving on the over-outgoing strand (strictly between the over and
// the under passage in traversal order); under_arc is the complementary
// arc.  Bars and cut points are kept: index sums skip them, cut counting
// reads them.
struct CountingArcs {
  std::vector<Token> over_arc;
  std::vector<Token> under_arc;
};

namespace detail {

inline std::vector<Token> arc_between(const Component& comp, int from, int to) {
  std::vector<Token> arc;
  int n = static_cast<int>(comp.size());
  for (int i = (from + 1) % n; i != to; i = (i + 1) % n) arc.push_back(comp[i]);
  return arc;
}

}  // namespace detail

inline CountingArcs counting_arcs(const LinkCode& code, int crossing) {
  auto where = locate_passages(code);
  auto it = where.find(crossing);
  if (it == where.end())
    throw std::invalid_argument("crossing " + std::to_string(crossing) +
                                " not in code");
  const PassagePair& pair = it->second;
  if (pair.over.component != pair.under.component)
    throw std::invalid_argument("nonself crossing has no counting components");
  const Component& comp = code.components[pair.over.component];
  return CountingArcs{detail::arc_between(comp, pair.over.index, pair.under.index),
                      detail::arc_between(comp, pair.under.index, pair.over.index)};
}

}  // namespace aik
