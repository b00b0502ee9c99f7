#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "aik/invariants.hpp"

namespace aik {

// Union-find over variables related by difference constraints
// value(y) = value(x) + d.  Each node stores its offset from its parent;
// find compresses paths while accumulating offsets.  Inconsistent
// constraints are reported as nonzero cycle defects instead of being
// merged, so the final forest always satisfies every merged constraint
// exactly.
class OffsetUnionFind {
 public:
  explicit OffsetUnionFind(int n)
      : parent_(n), rank_(n, 0), offset_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // (root, value(v) - value(root))
  std::pair<int, long long> find(int v) {
    if (parent_[v] == v) return {v, 0};
    auto [root, above] = find(parent_[v]);
    parent_[v] = root;
    offset_[v] += above;
    return {root, offset_[v]};
  }

  // Impose value(y) = value(x) + d.  Returns the defect: 0 when newly
  // merged or already consistent, otherwise the amount by which the
  // existing relation misses d.
  long long relate(int x, int y, long long d) {
    auto [rx, ox] = find(x);
    auto [ry, oy] = find(y);
    if (rx == ry) return oy - ox - d;
    if (rank_[rx] < rank_[ry]) {
      parent_[rx] = ry;
      offset_[rx] = (oy - d) - ox;
    } else {
      parent_[ry] = rx;
      offset_[ry] = (ox + d) - oy;
      if (rank_[rx] == rank_[ry]) ++rank_[rx];
    }
    return 0;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<long long> offset_;
};

// Sub-arcs are the maximal token runs between marked tokens (passages and
// cut points; bars do not split).  values[k][g] belongs to the run that
// starts right after the g-th marked token of component k; a component
// without marked tokens is a single free run.
struct SubArcLayout {
  std::vector<std::vector<int>> marks;  // token indices, ascending
  std::vector<int> base;                // variable id of gap 0 per component
  int variables = 0;

  int gaps(int component) const {
    return std::max<int>(1, static_cast<int>(marks[component].size()));
  }
  int var(int component, int gap) const { return base[component] + gap; }
};

inline SubArcLayout sub_arc_layout(const LinkCode& code) {
  SubArcLayout layout;
  layout.marks.resize(code.components.size());
  layout.base.resize(code.components.size());
  for (std::size_t k = 0; k < code.components.size(); ++k) {
    const Component& comp = code.components[k];
    for (int i = 0; i < static_cast<int>(comp.size()); ++i)
      if (!comp[i].is_bar()) layout.marks[k].push_back(i);
    layout.base[k] = layout.variables;
    layout.variables += layout.gaps(static_cast<int>(k));
  }
  return layout;
}

struct Numbering {
  bool solved = false;
  long long defect_gcd = 0;  // gcd of all cycle defects; 0 means exact over Z
  int modulus = 0;           // 0 = integers
  std::vector<std::vector<long long>> values;  // per component, per gap
};

// Solve the local numbering constraints: around a crossing the over-out and
// under-in runs share a value a, the over-in and under-out runs share
// a + sgn; a coherent cut raises the value by one along traversal, an
// incoherent cut lowers it.  modulus 0 asks for an integer solution, m >= 2
// for one mod m; a solution exists iff the modulus divides the gcd of all
// cycle defects.
inline Numbering solve_numbering(const LinkCode& code, int modulus = 0) {
  SubArcLayout layout = sub_arc_layout(code);
  OffsetUnionFind uf(layout.variables);
  long long g = 0;
  auto impose = [&](int x, int y, long long d) {
    long long defect = uf.relate(x, y, d);
    if (defect != 0) g = std::gcd(g, defect < 0 ? -defect : defect);
  };

  struct Germs {
    int over_in = -1, over_out = -1, under_in = -1, under_out = -1;
  };
  std::map<int, Germs> germs;
  for (std::size_t k = 0; k < code.components.size(); ++k) {
    const auto& marks = layout.marks[k];
    int r = static_cast<int>(marks.size());
    for (int j = 0; j < r; ++j) {
      const Token& t = code.components[k][marks[j]];
      int out = layout.var(static_cast<int>(k), j);
      int in = layout.var(static_cast<int>(k), (j + r - 1) % r);
      if (t.is_cut()) {
        impose(in, out, t.coherent ? 1 : -1);
      } else {
        Germs& germ = germs[t.crossing];
        (t.role == Role::over ? germ.over_in : germ.under_in) = in;
        (t.role == Role::over ? germ.over_out : germ.under_out) = out;
      }
    }
  }
  for (const auto& [id, germ] : germs) {
    impose(germ.over_out, germ.under_in, 0);
    impose(germ.under_in, germ.under_out, code.signs.at(id));
    impose(germ.under_out, germ.over_in, 0);
  }

  Numbering result;
  result.defect_gcd = g;
  result.modulus = modulus;
  result.solved = (modulus == 0) ? g == 0 : (modulus == 1 || g % modulus == 0);
  if (!result.solved) return result;

  std::vector<long long> value(layout.variables, 0);
  std::vector<long long> min_of_root(layout.variables, 0);
  std::vector<bool> seen(layout.variables, false);
  for (int v = 0; v < layout.variables; ++v) {
    auto [root, off] = uf.find(v);
    if (!seen[root] || off < min_of_root[root]) min_of_root[root] = off;
    seen[root] = true;
  }
  for (int v = 0; v < layout.variables; ++v) {
    auto [root, off] = uf.find(v);
    value[v] = off - min_of_root[root];
    if (modulus >= 1) value[v] %= modulus;
  }
  result.values.resize(code.components.size());
  for (std::size_t k = 0; k < code.components.size(); ++k) {
    int n = layout.gaps(static_cast<int>(k));
    result.values[k].resize(n);
    for (int gap = 0; gap < n; ++gap)
      result.values[k][gap] = value[layout.var(static_cast<int>(k), gap)];
  }
  return result;
}

// Consequences of numberability for a knot: an integral numbering forces
// every n-writhe to vanish; a numbering mod m forces J_n = 0 whenever m
// does not divide n.
struct NumberingImplications {
  bool integral = false;
  long long defect_gcd = 0;
  bool writhes_vanish = true;  // checked only when integral
  std::vector<std::pair<long long, bool>> mod_checks;  // (m, J_n = 0 unless m | n)

  bool all_hold() const {
    if (integral && !writhes_vanish) return false;
    for (const auto& [m, ok] : mod_checks)
      if (!ok) return false;
    return true;
  }
};

inline NumberingImplications numbering_implications(const LinkCode& code) {
  if (code.components.size() != 1 || code.has_cuts() || code.has_bars())
    throw std::invalid_argument(
        "numbering implications need a bare single-component code");
  NumberingImplications report;
  Numbering numbering = solve_numbering(code, 0);
  report.integral = numbering.solved;
  report.defect_gcd = numbering.defect_gcd;
  WritheTable writhes = n_writhes_knot(code);
  if (report.integral) report.writhes_vanish = writhes.empty();
  long long g = report.defect_gcd;
  std::set<long long> divisors;
  for (long long m = 2; m * m <= g; ++m)
    if (g % m == 0) {
      divisors.insert(m);
      divisors.insert(g / m);
    }
  if (g >= 2) divisors.insert(g);
  for (long long m : divisors) {
    bool ok = true;
    for (const auto& [n, total] : writhes)
      if (n % m != 0) ok = false;
    report.mod_checks.emplace_back(m, ok);
  }
  return report;
}

}  // namespace aik
