#pragma once

#include <utility>

#include "aik/code.hpp"
#include "aik/laurent.hpp"

namespace aik {

// Sign contributed by one passage met along a counting arc: under passages
// count the crossing sign, over passages count its negative.
inline int flat_sign(Role role, int sign) {
  return role == Role::under ? sign : -sign;
}

// The four affine indices of a self-crossing.  For positive crossings the
// left arc is the under-side counting arc, for negative crossings the over
// side; over/under always name the arc entered when leaving on that strand.
struct IndexQuad {
  long long left = 0;
  long long right = 0;
  long long over = 0;
  long long under = 0;
};

namespace detail {

inline long long arc_index_sum(const LinkCode& code,
                               const std::vector<Token>& arc) {
  long long sum = 0;
  for (const Token& t : arc)
    if (t.is_passage()) sum += flat_sign(t.role, code.signs.at(t.crossing));
  return sum;
}

}  // namespace detail

struct CrossingInfo {
  int sign = 0;
  int over_component = 0;
  int under_component = 0;
  bool self = false;
  IndexQuad ind;  // meaningful only when self
};

inline std::map<int, CrossingInfo> crossing_info(const LinkCode& code) {
  std::map<int, CrossingInfo> table;
  for (const auto& [id, pos] : locate_passages(code)) {
    CrossingInfo info;
    info.sign = code.signs.at(id);
    info.over_component = pos.over.component;
    info.under_component = pos.under.component;
    info.self = pos.over.component == pos.under.component;
    if (info.self) {
      CountingArcs arcs = counting_arcs(code, id);
      info.ind.over = detail::arc_index_sum(code, arcs.over_arc);
      info.ind.under = detail::arc_index_sum(code, arcs.under_arc);
      info.ind.left = info.sign > 0 ? info.ind.under : info.ind.over;
      info.ind.right = info.sign > 0 ? info.ind.over : info.ind.under;
    }
    table.emplace(id, info);
  }
  return table;
}

inline std::map<int, IndexQuad> affine_indices(const LinkCode& code) {
  std::map<int, IndexQuad> result;
  for (const auto& [id, info] : crossing_info(code))
    if (info.self) result.emplace(id, info.ind);
  return result;
}

// Signed crossing counts keyed by index value; zero index and zero totals
// are omitted.
using WritheTable = std::map<long long, long long>;

namespace detail {

inline void table_add(WritheTable& table, long long n, long long value) {
  if (n == 0) return;
  auto it = table.find(n);
  if (it == table.end()) {
    if (value != 0) table[n] = value;
  } else if ((it->second += value) == 0) {
    table.erase(it);
  }
}

inline void require_knot(const LinkCode& code) {
  if (code.components.size() != 1)
    throw std::invalid_argument("knot invariant on non-knot code");
}

}  // namespace detail

// J_n: signed count of crossings with over-index n, for n != 0.
inline WritheTable n_writhes_knot(const LinkCode& code) {
  detail::require_knot(code);
  WritheTable table;
  for (const auto& [id, info] : crossing_info(code))
    detail::table_add(table, info.ind.over, info.sign);
  return table;
}

// P(t): sum of sgn(c) (t^{under-index} - 1) over all crossings.
inline LaurentPoly affine_index_polynomial_knot(const LinkCode& code) {
  detail::require_knot(code);
  LaurentPoly p;
  for (const auto& [id, info] : crossing_info(code))
    p += info.sign * (LaurentPoly::monomial(0, static_cast<int>(info.ind.under), 1) -
                      LaurentPoly::constant(1));
  return p;
}

// The five ordered-link invariants built from self-crossing indices.  The
// writhe tables and single-variable polynomials carry a side condition on
// the opposite index; the two-variable polynomial needs none because a zero
// exponent kills its factor.
struct LinkInvariants {
  WritheTable over_writhes;   // index over = n, under-index != 0
  WritheTable under_writhes;  // index under = n, over-index != 0
  LaurentPoly over_poly;      // t^over terms, under-index != 0
  LaurentPoly under_poly;     // t^under terms, over-index != 0
  LaurentPoly over_under_poly;  // (s^over - 1)(t^under - 1)
};

namespace detail {

inline void accumulate_link_invariants(LinkInvariants& inv, int sign,
                                       long long over, long long under) {
  const LaurentPoly one = LaurentPoly::constant(1);
  int o = static_cast<int>(over);
  int u = static_cast<int>(under);
  if (u != 0) {
    table_add(inv.over_writhes, o, sign);
    inv.over_poly += sign * (LaurentPoly::monomial(0, o, 1) - one);
  }
  if (o != 0) {
    table_add(inv.under_writhes, u, sign);
    inv.under_poly += sign * (LaurentPoly::monomial(0, u, 1) - one);
  }
  inv.over_under_poly += sign * ((LaurentPoly::monomial(o, 0, 1) - one) *
                                 (LaurentPoly::monomial(0, u, 1) - one));
}

}  // namespace detail

inline LinkInvariants link_invariants(const LinkCode& code) {
  LinkInvariants inv;
  for (const auto& [id, info] : crossing_info(code))
    if (info.self)
      detail::accumulate_link_invariants(inv, info.sign, info.ind.over,
                                         info.ind.under);
  return inv;
}

// Pairwise linking numbers of an ordered link.  lk(i, j) sums the signs of
// nonself crossings passing over on component i and under on component j;
// components are 1-based.
struct LinkingData {
  std::map<std::pair<int, int>, long long> lk;
  std::map<std::pair<int, int>, long long> vlk;
  std::vector<long long> lambda;
};

inline LinkingData linking_data(const LinkCode& code) {
  LinkingData data;
  int n = static_cast<int>(code.components.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) data.lk[{i, j}] = 0;
  for (const auto& [id, info] : crossing_info(code))
    if (!info.self)
      data.lk[{info.over_component + 1, info.under_component + 1}] += info.sign;
  data.lambda.assign(n, 0);
  for (const auto& [pair, value] : data.lk) {
    auto [i, j] = pair;
    long long v = data.lk.at({j, i}) - value;
    data.vlk[pair] = v;
    data.lambda[i - 1] += v;
  }
  return data;
}

// Restriction of the link invariants to self-crossings of one component.
// The side condition becomes index != 0 and != lambda_i, which matches the
// global one because over- and under-index sum to lambda_i there.
struct ComponentInvariants {
  long long lambda = 0;
  WritheTable over_writhes;
  LaurentPoly over_poly;
  LaurentPoly under_poly;
  LaurentPoly over_under_poly;
};

inline std::vector<ComponentInvariants> component_split(const LinkCode& code) {
  LinkingData linking = linking_data(code);
  std::vector<ComponentInvariants> split(code.components.size());
  for (std::size_t i = 0; i < split.size(); ++i)
    split[i].lambda = linking.lambda[i];
  const LaurentPoly one = LaurentPoly::constant(1);
  for (const auto& [id, info] : crossing_info(code)) {
    if (!info.self) continue;
    ComponentInvariants& ci = split[info.over_component];
    int o = static_cast<int>(info.ind.over);
    int u = static_cast<int>(info.ind.under);
    bool admissible = o != 0 && o != ci.lambda;
    if (admissible) {
      detail::table_add(ci.over_writhes, o, info.sign);
      ci.over_poly += info.sign * (LaurentPoly::monomial(0, o, 1) - one);
      ci.under_poly += info.sign * (LaurentPoly::monomial(0, u, 1) - one);
    }
    ci.over_under_poly +=
        info.sign * ((LaurentPoly::monomial(o, 0, 1) - one) *
                     (LaurentPoly::monomial(0, u, 1) - one));
  }
  return split;
}

struct CompatibilityResult {
  bool compatible = false;
  LaurentPoly poly;  // the common polynomial (equal to under_poly) when compatible
};

inline CompatibilityResult compatibility(const LinkCode& code) {
  CompatibilityResult result;
  result.compatible = true;
  for (const auto& [id, info] : crossing_info(code))
    if (info.self && info.ind.over != -info.ind.under) result.compatible = false;
  if (result.compatible) result.poly = link_invariants(code).under_poly;
  return result;
}

}  // namespace aik
