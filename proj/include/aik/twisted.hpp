#pragma once

#include <optional>

#include "aik/invariants.hpp"

namespace aik {

// Mod-2 data of a self-crossing: the parities of its two affine indices and
// of the bar counts on its two counting arcs.
struct ParityData {
  int rho_bar_over = 0;
  int rho_bar_under = 0;
  int bars_over = 0;
  int bars_under = 0;
};

inline std::map<int, ParityData> bar_parities(const LinkCode& code) {
  auto bar_count = [](const std::vector<Token>& arc) {
    int n = 0;
    for (const Token& t : arc)
      if (t.is_bar()) ++n;
    return n;
  };
  std::map<int, ParityData> result;
  for (const auto& [id, info] : crossing_info(code)) {
    if (!info.self) continue;
    CountingArcs arcs = counting_arcs(code, id);
    ParityData parity;
    parity.rho_bar_over = static_cast<int>(((info.ind.over % 2) + 2) % 2);
    parity.rho_bar_under = static_cast<int>(((info.ind.under % 2) + 2) % 2);
    parity.bars_over = bar_count(arcs.over_arc) % 2;
    parity.bars_under = bar_count(arcs.under_arc) % 2;
    result.emplace(id, parity);
  }
  return result;
}

namespace detail {

inline void require_bar_clean(const LinkCode& code, const char* what) {
  if (code.has_cuts())
    throw std::invalid_argument(std::string(what) + " needs a cut-free code");
}

}  // namespace detail

// Q(s, t): a twisted-link polynomial.  Each self-crossing contributes
// sgn(c) (s^a t^b - 1)(s^a' t^b' - 1) where a, a' are the index parities
// and b, b' the bar-count parities of its two counting arcs.
inline LaurentPoly q_polynomial(const LinkCode& code) {
  detail::require_bar_clean(code, "twisted polynomial");
  LaurentPoly q;
  const LaurentPoly one = LaurentPoly::constant(1);
  for (const auto& [id, parity] : bar_parities(code))
    q += code.signs.at(id) *
         ((LaurentPoly::monomial(parity.rho_bar_over, parity.bars_over, 1) - one) *
          (LaurentPoly::monomial(parity.rho_bar_under, parity.bars_under, 1) - one));
  return q;
}

// Orientation double cover of a twisted code.  Every crossing c splits into
// two copies carrying ids 2c-1 (the + copy, roles and sign as written) and
// 2c (the - copy).  Each component is walked with a copy label that every
// bar toggles; passages are emitted on the copy named by the label and bars
// are consumed.  The deck transformation of the covering reverses the
// surface orientation and the strand order at once, so the - copy swaps
// over and under while keeping every sign: this is the one reflection under
// which a bar slide lifts to crossing relabelings, making the cover a sound
// move invariant (the sign-negating reflection is not).  A component with
// an odd bar count closes only after a second lap and covers itself once;
// otherwise the two laps are separate components.  start_minus flips all
// start labels, which yields the same link with the copies swapped.
inline LinkCode double_cover(const LinkCode& code, bool start_minus = false) {
  detail::require_bar_clean(code, "double cover");
  LinkCode cover;
  for (const auto& [id, sign] : code.signs) {
    cover.signs[2 * id - 1] = sign;
    cover.signs[2 * id] = sign;
  }
  for (const Component& comp : code.components) {
    int bars = 0;
    for (const Token& t : comp)
      if (t.is_bar()) ++bars;
    auto walk = [&](int start_label, int laps) {
      Component out;
      int label = start_label;
      for (int lap = 0; lap < laps; ++lap) {
        for (const Token& t : comp) {
          if (t.is_bar()) {
            label = -label;
          } else if (label > 0) {
            out.push_back(Token::passage(t.role, 2 * t.crossing - 1));
          } else {
            Role flipped = t.role == Role::over ? Role::under : Role::over;
            out.push_back(Token::passage(flipped, 2 * t.crossing));
          }
        }
      }
      return out;
    };
    int first = start_minus ? -1 : 1;
    if (bars % 2 == 1) {
      cover.components.push_back(walk(first, 2));
    } else {
      cover.components.push_back(walk(first, 1));
      cover.components.push_back(walk(-first, 1));
    }
  }
  return cover;
}

// Invariants of the double cover, read as invariants of the base twisted
// code.  The knot-level values exist only when the cover has a single
// component, i.e. for one-component bases with an odd bar count.
struct TildeInvariants {
  LinkCode cover_code;
  int cover_components = 0;
  std::optional<bool> odd_type;  // set for one-component bases
  LinkInvariants cover;
  std::optional<WritheTable> cover_knot_writhes;
  std::optional<LaurentPoly> cover_knot_poly;
};

inline TildeInvariants tilde_invariants(const LinkCode& code) {
  TildeInvariants result;
  result.cover_code = double_cover(code);
  result.cover_components = static_cast<int>(result.cover_code.components.size());
  if (code.components.size() == 1) {
    int bars = 0;
    for (const Token& t : code.components.front())
      if (t.is_bar()) ++bars;
    result.odd_type = bars % 2 == 1;
  }
  result.cover = link_invariants(result.cover_code);
  if (result.cover_components == 1) {
    result.cover_knot_writhes = n_writhes_knot(result.cover_code);
    result.cover_knot_poly = affine_index_polynomial_knot(result.cover_code);
  }
  return result;
}

}  // namespace aik
