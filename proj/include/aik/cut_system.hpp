#pragma once

#include <random>

#include "aik/numbering.hpp"

namespace aik {

namespace detail {

inline void require_cut_free(const LinkCode& code) {
  if (code.has_cuts())
    throw std::invalid_argument("code already has cut points");
}

// Values of the four strand germs at a crossing when its base level is a:
// the over-out and under-in germs sit at a, the over-in and under-out germs
// at a + sgn.
struct GermLevels {
  long long over_in, over_out, under_in, under_out;
};
inline GermLevels germ_levels(long long a, int sign) {
  return GermLevels{a + sign, a, a, a + sign};
}

}  // namespace detail

// Insert the cuts dictated by an arbitrary choice of base level per
// crossing: along each passage-to-passage run the value must climb from the
// out-germ of the opening passage to the in-germ of the closing one, so the
// run receives |gap| cuts, all at the start of the run and oriented by the
// sign of the gap.  The result always admits an integral numbering.
inline LinkCode cut_system_from_levels(const LinkCode& code,
                                       const std::map<int, long long>& levels) {
  detail::require_cut_free(code);
  auto at = [&](int id) -> long long {
    auto it = levels.find(id);
    return it == levels.end() ? 0 : it->second;
  };
  auto out_level = [&](const Token& t) {
    detail::GermLevels g = detail::germ_levels(at(t.crossing), code.signs.at(t.crossing));
    return t.role == Role::over ? g.over_out : g.under_out;
  };
  auto in_level = [&](const Token& t) {
    detail::GermLevels g = detail::germ_levels(at(t.crossing), code.signs.at(t.crossing));
    return t.role == Role::over ? g.over_in : g.under_in;
  };

  LinkCode result;
  result.signs = code.signs;
  for (const Component& comp : code.components) {
    std::vector<int> passages;
    for (int i = 0; i < static_cast<int>(comp.size()); ++i)
      if (comp[i].is_passage()) passages.push_back(i);
    Component out;
    if (passages.empty()) {
      out = comp;
    } else {
      std::map<int, long long> gap_after;  // keyed by passage position
      for (std::size_t j = 0; j < passages.size(); ++j) {
        const Token& from = comp[passages[j]];
        const Token& to = comp[passages[(j + 1) % passages.size()]];
        gap_after[passages[j]] = in_level(to) - out_level(from);
      }
      for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
        out.push_back(comp[i]);
        auto it = gap_after.find(i);
        if (it == gap_after.end()) continue;
        long long d = it->second;
        for (long long n = 0; n < (d < 0 ? -d : d); ++n)
          out.push_back(Token::cut(d > 0));
      }
    }
    result.components.push_back(std::move(out));
  }
  return result;
}

// Two cuts per crossing: one right after the over passage, coherent for a
// positive crossing, and one right before the under passage, coherent for a
// negative one.  The resulting code carries a numbering using only the
// values 0 and 1.
inline LinkCode binary_cut_system(const LinkCode& code) {
  detail::require_cut_free(code);
  LinkCode result;
  result.signs = code.signs;
  for (const Component& comp : code.components) {
    Component out;
    for (const Token& t : comp) {
      if (t.is_over()) {
        out.push_back(t);
        out.push_back(Token::cut(code.signs.at(t.crossing) > 0));
      } else if (t.is_under()) {
        out.push_back(Token::cut(code.signs.at(t.crossing) < 0));
        out.push_back(t);
      } else {
        out.push_back(t);
      }
    }
    result.components.push_back(std::move(out));
  }
  return result;
}

// Random valid cut system: random base level in [-3, 3] per crossing, cuts
// placed at random offsets inside their run, and per run a coin-flipped
// cancelling coherent/incoherent pair.
inline LinkCode random_cut_system(const LinkCode& code, std::uint64_t seed) {
  detail::require_cut_free(code);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> level(-3, 3);
  std::map<int, long long> levels;
  for (const auto& [id, sign] : code.signs) levels[id] = level(rng);

  LinkCode base = cut_system_from_levels(code, levels);
  LinkCode result;
  result.signs = code.signs;
  for (const Component& comp : base.components) {
    // Rework each passage-to-passage run: shuffle its cuts among its bars
    // and flip a coin for one extra cancelling pair.  The stretch before
    // the first passage is the tail of the seam run, whose single coin is
    // flipped at the component end, so it is merged without one here.
    Component out;
    std::vector<Token> pending;  // non-passage tokens of the current run
    bool seen_passage = false;
    auto flush = [&]() {
      std::vector<Token> cuts, bars;
      for (const Token& t : pending)
        (t.is_cut() ? cuts : bars).push_back(t);
      if (seen_passage && std::uniform_int_distribution<int>(0, 1)(rng)) {
        cuts.push_back(Token::cut(true));
        cuts.push_back(Token::cut(false));
      }
      std::shuffle(cuts.begin(), cuts.end(), rng);
      std::vector<Token> merged = bars;
      for (const Token& c : cuts) {
        std::uniform_int_distribution<std::size_t> slot(0, merged.size());
        merged.insert(merged.begin() + slot(rng), c);
      }
      for (const Token& t : merged) out.push_back(t);
      pending.clear();
    };
    for (const Token& t : comp) {
      if (t.is_passage()) {
        flush();
        out.push_back(t);
        seen_passage = true;
      } else {
        pending.push_back(t);
      }
    }
    flush();
    result.components.push_back(std::move(out));
  }
  return result;
}

struct RhoPair {
  long long over = 0;
  long long under = 0;
};

// Incoherent-minus-coherent cut counts on the two counting arcs of each
// self-crossing.  Requires an actual cut system: the decorated code must
// admit an integral numbering.
inline std::map<int, RhoPair> rho(const LinkCode& code) {
  if (!solve_numbering(code, 0).solved)
    throw std::invalid_argument("not a cut system");
  auto count = [](const std::vector<Token>& arc) {
    long long value = 0;
    for (const Token& t : arc)
      if (t.is_cut()) value += t.coherent ? -1 : 1;
    return value;
  };
  std::map<int, RhoPair> result;
  for (int id : self_crossings(code)) {
    CountingArcs arcs = counting_arcs(code, id);
    result[id] = RhoPair{count(arcs.over_arc), count(arcs.under_arc)};
  }
  return result;
}

// The cut-index analogues of the five link invariants: same formulas and
// side conditions with rho substituted for the affine index.
inline LinkInvariants cut_invariants(const LinkCode& code) {
  std::map<int, RhoPair> table = rho(code);
  LinkInvariants inv;
  for (const auto& [id, pair] : table)
    detail::accumulate_link_invariants(inv, code.signs.at(id), pair.over,
                                       pair.under);
  return inv;
}

enum class CutMove { insert, erase };

// Cut point move I: insertion or deletion of an adjacent opposite pair on
// one arc.  Validity and every RhoPair are preserved.
inline LinkCode cut_move_one(const LinkCode& code, int component, int position,
                             CutMove direction, bool coherent_first = true) {
  if (component < 0 || component >= static_cast<int>(code.components.size()))
    throw std::invalid_argument("cut move component out of range");
  LinkCode result = code;
  Component& comp = result.components[component];
  int n = static_cast<int>(comp.size());
  if (direction == CutMove::insert) {
    if (position < 0 || position > n)
      throw std::invalid_argument("cut move position out of range");
    comp.insert(comp.begin() + position,
                {Token::cut(coherent_first), Token::cut(!coherent_first)});
    return result;
  }
  if (position < 0 || position >= n)
    throw std::invalid_argument("cut move position out of range");
  int next = (position + 1) % n;
  if (n < 2 || !comp[position].is_cut() || !comp[next].is_cut() ||
      comp[position].coherent == comp[next].coherent)
    throw std::invalid_argument(
        "cut move delete needs an adjacent opposite pair");
  if (next > position) {
    comp.erase(comp.begin() + next);
    comp.erase(comp.begin() + position);
  } else {
    comp.erase(comp.begin() + position);
    comp.erase(comp.begin() + next);
  }
  return result;
}

}  // namespace aik
