#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "aik/codec.hpp"

namespace aik {

// Sound rewrites on decorated codes.  Every move listed here turns a valid
// code into a valid code describing an equivalent link; the engine is a
// generator of equivalent codes, not a decision procedure.
//
//   R1_insert/delete   kink: adjacent same-crossing pair, either order
//   R2_insert/delete   adjacent over pair [Oa Ob] plus adjacent under pair,
//                      [Ua Ub] (parallel) or [Ub Ua] (antiparallel),
//                      sgn(b) = -sgn(a)
//   R3                 adjacent pairs [Ox Oy] [Ux Oz] [Uy Uz], equal signs,
//                      each pair reversed in place; REV undoes FWD
//   T1_insert/delete   adjacent bar pair
//   T3                 bars just before both passages of a crossing move to
//                      just after them and the passage roles toggle
//   rotate/relabel     representation changes only (virtual moves and
//                      twisted move II do not alter the code; these stand
//                      in for them in logs)
//
// Deletes refuse to empty a component, so serialized output stays
// parseable.  Insert positions refer to token boundaries of the input code.
enum class MoveKind {
  r1_insert,
  r1_delete,
  r2_insert,
  r2_delete,
  r3,
  t1_insert,
  t1_delete,
  t3,
  rotate,
  relabel,
};

struct MoveSpec {
  MoveKind kind = MoveKind::rotate;
  int component = 0;
  int position = 0;
  int component2 = 0;
  int position2 = 0;
  int id_a = 0;
  int id_b = 0;
  int id_c = 0;
  int sign = 1;
  int variant = 0;  // r1: 0=[O U] 1=[U O]; r2: 0=parallel 1=antiparallel;
                    // r3/t3: 0=forward 1=reverse
  std::uint64_t seed = 0;

  std::string to_line() const {
    std::ostringstream out;
    switch (kind) {
      case MoveKind::r1_insert:
        out << "R1_INSERT " << component << ' ' << position << ' ' << id_a
            << ' ' << (sign > 0 ? "+" : "-") << ' '
            << (variant == 0 ? "OU" : "UO");
        break;
      case MoveKind::r1_delete:
        out << "R1_DELETE " << id_a;
        break;
      case MoveKind::r2_insert:
        out << "R2_INSERT " << component << ' ' << position << ' '
            << component2 << ' ' << position2 << ' ' << id_a << ' ' << id_b
            << ' ' << (sign > 0 ? "+" : "-") << ' '
            << (variant == 0 ? "PAR" : "ANTI");
        break;
      case MoveKind::r2_delete:
        out << "R2_DELETE " << id_a << ' ' << id_b;
        break;
      case MoveKind::r3:
        out << "R3 " << id_a << ' ' << id_b << ' ' << id_c << ' '
            << (variant == 0 ? "FWD" : "REV");
        break;
      case MoveKind::t1_insert:
        out << "T1_INSERT " << component << ' ' << position;
        break;
      case MoveKind::t1_delete:
        out << "T1_DELETE " << component << ' ' << position;
        break;
      case MoveKind::t3:
        out << "T3 " << id_a << ' ' << (variant == 0 ? "FWD" : "REV");
        break;
      case MoveKind::rotate:
        out << "ROTATE " << component << ' ' << position;
        break;
      case MoveKind::relabel:
        out << "RELABEL " << seed;
        break;
    }
    return out.str();
  }

  static MoveSpec from_line(const std::string& line) {
    std::istringstream in(line);
    std::string kind;
    if (!(in >> kind)) throw std::invalid_argument("empty move line");
    MoveSpec m;
    auto need = [&](auto&... field) {
      if (!((in >> field) && ...))
        throw std::invalid_argument("bad move line: " + line);
    };
    auto sign_of = [&](const std::string& word) {
      if (word == "+") return 1;
      if (word == "-") return -1;
      throw std::invalid_argument("bad sign in move line: " + line);
    };
    auto variant_of = [&](const std::string& word, const char* zero,
                          const char* one) {
      if (word == zero) return 0;
      if (word == one) return 1;
      throw std::invalid_argument("bad variant in move line: " + line);
    };
    std::string word, word2;
    if (kind == "R1_INSERT") {
      m.kind = MoveKind::r1_insert;
      need(m.component, m.position, m.id_a, word, word2);
      m.sign = sign_of(word);
      m.variant = variant_of(word2, "OU", "UO");
    } else if (kind == "R1_DELETE") {
      m.kind = MoveKind::r1_delete;
      need(m.id_a);
    } else if (kind == "R2_INSERT") {
      m.kind = MoveKind::r2_insert;
      need(m.component, m.position, m.component2, m.position2, m.id_a, m.id_b,
           word, word2);
      m.sign = sign_of(word);
      m.variant = variant_of(word2, "PAR", "ANTI");
    } else if (kind == "R2_DELETE") {
      m.kind = MoveKind::r2_delete;
      need(m.id_a, m.id_b);
    } else if (kind == "R3") {
      m.kind = MoveKind::r3;
      need(m.id_a, m.id_b, m.id_c, word);
      m.variant = variant_of(word, "FWD", "REV");
    } else if (kind == "T1_INSERT") {
      m.kind = MoveKind::t1_insert;
      need(m.component, m.position);
    } else if (kind == "T1_DELETE") {
      m.kind = MoveKind::t1_delete;
      need(m.component, m.position);
    } else if (kind == "T3") {
      m.kind = MoveKind::t3;
      need(m.id_a, word);
      m.variant = variant_of(word, "FWD", "REV");
    } else if (kind == "ROTATE") {
      m.kind = MoveKind::rotate;
      need(m.component, m.position);
    } else if (kind == "RELABEL") {
      m.kind = MoveKind::relabel;
      need(m.seed);
    } else {
      throw std::invalid_argument("unknown move kind: " + kind);
    }
    return m;
  }
};

namespace detail {

inline void check_component(const LinkCode& code, int k) {
  if (k < 0 || k >= static_cast<int>(code.components.size()))
    throw std::invalid_argument("move component out of range");
}

inline void check_insert_pos(const Component& comp, int pos) {
  if (pos < 0 || pos > static_cast<int>(comp.size()))
    throw std::invalid_argument("move position out of range");
}

inline void check_fresh(const LinkCode& code, int id) {
  if (id < 1 || code.signs.count(id))
    throw std::invalid_argument("move needs a fresh crossing id");
}

inline TokenPos find_passage(const LinkCode& code, int id, Role role) {
  for (int k = 0; k < static_cast<int>(code.components.size()); ++k) {
    const Component& comp = code.components[k];
    for (int i = 0; i < static_cast<int>(comp.size()); ++i)
      if (comp[i] == Token::passage(role, id)) return {k, i};
  }
  throw std::invalid_argument("move crossing not in code");
}

inline const Token& next_token(const LinkCode& code, TokenPos pos) {
  const Component& comp = code.components[pos.component];
  return comp[(pos.index + 1) % comp.size()];
}

inline const Token& prev_token(const LinkCode& code, TokenPos pos) {
  const Component& comp = code.components[pos.component];
  return comp[(pos.index + comp.size() - 1) % comp.size()];
}

// Erase tokens at the given positions, failing if a component would end up
// empty.  Positions must be distinct.
inline void erase_tokens(LinkCode& code, std::vector<TokenPos> positions) {
  std::map<int, int> removed;
  for (const TokenPos& p : positions) removed[p.component]++;
  for (const auto& [k, n] : removed)
    if (static_cast<int>(code.components[k].size()) <= n)
      throw std::invalid_argument("move would empty a component");
  std::sort(positions.begin(), positions.end(), [](auto a, auto b) {
    return std::pair(a.component, a.index) > std::pair(b.component, b.index);
  });
  for (const TokenPos& p : positions)
    code.components[p.component].erase(code.components[p.component].begin() +
                                       p.index);
}

}  // namespace detail

inline LinkCode apply_move(const LinkCode& code, const MoveSpec& m) {
  LinkCode out = code;
  switch (m.kind) {
    case MoveKind::r1_insert: {
      detail::check_component(out, m.component);
      Component& comp = out.components[m.component];
      detail::check_insert_pos(comp, m.position);
      detail::check_fresh(out, m.id_a);
      if (m.sign != 1 && m.sign != -1)
        throw std::invalid_argument("move sign must be +1 or -1");
      Token first = Token::passage(m.variant == 0 ? Role::over : Role::under,
                                   m.id_a);
      Token second = Token::passage(m.variant == 0 ? Role::under : Role::over,
                                    m.id_a);
      comp.insert(comp.begin() + m.position, {first, second});
      out.signs[m.id_a] = m.sign;
      return out;
    }
    case MoveKind::r1_delete: {
      TokenPos over = detail::find_passage(out, m.id_a, Role::over);
      TokenPos under = detail::find_passage(out, m.id_a, Role::under);
      int n = static_cast<int>(out.components[over.component].size());
      bool adjacent = over.component == under.component &&
                      ((over.index + 1) % n == under.index ||
                       (under.index + 1) % n == over.index);
      if (!adjacent)
        throw std::invalid_argument("kink delete needs an adjacent pair");
      detail::erase_tokens(out, {over, under});
      out.signs.erase(m.id_a);
      return out;
    }
    case MoveKind::r2_insert: {
      detail::check_component(out, m.component);
      detail::check_component(out, m.component2);
      detail::check_insert_pos(out.components[m.component], m.position);
      detail::check_insert_pos(out.components[m.component2], m.position2);
      detail::check_fresh(out, m.id_a);
      detail::check_fresh(out, m.id_b);
      if (m.id_a == m.id_b)
        throw std::invalid_argument("move needs two fresh crossing ids");
      if (m.sign != 1 && m.sign != -1)
        throw std::invalid_argument("move sign must be +1 or -1");
      std::vector<Token> overs = {Token::passage(Role::over, m.id_a),
                                  Token::passage(Role::over, m.id_b)};
      std::vector<Token> unders = {Token::passage(Role::under, m.id_a),
                                   Token::passage(Role::under, m.id_b)};
      if (m.variant == 1) std::swap(unders[0], unders[1]);
      auto insert = [&](int k, int pos, const std::vector<Token>& pair) {
        Component& comp = out.components[k];
        comp.insert(comp.begin() + pos, pair.begin(), pair.end());
      };
      // On a shared component the later boundary is filled first so both
      // positions refer to the input code; at a shared position the over
      // pair ends up in front.
      if (m.component == m.component2 && m.position > m.position2) {
        insert(m.component, m.position, overs);
        insert(m.component2, m.position2, unders);
      } else {
        insert(m.component2, m.position2, unders);
        insert(m.component, m.position, overs);
      }
      out.signs[m.id_a] = m.sign;
      out.signs[m.id_b] = -m.sign;
      return out;
    }
    case MoveKind::r2_delete: {
      TokenPos over_a = detail::find_passage(out, m.id_a, Role::over);
      TokenPos under_a = detail::find_passage(out, m.id_a, Role::under);
      TokenPos under_b = detail::find_passage(out, m.id_b, Role::under);
      if (detail::next_token(out, over_a) != Token::passage(Role::over, m.id_b))
        throw std::invalid_argument("pair delete needs adjacent over passages");
      const Token& after_a = detail::next_token(out, under_a);
      const Token& after_b = detail::next_token(out, under_b);
      bool parallel = after_a == Token::passage(Role::under, m.id_b);
      bool antiparallel = after_b == Token::passage(Role::under, m.id_a);
      if (!parallel && !antiparallel)
        throw std::invalid_argument("pair delete needs adjacent under passages");
      if (out.signs.at(m.id_a) != -out.signs.at(m.id_b))
        throw std::invalid_argument("pair delete needs opposite signs");
      TokenPos over_b = detail::find_passage(out, m.id_b, Role::over);
      detail::erase_tokens(out, {over_a, over_b, under_a, under_b});
      out.signs.erase(m.id_a);
      out.signs.erase(m.id_b);
      return out;
    }
    case MoveKind::r3: {
      int x = m.id_a, y = m.id_b, z = m.id_c;
      if (x == y || y == z || x == z)
        throw std::invalid_argument("triangle move needs distinct crossings");
      if (out.signs.at(x) != out.signs.at(y) ||
          out.signs.at(y) != out.signs.at(z))
        throw std::invalid_argument("triangle move needs equal signs");
      bool fwd = m.variant == 0;
      TokenPos p1 = detail::find_passage(out, fwd ? x : y, Role::over);
      TokenPos p2 = fwd ? detail::find_passage(out, x, Role::under)
                        : detail::find_passage(out, z, Role::over);
      TokenPos p3 = detail::find_passage(out, fwd ? y : z, Role::under);
      Token want1 = Token::passage(Role::over, fwd ? y : x);
      Token want2 = fwd ? Token::passage(Role::over, z)
                        : Token::passage(Role::under, x);
      Token want3 = Token::passage(Role::under, fwd ? z : y);
      if (detail::next_token(out, p1) != want1 ||
          detail::next_token(out, p2) != want2 ||
          detail::next_token(out, p3) != want3)
        throw std::invalid_argument("triangle move pattern not present");
      for (TokenPos p : {p1, p2, p3}) {
        Component& comp = out.components[p.component];
        std::swap(comp[p.index], comp[(p.index + 1) % comp.size()]);
      }
      return out;
    }
    case MoveKind::t1_insert: {
      detail::check_component(out, m.component);
      Component& comp = out.components[m.component];
      detail::check_insert_pos(comp, m.position);
      comp.insert(comp.begin() + m.position, {Token::bar(), Token::bar()});
      return out;
    }
    case MoveKind::t1_delete: {
      detail::check_component(out, m.component);
      Component& comp = out.components[m.component];
      int n = static_cast<int>(comp.size());
      if (n < 2 || m.position < 0 || m.position >= n)
        throw std::invalid_argument("move position out of range");
      int next = (m.position + 1) % n;
      if (!comp[m.position].is_bar() || !comp[next].is_bar())
        throw std::invalid_argument("bar delete needs an adjacent bar pair");
      detail::erase_tokens(
          out, {{m.component, m.position}, {m.component, next}});
      return out;
    }
    case MoveKind::t3: {
      TokenPos over = detail::find_passage(out, m.id_a, Role::over);
      TokenPos under = detail::find_passage(out, m.id_a, Role::under);
      bool fwd = m.variant == 0;
      auto neighbor_is_bar = [&](TokenPos p) {
        return (fwd ? detail::prev_token(out, p) : detail::next_token(out, p))
            .is_bar();
      };
      if (!neighbor_is_bar(over) || !neighbor_is_bar(under))
        throw std::invalid_argument(
            "bar slide needs bars beside both passages");
      for (TokenPos p : {over, under}) {
        Component& comp = out.components[p.component];
        int n = static_cast<int>(comp.size());
        int bar = fwd ? (p.index + n - 1) % n : (p.index + 1) % n;
        Token passage = comp[p.index];
        passage.role = passage.role == Role::over ? Role::under : Role::over;
        comp[bar] = passage;
        comp[p.index] = Token::bar();
      }
      return out;
    }
    case MoveKind::rotate: {
      detail::check_component(out, m.component);
      Component& comp = out.components[m.component];
      if (comp.empty()) return out;
      int r = ((m.position % static_cast<int>(comp.size())) +
               static_cast<int>(comp.size())) %
              static_cast<int>(comp.size());
      std::rotate(comp.begin(), comp.begin() + r, comp.end());
      return out;
    }
    case MoveKind::relabel: {
      std::vector<int> ids;
      for (const auto& [id, sign] : out.signs) ids.push_back(id);
      std::vector<int> to = ids;
      std::mt19937_64 rng(m.seed);
      std::shuffle(to.begin(), to.end(), rng);
      std::map<int, int> rename;
      for (std::size_t i = 0; i < ids.size(); ++i) rename[ids[i]] = to[i];
      std::map<int, int> signs;
      for (const auto& [id, sign] : out.signs) signs[rename[id]] = sign;
      out.signs = std::move(signs);
      for (Component& comp : out.components)
        for (Token& t : comp)
          if (t.is_passage()) t.crossing = rename[t.crossing];
      return out;
    }
  }
  throw std::invalid_argument("unknown move kind");
}

namespace detail {

// Kinks whose deletion keeps the component nonempty.
inline std::vector<int> find_kink_sites(const LinkCode& code) {
  std::vector<int> sites;
  for (const auto& [id, pos] : locate_passages(code)) {
    if (pos.over.component != pos.under.component) continue;
    const Component& comp = code.components[pos.over.component];
    int n = static_cast<int>(comp.size());
    if (n <= 2) continue;
    if ((pos.over.index + 1) % n == pos.under.index ||
        (pos.under.index + 1) % n == pos.over.index)
      sites.push_back(id);
  }
  return sites;
}

// Opposite-sign pairs with adjacent over passages [Oa Ob] and adjacent
// under passages in either order, removable without emptying a component.
inline std::vector<std::pair<int, int>> find_pair_sites(const LinkCode& code) {
  std::vector<std::pair<int, int>> sites;
  auto where = locate_passages(code);
  for (const auto& [a, pos] : where) {
    const Component& over_comp = code.components[pos.over.component];
    const Token& next = over_comp[(pos.over.index + 1) % over_comp.size()];
    if (!next.is_over() || next.crossing == a) continue;
    int b = next.crossing;
    if (code.signs.at(a) != -code.signs.at(b)) continue;
    TokenPos ua = where.at(a).under;
    TokenPos ub = where.at(b).under;
    const Component& cu_a = code.components[ua.component];
    const Component& cu_b = code.components[ub.component];
    bool parallel = cu_a[(ua.index + 1) % cu_a.size()] ==
                    Token::passage(Role::under, b);
    bool antiparallel = cu_b[(ub.index + 1) % cu_b.size()] ==
                        Token::passage(Role::under, a);
    if (!parallel && !antiparallel) continue;
    std::map<int, int> removed;
    removed[pos.over.component] += 2;
    removed[ua.component] += 2;
    bool safe = true;
    for (const auto& [k, cnt] : removed)
      if (static_cast<int>(code.components[k].size()) <= cnt) safe = false;
    if (safe) sites.emplace_back(a, b);
  }
  return sites;
}

struct TriangleSite {
  int x, y, z, variant;
};

inline std::vector<TriangleSite> find_triangle_sites(const LinkCode& code) {
  std::vector<TriangleSite> sites;
  auto where = locate_passages(code);
  auto around = [&](TokenPos p, int step) -> const Token& {
    const Component& comp = code.components[p.component];
    int n = static_cast<int>(comp.size());
    return comp[(p.index + step + n) % n];
  };
  auto equal_signs = [&](int x, int y, int z) {
    return code.signs.at(x) == code.signs.at(y) &&
           code.signs.at(y) == code.signs.at(z);
  };
  for (int k = 0; k < static_cast<int>(code.components.size()); ++k) {
    const Component& comp = code.components[k];
    int n = static_cast<int>(comp.size());
    for (int i = 0; i < n; ++i) {
      const Token& first = comp[i];
      const Token& second = comp[(i + 1) % n];
      if (!first.is_over() || !second.is_over()) continue;
      {
        int x = first.crossing, y = second.crossing;
        const Token& mid = around(where.at(x).under, 1);
        if (mid.is_over() && mid.crossing != x && mid.crossing != y &&
            equal_signs(x, y, mid.crossing) &&
            around(where.at(y).under, 1) ==
                Token::passage(Role::under, mid.crossing))
          sites.push_back({x, y, mid.crossing, 0});
      }
      {
        int y = first.crossing, x = second.crossing;
        const Token& mid = around(where.at(x).under, -1);
        if (mid.is_over() && mid.crossing != x && mid.crossing != y &&
            equal_signs(x, y, mid.crossing) &&
            around(where.at(y).under, -1) ==
                Token::passage(Role::under, mid.crossing))
          sites.push_back({x, y, mid.crossing, 1});
      }
    }
  }
  return sites;
}

// Adjacent bar pairs whose deletion keeps the component nonempty.
inline std::vector<std::pair<int, int>> find_bar_pair_sites(
    const LinkCode& code) {
  std::vector<std::pair<int, int>> sites;
  for (int k = 0; k < static_cast<int>(code.components.size()); ++k) {
    const Component& comp = code.components[k];
    int n = static_cast<int>(comp.size());
    if (n <= 2) continue;
    for (int i = 0; i < n; ++i)
      if (comp[i].is_bar() && comp[(i + 1) % n].is_bar())
        sites.emplace_back(k, i);
  }
  return sites;
}

// (crossing, variant) sites where both passages have a bar on the matching
// side.
inline std::vector<std::pair<int, int>> find_bar_slide_sites(
    const LinkCode& code) {
  std::vector<std::pair<int, int>> sites;
  for (const auto& [id, pos] : locate_passages(code)) {
    auto around = [&](TokenPos p, int step) -> const Token& {
      const Component& comp = code.components[p.component];
      int n = static_cast<int>(comp.size());
      return comp[(p.index + step + n) % n];
    };
    if (around(pos.over, -1).is_bar() && around(pos.under, -1).is_bar())
      sites.emplace_back(id, 0);
    if (around(pos.over, 1).is_bar() && around(pos.under, 1).is_bar())
      sites.emplace_back(id, 1);
  }
  return sites;
}

}  // namespace detail

enum class MoveSet { virtual_only, twisted };

struct EquivalenceResult {
  LinkCode code;
  std::vector<MoveSpec> log;
};

// Apply `steps` random applicable moves.  Insert kinds carry twice the
// weight of the others; the site within a kind is uniform.  Deterministic
// per (code, steps, seed); the returned log replays exactly via apply_move.
inline EquivalenceResult random_equivalent(const LinkCode& input, int steps,
                                           std::uint64_t seed,
                                           MoveSet set = MoveSet::virtual_only) {
  EquivalenceResult result{input, {}};
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  for (int step = 0; step < steps; ++step) {
    const LinkCode& code = result.code;
    bool twisted = set == MoveSet::twisted;
    auto kinks = detail::find_kink_sites(code);
    auto pairs = detail::find_pair_sites(code);
    auto triangles = detail::find_triangle_sites(code);
    std::vector<std::pair<int, int>> bar_pairs, bar_slides;
    if (twisted) {
      bar_pairs = detail::find_bar_pair_sites(code);
      bar_slides = detail::find_bar_slide_sites(code);
    }
    std::vector<int> rotatable;
    for (int k = 0; k < static_cast<int>(code.components.size()); ++k)
      if (!code.components[k].empty()) rotatable.push_back(k);

    struct Category {
      MoveKind kind;
      int weight;
    };
    std::vector<Category> categories;
    if (!code.components.empty()) {
      categories.push_back({MoveKind::r1_insert, 2});
      categories.push_back({MoveKind::r2_insert, 2});
      if (twisted) categories.push_back({MoveKind::t1_insert, 2});
    }
    if (!kinks.empty()) categories.push_back({MoveKind::r1_delete, 1});
    if (!pairs.empty()) categories.push_back({MoveKind::r2_delete, 1});
    if (!triangles.empty()) categories.push_back({MoveKind::r3, 1});
    if (!bar_pairs.empty()) categories.push_back({MoveKind::t1_delete, 1});
    if (!bar_slides.empty()) categories.push_back({MoveKind::t3, 1});
    if (!rotatable.empty()) categories.push_back({MoveKind::rotate, 1});
    if (!code.signs.empty()) categories.push_back({MoveKind::relabel, 1});
    if (categories.empty()) break;

    int total = 0;
    for (const Category& c : categories) total += c.weight;
    int roll = static_cast<int>(pick(static_cast<std::size_t>(total)));
    MoveKind kind = categories.back().kind;
    for (const Category& c : categories) {
      if (roll < c.weight) {
        kind = c.kind;
        break;
      }
      roll -= c.weight;
    }

    MoveSpec m;
    m.kind = kind;
    switch (kind) {
      case MoveKind::r1_insert: {
        m.component = static_cast<int>(pick(code.components.size()));
        m.position = static_cast<int>(
            pick(code.components[m.component].size() + 1));
        m.id_a = code.max_crossing_id() + 1;
        m.sign = pick(2) ? 1 : -1;
        m.variant = static_cast<int>(pick(2));
        break;
      }
      case MoveKind::r2_insert: {
        m.component = static_cast<int>(pick(code.components.size()));
        m.position = static_cast<int>(
            pick(code.components[m.component].size() + 1));
        m.component2 = static_cast<int>(pick(code.components.size()));
        m.position2 = static_cast<int>(
            pick(code.components[m.component2].size() + 1));
        m.id_a = code.max_crossing_id() + 1;
        m.id_b = code.max_crossing_id() + 2;
        m.sign = pick(2) ? 1 : -1;
        m.variant = static_cast<int>(pick(2));
        break;
      }
      case MoveKind::r1_delete:
        m.id_a = kinks[pick(kinks.size())];
        break;
      case MoveKind::r2_delete: {
        auto [a, b] = pairs[pick(pairs.size())];
        m.id_a = a;
        m.id_b = b;
        break;
      }
      case MoveKind::r3: {
        detail::TriangleSite site = triangles[pick(triangles.size())];
        m.id_a = site.x;
        m.id_b = site.y;
        m.id_c = site.z;
        m.variant = site.variant;
        break;
      }
      case MoveKind::t1_insert: {
        m.component = static_cast<int>(pick(code.components.size()));
        m.position = static_cast<int>(
            pick(code.components[m.component].size() + 1));
        break;
      }
      case MoveKind::t1_delete: {
        auto [k, i] = bar_pairs[pick(bar_pairs.size())];
        m.component = k;
        m.position = i;
        break;
      }
      case MoveKind::t3: {
        auto [id, variant] = bar_slides[pick(bar_slides.size())];
        m.id_a = id;
        m.variant = variant;
        break;
      }
      case MoveKind::rotate: {
        m.component = rotatable[pick(rotatable.size())];
        m.position = static_cast<int>(
            pick(code.components[m.component].size()));
        break;
      }
      case MoveKind::relabel:
        m.seed = rng();
        break;
    }
    LinkCode next = apply_move(result.code, m);
    result.code = std::move(next);
    result.log.push_back(m);
  }
  return result;
}

}  // namespace aik
