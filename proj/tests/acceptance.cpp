// Release gate: one self-contained check per line of output.  Each check
// prints PASS or FAIL with its budget; the exit code is the number of
// failures.  Checks use fixed seeds so failures reproduce exactly.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "aik/aik.hpp"
#include "support/random_codes.hpp"

using namespace aik;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& name, bool ok, double elapsed_ms,
            double budget_ms, const std::string& detail = "") {
  bool in_budget = elapsed_ms <= budget_ms;
  if (ok && in_budget) {
    std::printf("PASS  %-52s %8.1f ms (budget %.0f ms)\n", name.c_str(),
                elapsed_ms, budget_ms);
    return;
  }
  ++failures;
  std::printf("FAIL  %-52s %8.1f ms (budget %.0f ms)%s%s\n", name.c_str(),
              elapsed_ms, budget_ms, detail.empty() ? "" : " - ",
              detail.c_str());
}

template <typename Body>
void check(const std::string& name, double budget_ms, Body body) {
  std::string detail;
  auto start = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double elapsed =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  report(name, ok, elapsed, budget_ms, detail);
}

std::vector<LinkCode> knot_corpus(std::uint64_t seed, int count,
                                  int max_crossings) {
  std::mt19937_64 rng(seed);
  std::vector<LinkCode> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i)
    corpus.push_back(testsupport::random_knot(rng, max_crossings));
  return corpus;
}

std::vector<LinkCode> link_corpus(std::uint64_t seed, int count,
                                  int max_crossings, int max_components) {
  std::mt19937_64 rng(seed);
  std::vector<LinkCode> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i)
    corpus.push_back(
        testsupport::random_link(rng, max_crossings, max_components));
  return corpus;
}

bool same_link_invariants(const LinkInvariants& a, const LinkInvariants& b) {
  return a.over_writhes == b.over_writhes &&
         a.under_writhes == b.under_writhes && a.over_poly == b.over_poly &&
         a.under_poly == b.under_poly &&
         a.over_under_poly == b.over_under_poly;
}

}  // namespace

int main() {
  const std::vector<LinkCode> knots = knot_corpus(1001, 1000, 20);
  const std::vector<LinkCode> links = link_corpus(1002, 500, 12, 3);

  check("two-crossing knot oracle values", 1.0, [](std::string& detail) {
    LinkCode vt = parse("O1+ O2+ U1+ U2+");
    LaurentPoly t = LaurentPoly::monomial(0, 1, 1);
    LaurentPoly ti = LaurentPoly::monomial(0, -1, 1);
    LaurentPoly s = LaurentPoly::monomial(1, 0, 1);
    LaurentPoly si = LaurentPoly::monomial(-1, 0, 1);
    LaurentPoly one = LaurentPoly::constant(1);
    LaurentPoly p = t + ti - 2 * one;

    if (n_writhes_knot(vt) != WritheTable{{-1, 1}, {1, 1}}) {
      detail = "J table mismatch";
      return false;
    }
    if (affine_index_polynomial_knot(vt) != p) {
      detail = "P mismatch";
      return false;
    }
    LinkInvariants inv = link_invariants(vt);
    if (inv.over_poly != p || inv.under_poly != p) {
      detail = "PO/PU mismatch";
      return false;
    }
    if (inv.over_under_poly != (si - one) * (t - one) + (s - one) * (ti - one)) {
      detail = "POU mismatch";
      return false;
    }
    if (q_polynomial(vt) != 2 * ((s - one) * (s - one))) {
      detail = "Q mismatch";
      return false;
    }
    return true;
  });

  check("knot indices satisfy L=-R and O=-U", 5000.0,
        [&](std::string& detail) {
          for (const LinkCode& code : knots)
            for (const auto& [id, q] : affine_indices(code))
              if (q.left != -q.right || q.over != -q.under) {
                detail = "crossing " + std::to_string(id) + " in " +
                         serialize(code);
                return false;
              }
          return true;
        });

  check("knot polynomial coefficients equal mirrored writhes", 5000.0,
        [&](std::string& detail) {
          for (const LinkCode& code : knots) {
            WritheTable j = n_writhes_knot(code);
            LaurentPoly p = affine_index_polynomial_knot(code);
            long long total = 0;
            for (auto [n, v] : j) total += v;
            for (const auto& [e, c] : p.terms()) {
              long long expected =
                  e.second == 0 ? -total : (j.count(-e.second) ? j.at(-e.second) : 0);
              if (c != expected) {
                detail = "coefficient t^" + std::to_string(e.second) + " in " +
                         serialize(code);
                return false;
              }
            }
            for (auto [n, v] : j)
              if (p.coeff(0, static_cast<int>(-n)) != v) {
                detail = "missing coefficient in " + serialize(code);
                return false;
              }
          }
          return true;
        });

  check("link invariants survive 500 x 50 random moves", 30000.0,
        [&](std::string& detail) {
          std::mt19937_64 rng(1004);
          for (const LinkCode& code : links) {
            LinkInvariants before = link_invariants(code);
            EquivalenceResult walk = random_equivalent(code, 50, rng());
            if (!validate(walk.code).ok()) {
              detail = "invalid code after walk from " + serialize(code);
              return false;
            }
            if (!same_link_invariants(before, link_invariants(walk.code))) {
              detail = "invariants changed for " + serialize(code);
              return false;
            }
          }
          return true;
        });

  check("binary cut system reproduces the affine indices", 10000.0,
        [&](std::string& detail) {
          auto codes = links;
          for (const auto& k : knots) {
            codes.push_back(k);
            if (codes.size() >= 1000) break;
          }
          for (const LinkCode& code : codes) {
            auto table = rho(binary_cut_system(code));
            auto quads = affine_indices(code);
            if (table.size() != quads.size()) {
              detail = "crossing set mismatch for " + serialize(code);
              return false;
            }
            for (const auto& [id, pair] : table)
              if (pair.over != quads.at(id).over ||
                  pair.under != quads.at(id).under) {
                detail = "rho mismatch at crossing " + std::to_string(id) +
                         " of " + serialize(code);
                return false;
              }
          }
          return true;
        });

  check("random cut systems agree across 10 seeds per code", 20000.0,
        [&](std::string& detail) {
          std::mt19937_64 rng(1006);
          for (int i = 0; i < 100; ++i) {
            const LinkCode& code = links[i % links.size()];
            auto reference = rho(binary_cut_system(code));
            LinkInvariants expected = link_invariants(code);
            for (int s = 0; s < 10; ++s) {
              LinkCode cut_code = random_cut_system(code, rng());
              long long balance = 0;
              for (const auto& comp : cut_code.components)
                for (const Token& t : comp)
                  if (t.is_cut()) balance += t.coherent ? 1 : -1;
              if (balance != 0) {
                detail = "unbalanced cuts for " + serialize(code);
                return false;
              }
              auto table = rho(cut_code);
              if (table.size() != reference.size()) {
                detail = "rho table size for " + serialize(code);
                return false;
              }
              for (const auto& [id, pair] : table)
                if (pair.over != reference.at(id).over ||
                    pair.under != reference.at(id).under) {
                  detail = "rho differs at seed " + std::to_string(s);
                  return false;
                }
              if (!same_link_invariants(cut_invariants(cut_code), expected)) {
                detail = "cut invariants differ for " + serialize(code);
                return false;
              }
            }
          }
          return true;
        });

  check("numberable knots have vanishing or filtered writhes", 10000.0,
        [&](std::string& detail) {
          for (const LinkCode& code : knots) {
            NumberingImplications r = numbering_implications(code);
            if (!r.all_hold()) {
              detail = "implication fails for " + serialize(code);
              return false;
            }
          }
          return true;
        });

  check("framing splits the invariants by component", 10000.0,
        [&](std::string& detail) {
          for (const LinkCode& code : links) {
            LinkingData linking = linking_data(code);
            for (const auto& [id, info] : crossing_info(code))
              if (info.self && info.ind.over + info.ind.under !=
                                  linking.lambda[info.over_component]) {
                detail = "index sum differs from framing in " + serialize(code);
                return false;
              }
            LinkInvariants global = link_invariants(code);
            LaurentPoly po, pu, pou;
            for (const auto& ci : component_split(code)) {
              po += ci.over_poly;
              pu += ci.under_poly;
              pou += ci.over_under_poly;
            }
            if (po != global.over_poly || pu != global.under_poly ||
                pou != global.over_under_poly) {
              detail = "component polynomials do not sum up in " +
                       serialize(code);
              return false;
            }
          }
          for (const LinkCode& code : knots) {
            auto split = component_split(code);
            if (split.size() != 1 ||
                split[0].under_poly != split[0].over_poly.invert(Var::t)) {
              detail = "knot split identity fails for " + serialize(code);
              return false;
            }
          }
          return true;
        });

  check("twisted invariants survive 500 x 50 random moves", 60000.0,
        [&](std::string& detail) {
          std::mt19937_64 rng(1009);
          bool saw_bar_insert = false, saw_bar_slide = false;
          for (int trial = 0; trial < 500; ++trial) {
            LinkCode code = testsupport::random_twisted(rng, 15, 3, 6);
            std::string before =
                fingerprint(code, InvariantScope::twisted_link);
            EquivalenceResult walk =
                random_equivalent(code, 50, rng(), MoveSet::twisted);
            for (const MoveSpec& m : walk.log) {
              saw_bar_insert = saw_bar_insert ||
                               m.kind == MoveKind::t1_insert ||
                               m.kind == MoveKind::t1_delete;
              saw_bar_slide = saw_bar_slide || m.kind == MoveKind::t3;
            }
            if (!validate(walk.code).ok()) {
              detail = "invalid code after walk from " + serialize(code);
              return false;
            }
            if (fingerprint(walk.code, InvariantScope::twisted_link) !=
                before) {
              detail = "twisted fingerprint changed for " + serialize(code);
              return false;
            }
            int expected_cover = 0;
            for (const auto& comp : walk.code.components) {
              int bars = 0;
              for (const Token& t : comp)
                if (t.is_bar()) ++bars;
              expected_cover += (bars % 2 == 1) ? 1 : 2;
            }
            if (static_cast<int>(double_cover(walk.code).components.size()) !=
                expected_cover) {
              detail = "cover component law fails for " + serialize(walk.code);
              return false;
            }
          }
          if (!saw_bar_insert || !saw_bar_slide) {
            detail = "bar moves never exercised";
            return false;
          }
          return true;
        });

  check("twisted oracle values and cover polynomial law", 5000.0,
        [&](std::string& detail) {
          LinkCode barred = parse("O1+ O2+ U1+ U2+ |");
          LaurentPoly s = LaurentPoly::monomial(1, 0, 1);
          LaurentPoly st = LaurentPoly::monomial(1, 1, 1);
          LaurentPoly one = LaurentPoly::constant(1);
          if (q_polynomial(barred) != 2 * ((s - one) * (st - one))) {
            detail = "Q mismatch on barred code";
            return false;
          }
          TildeInvariants tilde = tilde_invariants(barred);
          if (!tilde.odd_type || !*tilde.odd_type) {
            detail = "barred code should have odd type";
            return false;
          }
          LaurentPoly t = LaurentPoly::monomial(0, 1, 1);
          LaurentPoly ti = LaurentPoly::monomial(0, -1, 1);
          if (!tilde.cover_knot_poly ||
              *tilde.cover_knot_poly != 2 * (t + ti - 2 * one)) {
            detail = "cover polynomial mismatch on barred code";
            return false;
          }
          for (int i = 0; i < 200; ++i) {
            const LinkCode& code = links[i];
            LinkInvariants base = link_invariants(code);
            TildeInvariants cover = tilde_invariants(code);
            if (cover.cover.over_poly !=
                base.over_poly + base.under_poly.invert(Var::t)) {
              detail = "cover polynomial law fails for " + serialize(code);
              return false;
            }
          }
          return true;
        });

  if (failures == 0)
    std::printf("all checks passed\n");
  else
    std::printf("%d check(s) failed\n", failures);
  return failures;
}
