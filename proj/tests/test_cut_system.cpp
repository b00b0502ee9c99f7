#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "aik/cut_system.hpp"
#include "aik/codec.hpp"
#include "support/random_codes.hpp"

using namespace aik;

namespace {

long long coherent_minus_incoherent(const LinkCode& code) {
  long long total = 0;
  for (const auto& comp : code.components)
    for (const Token& t : comp)
      if (t.is_cut()) total += t.coherent ? 1 : -1;
  return total;
}

void require_matches_indices(const LinkCode& cut_code, const LinkCode& base) {
  REQUIRE(solve_numbering(cut_code).solved);
  auto table = rho(cut_code);
  auto quads = affine_indices(base);
  REQUIRE(table.size() == quads.size());
  for (const auto& [id, pair] : table) {
    REQUIRE(pair.over == quads.at(id).over);
    REQUIRE(pair.under == quads.at(id).under);
  }
}

}  // namespace

TEST_CASE("binary cut system of the two-crossing knot") {
  LinkCode vt = parse("O1+ O2+ U1+ U2+");
  REQUIRE(serialize(binary_cut_system(vt)) == "O1+ > O2+ > < U1+ < U2+");
  REQUIRE(serialize(binary_cut_system(parse("O1- U1-"))) == "O1- < > U1-");
}

TEST_CASE("level-zero cut system of the two-crossing knot") {
  LinkCode vt = parse("O1+ O2+ U1+ U2+");
  REQUIRE(serialize(cut_system_from_levels(vt, {})) == "O1+ > O2+ U1+ < U2+");
  REQUIRE(serialize(cut_system_from_levels(vt, {{1, 0}, {2, 0}})) ==
          "O1+ > O2+ U1+ < U2+");
}

TEST_CASE("cut generators refuse already-cut codes") {
  LinkCode cut = parse("O1+ > U1+ <");
  REQUIRE_THROWS_AS(binary_cut_system(cut), std::invalid_argument);
  REQUIRE_THROWS_AS(cut_system_from_levels(cut, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(random_cut_system(cut, 1), std::invalid_argument);
}

TEST_CASE("rho of the binary cut system equals the affine indices") {
  LinkCode vt = parse("O1+ O2+ U1+ U2+");
  auto table = rho(binary_cut_system(vt));
  REQUIRE(table.at(1).over == -1);
  REQUIRE(table.at(1).under == 1);
  REQUIRE(table.at(2).over == 1);
  REQUIRE(table.at(2).under == -1);
}

TEST_CASE("rho rejects codes without an integral numbering") {
  REQUIRE_THROWS_MATCHES(rho(parse("O1+ O2+ U1+ U2+")), std::invalid_argument,
                         Catch::Matchers::Message("not a cut system"));
  REQUIRE_THROWS_AS(rho(parse("O1+ U1+ > >")), std::invalid_argument);
}

TEST_CASE("every generator yields a valid cut system matching the indices") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 120; ++trial) {
    LinkCode base = testsupport::random_link(rng, 8, 3);
    require_matches_indices(binary_cut_system(base), base);

    std::map<int, long long> levels;
    for (const auto& [id, sign] : base.signs)
      levels[id] = testsupport::pick_int(rng, -2, 2);
    require_matches_indices(cut_system_from_levels(base, levels), base);

    require_matches_indices(random_cut_system(base, rng()), base);
  }
}

TEST_CASE("cut systems balance coherent and incoherent cuts") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 120; ++trial) {
    LinkCode base = testsupport::random_link(rng, 8, 3);
    REQUIRE(coherent_minus_incoherent(binary_cut_system(base)) == 0);
    REQUIRE(coherent_minus_incoherent(random_cut_system(base, rng())) == 0);
  }
}

TEST_CASE("cut invariants reproduce the affine invariants") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    LinkCode base = testsupport::random_link(rng, 8, 3);
    LinkInvariants expected = link_invariants(base);
    for (LinkCode cut_code :
         {binary_cut_system(base), random_cut_system(base, rng())}) {
      LinkInvariants got = cut_invariants(cut_code);
      REQUIRE(got.over_writhes == expected.over_writhes);
      REQUIRE(got.under_writhes == expected.under_writhes);
      REQUIRE(got.over_poly == expected.over_poly);
      REQUIRE(got.under_poly == expected.under_poly);
      REQUIRE(got.over_under_poly == expected.over_under_poly);
    }
  }
}

TEST_CASE("random cut systems are deterministic per seed") {
  LinkCode base = parse("O1+ U2+ O3+ U1+ O2+ U3+");
  REQUIRE(serialize(random_cut_system(base, 7)) ==
          serialize(random_cut_system(base, 7)));
  bool any_difference = false;
  for (std::uint64_t seed = 0; seed < 10 && !any_difference; ++seed)
    any_difference = serialize(random_cut_system(base, seed)) !=
                     serialize(random_cut_system(base, seed + 1));
  REQUIRE(any_difference);
}

TEST_CASE("pair insertion and deletion preserve rho") {
  LinkCode cut_code = binary_cut_system(parse("O1+ O2+ U1+ U2+"));
  auto before = rho(cut_code);
  LinkCode inserted = cut_move_one(cut_code, 0, 3, CutMove::insert);
  REQUIRE(solve_numbering(inserted).solved);
  auto after = rho(inserted);
  for (const auto& [id, pair] : before) {
    REQUIRE(after.at(id).over == pair.over);
    REQUIRE(after.at(id).under == pair.under);
  }
  LinkCode removed = cut_move_one(inserted, 0, 3, CutMove::erase);
  REQUIRE(removed == cut_code);

  LinkCode reversed = cut_move_one(cut_code, 0, 3, CutMove::insert, false);
  REQUIRE(reversed.components[0][3] == Token::cut(false));
  REQUIRE(reversed.components[0][4] == Token::cut(true));
  REQUIRE(solve_numbering(reversed).solved);
}

TEST_CASE("pair deletion needs an adjacent opposite pair") {
  LinkCode code = parse("O1+ > < U1+");
  REQUIRE_NOTHROW(cut_move_one(code, 0, 1, CutMove::erase));
  REQUIRE_THROWS_AS(cut_move_one(code, 0, 0, CutMove::erase),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(cut_move_one(code, 0, 9, CutMove::erase),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(cut_move_one(code, 5, 0, CutMove::insert),
                    std::invalid_argument);
  LinkCode wrap = parse("< O1+ U1+ >");
  LinkCode unwrapped = cut_move_one(wrap, 0, 3, CutMove::erase);
  REQUIRE(serialize(unwrapped) == "O1+ U1+");
}
