#include <catch2/catch_amalgamated.hpp>

#include "aik/code.hpp"
#include "aik/codec.hpp"

using namespace aik;

namespace {

std::vector<std::string> tokens_of(const std::vector<Token>& arc,
                                   const LinkCode& code) {
  std::vector<std::string> out;
  for (const Token& t : arc)
    out.push_back(detail::token_text(
        t, t.crossing, t.is_passage() ? code.signs.at(t.crossing) : 0));
  return out;
}

}  // namespace

TEST_CASE("token factories carry their payload") {
  Token over = Token::passage(Role::over, 3);
  REQUIRE(over.is_passage());
  REQUIRE(over.is_over());
  REQUIRE(over.crossing == 3);
  REQUIRE(Token::bar().is_bar());
  REQUIRE(Token::cut(true).coherent);
  REQUIRE_FALSE(Token::cut(false).coherent);
  REQUIRE(Token::passage(Role::under, 3) != over);
}

TEST_CASE("validate accepts well-formed codes") {
  REQUIRE(validate(parse("O1+ O2+ U1+ U2+")).ok());
  REQUIRE(validate(parse("O1+ ; U1+")).ok());
  REQUIRE(validate(parse("| > <")).ok());
  REQUIRE(validate(LinkCode{}).ok());
}

TEST_CASE("validate names the broken crossing") {
  LinkCode code;
  code.components.push_back({Token::passage(Role::over, 1),
                             Token::passage(Role::over, 1),
                             Token::passage(Role::under, 1)});
  code.signs[1] = 1;
  auto report = validate(code);
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.joined().find("crossing 1 has 2 over passages") !=
          std::string::npos);

  LinkCode missing_sign;
  missing_sign.components.push_back(
      {Token::passage(Role::over, 2), Token::passage(Role::under, 2)});
  REQUIRE(validate(missing_sign).joined().find("crossing 2 has no sign") !=
          std::string::npos);

  LinkCode orphan_sign = parse("O1+ U1+");
  orphan_sign.signs[7] = 1;
  REQUIRE(validate(orphan_sign).joined().find("absent crossing 7") !=
          std::string::npos);

  LinkCode bad_sign = parse("O1+ U1+");
  bad_sign.signs[1] = 2;
  REQUIRE(validate(bad_sign).joined().find("must be +1 or -1") !=
          std::string::npos);

  LinkCode bad_id;
  bad_id.components.push_back(
      {Token::passage(Role::over, 0), Token::passage(Role::under, 0)});
  bad_id.signs[0] = 1;
  REQUIRE_FALSE(validate(bad_id).ok());
}

TEST_CASE("passage location and self-crossing detection") {
  LinkCode code = parse("O1+ O2+ U1+ ; U2+");
  auto where = locate_passages(code);
  REQUIRE(where.at(1).over == TokenPos{0, 0});
  REQUIRE(where.at(1).under == TokenPos{0, 2});
  REQUIRE(where.at(2).over == TokenPos{0, 1});
  REQUIRE(where.at(2).under == TokenPos{1, 0});
  REQUIRE(self_crossings(code) == std::set<int>{1});
  REQUIRE(self_crossings(parse("O1+ O2+ U1+ U2+")) == std::set<int>{1, 2});
}

TEST_CASE("counting arcs of the two-crossing knot") {
  LinkCode vt = parse("O1+ O2+ U1+ U2+");
  CountingArcs c1 = counting_arcs(vt, 1);
  REQUIRE(tokens_of(c1.over_arc, vt) == std::vector<std::string>{"O2+"});
  REQUIRE(tokens_of(c1.under_arc, vt) == std::vector<std::string>{"U2+"});
  CountingArcs c2 = counting_arcs(vt, 2);
  REQUIRE(tokens_of(c2.over_arc, vt) == std::vector<std::string>{"U1+"});
  REQUIRE(tokens_of(c2.under_arc, vt) == std::vector<std::string>{"O1+"});
}

TEST_CASE("counting arcs of the classical trefoil") {
  LinkCode trefoil = parse("O1+ U2+ O3+ U1+ O2+ U3+");
  CountingArcs c1 = counting_arcs(trefoil, 1);
  REQUIRE(tokens_of(c1.over_arc, trefoil) ==
          std::vector<std::string>{"U2+", "O3+"});
  REQUIRE(tokens_of(c1.under_arc, trefoil) ==
          std::vector<std::string>{"O2+", "U3+"});
}

TEST_CASE("counting arcs keep decorations and skip nothing") {
  LinkCode code = parse("O1+ | > U1+ <");
  CountingArcs arcs = counting_arcs(code, 1);
  REQUIRE(tokens_of(arcs.over_arc, code) == std::vector<std::string>{"|", ">"});
  REQUIRE(tokens_of(arcs.under_arc, code) == std::vector<std::string>{"<"});
}

TEST_CASE("counting arcs are rotation independent") {
  LinkCode base = parse("O1+ U2+ O3+ U1+ O2+ U3+");
  auto reference = counting_arcs(base, 3);
  for (int r = 1; r < 6; ++r) {
    LinkCode rotated = base;
    std::rotate(rotated.components[0].begin(),
                rotated.components[0].begin() + r,
                rotated.components[0].end());
    auto arcs = counting_arcs(rotated, 3);
    REQUIRE(arcs.over_arc == reference.over_arc);
    REQUIRE(arcs.under_arc == reference.under_arc);
  }
}

TEST_CASE("counting arcs reject nonself crossings") {
  LinkCode code = parse("O1+ O2+ U1+ ; U2+");
  REQUIRE_THROWS_MATCHES(
      counting_arcs(code, 2), std::invalid_argument,
      Catch::Matchers::Message("nonself crossing has no counting components"));
  REQUIRE_THROWS_AS(counting_arcs(code, 9), std::invalid_argument);
}

TEST_CASE("decoration queries") {
  REQUIRE(parse("O1+ | U1+").has_bars());
  REQUIRE_FALSE(parse("O1+ U1+").has_bars());
  REQUIRE(parse("O1+ > U1+").has_cuts());
  REQUIRE_FALSE(parse("O1+ | U1+").has_cuts());
  REQUIRE(parse("O1+ U1+ ; O7+ U7+").max_crossing_id() == 7);
}
