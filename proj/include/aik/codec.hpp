#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "aik/code.hpp"

namespace aik {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline std::string token_text(const Token& t, int id, int sign) {
  switch (t.kind) {
    case Token::Kind::bar:
      return "|";
    case Token::Kind::cut:
      return t.coherent ? ">" : "<";
    case Token::Kind::passage:
      return std::string(t.role == Role::over ? "O" : "U") +
             std::to_string(id) + (sign > 0 ? "+" : "-");
  }
  return {};
}

inline std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] != '#') {
      out.append(line);
      out.push_back(' ');
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

}  // namespace detail

// Text form: components joined by ';', whitespace-separated tokens.  A
// passage is [OU]<digits>[+-] with the crossing sign repeated at both
// passages; '|' is a bar, '>' a coherent cut, '<' an incoherent cut.
// Lines starting with '#' are comments.
inline LinkCode parse(std::string_view text) {
  std::string cleaned = detail::strip_comments(text);

  std::vector<std::string> chunks;
  {
    std::string current;
    for (char c : cleaned) {
      if (c == ';') {
        chunks.push_back(current);
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    chunks.push_back(current);
  }

  LinkCode code;
  std::vector<std::string> violations;
  int ordinal = 0;
  for (const auto& chunk : chunks) {
    Component comp;
    std::istringstream words(chunk);
    std::string w;
    while (words >> w) {
      ++ordinal;
      if (w == "|") {
        comp.push_back(Token::bar());
        continue;
      }
      if (w == ">") {
        comp.push_back(Token::cut(true));
        continue;
      }
      if (w == "<") {
        comp.push_back(Token::cut(false));
        continue;
      }
      bool lexical_ok = (w.size() >= 3) && (w[0] == 'O' || w[0] == 'U') &&
                        (w.back() == '+' || w.back() == '-');
      if (lexical_ok)
        for (std::size_t i = 1; i + 1 < w.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(w[i]))) lexical_ok = false;
      if (!lexical_ok)
        throw ParseError("lexical error at token " + std::to_string(ordinal) +
                         ": '" + w + "'");
      int id = std::stoi(w.substr(1, w.size() - 2));
      int sign = (w.back() == '+') ? 1 : -1;
      comp.push_back(
          Token::passage(w[0] == 'O' ? Role::over : Role::under, id));
      auto [it, inserted] = code.signs.emplace(id, sign);
      if (!inserted && it->second != sign)
        violations.push_back("sign mismatch at crossing " + std::to_string(id));
    }
    if (!comp.empty()) code.components.push_back(std::move(comp));
  }

  auto report = validate(code);
  for (const auto& v : violations) report.violations.push_back(v);
  if (!report.ok()) throw ParseError("invalid code: " + report.joined());
  return code;
}

inline std::string serialize(const LinkCode& code) {
  std::string out;
  bool first_comp = true;
  for (const auto& comp : code.components) {
    if (!first_comp) out += " ; ";
    first_comp = false;
    bool first_tok = true;
    for (const auto& t : comp) {
      if (!first_tok) out += ' ';
      first_tok = false;
      int sign = t.is_passage() ? code.signs.at(t.crossing) : 0;
      out += detail::token_text(t, t.crossing, sign);
    }
  }
  return out;
}

}  // namespace aik
