#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <utility>

namespace aik {

enum class Var { s, t };

// Laurent polynomial in s and t with integer coefficients.  Univariate
// values simply keep the other exponent at zero.
class LaurentPoly {
 public:
  using Exponents = std::pair<int, int>;  // (e_s, e_t)

  LaurentPoly() = default;

  static LaurentPoly monomial(int e_s, int e_t, long long coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[{e_s, e_t}] = coeff;
    return p;
  }
  static LaurentPoly constant(long long c) { return monomial(0, 0, c); }

  bool is_zero() const { return terms_.empty(); }
  long long coeff(int e_s, int e_t) const {
    auto it = terms_.find({e_s, e_t});
    return it == terms_.end() ? 0 : it->second;
  }
  const std::map<Exponents, long long>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }
  friend LaurentPoly operator*(long long c, const LaurentPoly& a) {
    return LaurentPoly::constant(c) * a;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Substitute v -> v^-1.
  LaurentPoly invert(Var v) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
      r.add_term(v == Var::s ? Exponents{-e.first, e.second}
                             : Exponents{e.first, -e.second},
                 c);
    return r;
  }
  // Substitute v -> 0, i.e. drop every term with nonzero exponent in v.
  LaurentPoly kill(Var v) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
      if ((v == Var::s ? e.first : e.second) == 0) r.add_term(e, c);
    return r;
  }
  // Substitute v -> 1: collapse the exponent of v to zero.
  LaurentPoly eval_one(Var v) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
      r.add_term(v == Var::s ? Exponents{0, e.second} : Exponents{e.first, 0},
                 c);
    return r;
  }
  LaurentPoly swap_vars() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term({e.second, e.first}, c);
    return r;
  }

  // Terms ordered by exponent magnitude then sign per variable, s before t:
  // 0, -1, 1, -2, 2, ...  The zero polynomial prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::map<std::pair<ExpKey, ExpKey>, long long> ordered;
    for (const auto& [e, c] : terms_)
      ordered[{exp_key(e.first), exp_key(e.second)}] = c;
    std::string out;
    for (const auto& [key, c] : ordered) {
      long long mag = std::llabs(c);
      if (out.empty())
        out += (c < 0) ? "-" : "";
      else
        out += (c < 0) ? " - " : " + ";
      std::string mono = monomial_text(key.first.value, key.second.value);
      if (mono.empty())
        out += std::to_string(mag);
      else {
        if (mag != 1) out += std::to_string(mag) + " ";
        out += mono;
      }
    }
    return out;
  }

 private:
  struct ExpKey {
    int magnitude;
    bool positive;
    int value;
    friend auto operator<=>(const ExpKey& a, const ExpKey& b) {
      return std::pair(a.magnitude, a.positive) <=>
             std::pair(b.magnitude, b.positive);
    }
  };
  static ExpKey exp_key(int e) { return ExpKey{e < 0 ? -e : e, e > 0, e}; }

  static std::string monomial_text(int e_s, int e_t) {
    std::string out;
    auto factor = [&out](const char* name, int e) {
      if (e == 0) return;
      if (!out.empty()) out += ' ';
      out += name;
      if (e != 1) out += "^" + std::to_string(e);
    };
    factor("s", e_s);
    factor("t", e_t);
    return out;
  }

  void add_term(Exponents e, long long c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_[e] = c;
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }

  std::map<Exponents, long long> terms_;
};

}  // namespace aik
