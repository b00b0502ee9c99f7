#pragma once

#include <sstream>

#include "aik/invariants.hpp"
#include "aik/twisted.hpp"

namespace aik {

inline std::string writhe_table_to_string(const WritheTable& table) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [n, value] : table) {
    if (!first) out << ", ";
    first = false;
    out << n << ": " << value;
  }
  out << '}';
  return out.str();
}

enum class InvariantScope { virtual_link, twisted_link };

// A deterministic text rendering of every implemented invariant that the
// given move scope preserves.  Two codes related by moves of the scope must
// produce identical strings; fuzzing compares these, and `eq` reports codes
// with different strings as distinguished.  Bar slides reroute strands
// through the wall, so the twisted scope keeps only the wall-aware
// invariants and the component count.
inline std::string fingerprint(const LinkCode& code, InvariantScope scope) {
  std::ostringstream out;
  out << "components: " << code.components.size() << '\n';
  if (scope == InvariantScope::virtual_link) {
    LinkInvariants inv = link_invariants(code);
    out << "JO: " << writhe_table_to_string(inv.over_writhes) << '\n';
    out << "JU: " << writhe_table_to_string(inv.under_writhes) << '\n';
    out << "PO: " << inv.over_poly.to_string() << '\n';
    out << "PU: " << inv.under_poly.to_string() << '\n';
    out << "POU: " << inv.over_under_poly.to_string() << '\n';
    LinkingData linking = linking_data(code);
    for (const auto& [pair, value] : linking.lk)
      out << "lk(" << pair.first << "," << pair.second << "): " << value
          << '\n';
    out << "lambda:";
    for (long long v : linking.lambda) out << ' ' << v;
    out << '\n';
    std::vector<ComponentInvariants> split = component_split(code);
    for (std::size_t i = 0; i < split.size(); ++i) {
      out << "component " << (i + 1) << ": JO="
          << writhe_table_to_string(split[i].over_writhes)
          << " PO=" << split[i].over_poly.to_string()
          << " PU=" << split[i].under_poly.to_string()
          << " POU=" << split[i].over_under_poly.to_string() << '\n';
    }
    // Compatibility is a property of the presentation, not the link: a kink
    // on a component with nonzero framing breaks it.  Its polynomial equals
    // the under polynomial already listed, so neither is repeated here.
    if (code.components.size() == 1) {
      out << "J: " << writhe_table_to_string(n_writhes_knot(code)) << '\n';
      out << "P: " << affine_index_polynomial_knot(code).to_string() << '\n';
    }
  }
  out << "Q: " << q_polynomial(code).to_string() << '\n';
  TildeInvariants tilde = tilde_invariants(code);
  out << "cover components: " << tilde.cover_components << '\n';
  if (tilde.odd_type)
    out << "type: " << (*tilde.odd_type ? "odd" : "even") << '\n';
  out << "cover JO: " << writhe_table_to_string(tilde.cover.over_writhes)
      << '\n';
  out << "cover JU: " << writhe_table_to_string(tilde.cover.under_writhes)
      << '\n';
  out << "cover PO: " << tilde.cover.over_poly.to_string() << '\n';
  out << "cover PU: " << tilde.cover.under_poly.to_string() << '\n';
  out << "cover POU: " << tilde.cover.over_under_poly.to_string() << '\n';
  if (tilde.cover_knot_writhes)
    out << "cover J: " << writhe_table_to_string(*tilde.cover_knot_writhes)
        << '\n';
  if (tilde.cover_knot_poly)
    out << "cover P: " << tilde.cover_knot_poly->to_string() << '\n';
  return out.str();
}

}  // namespace aik
