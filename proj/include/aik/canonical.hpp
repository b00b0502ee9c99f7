#pragma once

#include <algorithm>
#include <numeric>
#include <string>

#include "aik/codec.hpp"

namespace aik {

// Lexicographically smallest serialization over all component orderings,
// all rotations of each component, and relabeling of crossing ids by first
// occurrence.  Equal codes-as-diagrams (up to those moves) map to equal
// strings.  Exponential in component count, so capped at 6 components.
inline std::string canonical_form(const LinkCode& code) {
  if (code.components.size() > 6)
    throw std::invalid_argument("canonical form limited to 6 components");
  if (code.components.empty()) return "";

  int k = static_cast<int>(code.components.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);

  std::string best;
  bool have_best = false;
  std::string candidate;
  std::vector<int> rot(k, 0);
  std::vector<int> relabel(code.max_crossing_id() + 1, 0);

  do {
    std::fill(rot.begin(), rot.end(), 0);
    while (true) {
      candidate.clear();
      std::fill(relabel.begin(), relabel.end(), 0);
      int next_id = 1;
      for (int slot = 0; slot < k; ++slot) {
        if (slot > 0) candidate += " ; ";
        const Component& comp = code.components[perm[slot]];
        int n = static_cast<int>(comp.size());
        for (int i = 0; i < n; ++i) {
          const Token& t = comp[(i + rot[slot]) % n];
          if (i > 0) candidate += ' ';
          if (t.is_passage()) {
            int& fresh = relabel[t.crossing];
            if (fresh == 0) fresh = next_id++;
            candidate +=
                detail::token_text(t, fresh, code.signs.at(t.crossing));
          } else {
            candidate += detail::token_text(t, 0, 0);
          }
        }
      }
      if (!have_best || candidate < best) {
        best = candidate;
        have_best = true;
      }
      int slot = k - 1;
      while (slot >= 0) {
        if (++rot[slot] <
            std::max<int>(1, static_cast<int>(code.components[perm[slot]].size())))
          break;
        rot[slot] = 0;
        --slot;
      }
      if (slot < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return best;
}

}  // namespace aik
