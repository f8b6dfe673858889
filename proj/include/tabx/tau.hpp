#pragma once

#include <set>

#include "tabx/tableau.hpp"

namespace tabx {

/// The tau invariant: 1 is a member iff the domino of 1 is vertical, and
/// i > 1 is a member iff the domino of i lies entirely below the domino of
/// i-1.  In type D the membership of 1 and 2 depends on a normalisation
/// choice that the rest of the library does not pin down, so comparisons
/// there should ignore those two indices.
inline std::set<int> tau(const DominoTableau& t) {
  std::set<int> out;
  for (int i = 1; i <= t.size(); ++i) {
    if (i == 1) {
      if (t.domino(1).vertical()) out.insert(1);
    } else if (t.domino(i - 1).max_row() < t.domino(i).min_row()) {
      out.insert(i);
    }
  }
  return out;
}

/// Equality of tau invariants, ignoring the indices 1 and 2 in type D.
inline bool tau_agree(GroupType ty, std::set<int> a, std::set<int> b) {
  if (ty == GroupType::D) {
    a.erase(1);
    a.erase(2);
    b.erase(1);
    b.erase(2);
  }
  return a == b;
}

}  // namespace tabx
