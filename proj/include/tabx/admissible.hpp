#pragma once

#include <string>

#include "tabx/tableau.hpp"

namespace tabx {

/// Kind of one domino, determined by its orientation and the parity of the
/// column it starts in, relative to the sign eps of the type (+1 for B, D
/// and -1 for C).  A vertical domino in column j is I+ when (-1)^j = -eps
/// and I- otherwise; a horizontal domino with left column j is N when
/// (-1)^j = eps and inadmissible otherwise.
enum class DominoKind { IPlus, IMinus, N, InadmissibleHorizontal };

inline DominoKind domino_kind(const DominoTableau& t, int k) {
  const Domino& d = t.domino(k);
  const int eps = epsilon(t.type());
  const int j = d.first.col;
  const int colsign = j % 2 == 0 ? +1 : -1;  // (-1)^j
  if (d.vertical()) return colsign == -eps ? DominoKind::IPlus : DominoKind::IMinus;
  return colsign == eps ? DominoKind::N : DominoKind::InadmissibleHorizontal;
}

inline std::string kind_name(DominoKind k) {
  switch (k) {
    case DominoKind::IPlus: return "I+";
    case DominoKind::IMinus: return "I-";
    case DominoKind::N: return "N";
    default: return "inadmissible";
  }
}

struct AdmissibilityResult {
  bool admissible = true;
  int failing_label = 0;  // smallest inadmissible label, 0 when admissible
};

inline AdmissibilityResult admissibility(const DominoTableau& t) {
  for (int k = 1; k <= t.size(); ++k)
    if (domino_kind(t, k) == DominoKind::InadmissibleHorizontal) return {false, k};
  return {true, 0};
}

inline bool is_admissible(const DominoTableau& t) { return admissibility(t).admissible; }

}  // namespace tabx
