#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "tabx/admissible.hpp"
#include "tabx/io.hpp"
#include "tabx/tableau.hpp"

namespace tabx {

/// Checkerboard colouring used to split dominos into cycles.  Every domino
/// covers one square of each parity; its fixed square has parity 1 (odd
/// row+col) in class BC and parity 0 in class DD, and stays put when the
/// domino is moved through.
enum class ParityClass { BC, DD };

inline int fixed_parity(ParityClass c) { return c == ParityClass::BC ? 1 : 0; }

inline const char* class_name(ParityClass c) { return c == ParityClass::BC ? "BC" : "DD"; }

inline Square fixed_square(const DominoTableau& t, int k, ParityClass c) {
  const Domino& d = t.domino(k);
  return d.first.parity() == fixed_parity(c) ? d.first : d.second;
}

inline Square variable_square(const DominoTableau& t, int k, ParityClass c) {
  const Domino& d = t.domino(k);
  return d.first.parity() == fixed_parity(c) ? d.second : d.first;
}

/// Comparison value of a grid square for the moving-through rule: squares
/// in row or column 0 compare below every label, squares beyond the shape
/// compare above every label, squares of the diagram compare as their label
/// (0 on the zero square).
inline int mt_cmp(const DominoTableau& t, int row, int col) {
  if (row < 1 || col < 1) return 0;
  Square s{row, col};
  if (t.in_shape(s)) return t.label_at(s);
  return std::numeric_limits<int>::max();
}

struct MtPosition {
  Square fixed;   // the square shared by D(k) and D'(k)
  Square target;  // the other square of D'(k)
};

/// Where the domino of k lands when moved through in class c.  With fixed
/// square F = (i,j): when the variable square lies below or left of F the
/// new domino is {F,(i,j+1)} if the value at (i-1,j+1) is < k and
/// {F,(i-1,j)} otherwise; when it lies above or right of F the new domino
/// is {F,(i,j-1)} if the value at (i+1,j-1) is > k and {F,(i+1,j)}
/// otherwise.
inline MtPosition mt_position(const DominoTableau& t, int k, ParityClass c) {
  const Square f = fixed_square(t, k, c);
  const Square v = variable_square(t, k, c);
  const int i = f.row, j = f.col;
  Square target;
  if (v.row > f.row || v.col < f.col) {
    target = mt_cmp(t, i - 1, j + 1) < k ? Square{i, j + 1} : Square{i - 1, j};
  } else {
    target = mt_cmp(t, i + 1, j - 1) > k ? Square{i, j - 1} : Square{i + 1, j};
  }
  if (target.row < 1 || target.col < 1)
    throw InternalError("moving-through target fell off the grid");
  return {f, target};
}

/// A cycle of class cls.  Closed cycles list their labels in successor
/// order starting from the smallest; open cycles list them in chain order,
/// head first.  Open cycles record the square vacated at the head and the
/// square acquired at the tail; `acquired` is empty when the chain runs
/// into the zero square, which cannot be displaced.
struct Cycle {
  ParityClass cls = ParityClass::BC;
  std::vector<int> labels;
  bool open = false;
  std::optional<Square> vacated;
  std::optional<Square> acquired;

  int min_label() const { return *std::min_element(labels.begin(), labels.end()); }
  std::set<int> label_set() const { return {labels.begin(), labels.end()}; }
};

/// The cycle through k in class c.
inline Cycle cycle(const DominoTableau& t, int k, ParityClass c) {
  if (k < 1 || k > t.size()) throw ValidationError("no domino with label " + std::to_string(k));
  Cycle y;
  y.cls = c;
  y.labels.push_back(k);
  // Forward: follow successors until the chain closes or leaves the diagram.
  bool closed = false;
  std::optional<Square> tail_target;
  bool barrier = false;
  int cur = k;
  for (;;) {
    const Square target = mt_position(t, cur, c).target;
    if (!t.in_shape(target)) {
      tail_target = target;
      break;
    }
    const int next = t.label_at(target);
    if (next == 0) {
      barrier = true;  // the zero square blocks the chain
      break;
    }
    if (next == k) {
      closed = true;
      break;
    }
    if (std::find(y.labels.begin(), y.labels.end(), next) != y.labels.end())
      throw InternalError("successor chain revisited " + std::to_string(next));
    y.labels.push_back(next);
    cur = next;
  }
  if (closed) {
    auto mn = std::min_element(y.labels.begin(), y.labels.end());
    std::rotate(y.labels.begin(), mn, y.labels.end());
    return y;
  }
  // Backward: prepend unique predecessors until none is left.
  y.open = true;
  for (;;) {
    const int head = y.labels.front();
    int pred = 0;
    for (int m = 1; m <= t.size(); ++m) {
      if (std::find(y.labels.begin(), y.labels.end(), m) != y.labels.end()) continue;
      const Square target = mt_position(t, m, c).target;
      if (t.in_shape(target) && t.label_at(target) == head) {
        if (pred != 0) throw InternalError("two predecessors feed " + std::to_string(head));
        pred = m;
      }
    }
    if (pred == 0) break;
    y.labels.insert(y.labels.begin(), pred);
  }
  y.vacated = variable_square(t, y.labels.front(), c);
  if (!barrier) y.acquired = tail_target;
  return y;
}

/// All cycles of class c, ordered by smallest label.
inline std::vector<Cycle> all_cycles(const DominoTableau& t, ParityClass c) {
  std::vector<Cycle> out;
  std::set<int> seen;
  for (int k = 1; k <= t.size(); ++k) {
    if (seen.count(k)) continue;
    Cycle y = cycle(t, k, c);
    for (int l : y.labels) seen.insert(l);
    out.push_back(std::move(y));
  }
  return out;
}

/// True iff removing the square leaves a Young diagram.
inline bool square_removable(const Partition& shape, Square s) {
  const int rows = static_cast<int>(shape.size());
  if (s.row < 1 || s.row > rows) return false;
  if (s.col != shape[s.row - 1]) return false;
  if (s.row < rows && shape[s.row] >= s.col) return false;
  return true;
}

/// True iff the square lies just outside the diagram and adding it keeps a
/// Young diagram.
inline bool square_addable(const Partition& shape, Square s) {
  if (s.row < 1 || s.col < 1) return false;
  const int rows = static_cast<int>(shape.size());
  const int len = s.row <= rows ? shape[s.row - 1] : 0;
  if (s.col != len + 1) return false;
  if (s.row == 1) return true;
  const int above = s.row - 1 <= rows ? shape[s.row - 2] : 0;
  return above >= s.col;
}

/// Closed cycles always move; an open cycle moves in isolation iff its tail
/// is not blocked by the zero square and its vacated square can be removed
/// from the shape.
inline bool cycle_movable(const DominoTableau& t, const Cycle& y) {
  if (!y.open) return true;
  if (!y.acquired) return false;
  return square_removable(t.shape(), *y.vacated);
}

/// Move every domino of the cycle to its mt position at once.  The cycle
/// must have been computed on this tableau.
inline DominoTableau move_through(const DominoTableau& t, const Cycle& y) {
  const Cycle fresh = cycle(t, y.min_label(), y.cls);
  if (fresh.label_set() != y.label_set())
    throw MoveError("cycle is stale for this tableau");
  if (!cycle_movable(t, fresh)) {
    if (fresh.open && !fresh.acquired)
      throw MoveError("open cycle is blocked at the zero square");
    throw MoveError("open cycle cannot be moved in isolation");
  }
  std::vector<Domino> ds;
  ds.reserve(t.size());
  const std::set<int> moving = fresh.label_set();
  for (int k = 1; k <= t.size(); ++k) {
    if (!moving.count(k)) {
      ds.push_back(t.domino(k));
      continue;
    }
    const MtPosition p = mt_position(t, k, fresh.cls);
    Square a = p.fixed, b = p.target;
    if (b < a) std::swap(a, b);
    ds.push_back(Domino{k, a, b});
  }
  try {
    return DominoTableau::from_dominos(t.type(), ds);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("moving through broke the tableau: ") + e.what());
  }
}

inline DominoTableau move_through(const DominoTableau& t, int k, ParityClass c) {
  return move_through(t, cycle(t, k, c));
}

/// Move through several pairwise disjoint cycles, smallest label first.
/// Each cycle is recomputed on the intermediate tableau and must still
/// cover the same labels.
inline DominoTableau move_through_set(const DominoTableau& t, std::vector<Cycle> ys) {
  std::set<int> all;
  for (const Cycle& y : ys)
    for (int l : y.labels)
      if (!all.insert(l).second) throw MoveError("cycles overlap");
  std::sort(ys.begin(), ys.end(),
            [](const Cycle& a, const Cycle& b) { return a.min_label() < b.min_label(); });
  DominoTableau cur = t;
  for (const Cycle& y : ys) {
    const Cycle fresh = cycle(cur, y.min_label(), y.cls);
    if (fresh.label_set() != y.label_set())
      throw MoveError("cycles interact under this ordering");
    cur = move_through(cur, fresh);
  }
  return cur;
}

}  // namespace tabx
