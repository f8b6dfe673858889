#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tabx/admissible.hpp"
#include "tabx/cycles.hpp"
#include "tabx/tableau.hpp"

namespace tabx {

/// The zero cluster (through the domino of 1, and through the zero square
/// in type B) exists in types B and C only and is never signed.  Every
/// other cluster is open or closed according to whether one of its I+ or N
/// dominos has a square whose right neighbour leaves the cluster closure.
enum class ClusterKind { Cl0, Open, Closed };

inline const char* cluster_kind_name(ClusterKind k) {
  switch (k) {
    case ClusterKind::Cl0: return "cl0";
    case ClusterKind::Open: return "open";
    default: return "closed";
  }
}

struct Cluster {
  int id = 0;  // smallest domino label
  ClusterKind kind = ClusterKind::Closed;
  ParityClass cls = ParityClass::DD;
  std::vector<int> labels;      // ascending
  bool has_zero = false;        // contains the zero square (type B)
  std::vector<Square> squares;  // all covered squares, zero square included
  int min_row = 0, max_row = 0, min_col = 0, max_col = 0;
};

/// Strict containment of bounding boxes.
inline bool nested_in(const Cluster& inner, const Cluster& outer) {
  return inner.min_row > outer.min_row && inner.max_row < outer.max_row &&
         inner.min_col > outer.min_col && inner.max_col < outer.max_col;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Clusters of an admissible tableau, ordered by smallest label.
///
/// Two dominos are linked when they touch horizontally, except that an I-
/// domino never links to the I+ domino at its right; the zero square links
/// to anything at its right.  A vertical contact at squares U = (a,b) over
/// L = (a+1,b) links depending on the parity of the contact column b: when
/// (-1)^b = -eps it links iff the value at (a,b+1) exceeds the label of L,
/// and when (-1)^b = eps iff the value at (a+1,b-1) is below the label of
/// U.  Values are read as in mt_cmp; the zero square counts as label 0.
inline std::vector<Cluster> clusters(const DominoTableau& t) {
  const AdmissibilityResult adm = admissibility(t);
  if (!adm.admissible)
    throw ValidationError("clusters need an admissible tableau; label " +
                          std::to_string(adm.failing_label) + " is inadmissible");
  const int n = t.size();
  detail::UnionFind uf(n + 1);  // unit 0 is the zero square
  const auto unit_at = [&](Square s) { return t.label_at(s); };
  const Partition shape = t.shape();
  for (int i = 1; i <= static_cast<int>(shape.size()); ++i) {
    for (int j = 1; j <= shape[i - 1]; ++j) {
      const Square s{i, j};
      const int u = unit_at(s);
      // Horizontal contact with the square at the right.
      if (t.in_shape({i, j + 1})) {
        const int v = unit_at({i, j + 1});
        if (u != v) {
          const bool blocked = u > 0 && v > 0 &&
                               domino_kind(t, u) == DominoKind::IMinus &&
                               domino_kind(t, v) == DominoKind::IPlus;
          if (!blocked) uf.unite(u, v);
        }
      }
      // Vertical contact with the square below.
      if (t.in_shape({i + 1, j})) {
        const int v = unit_at({i + 1, j});
        if (u != v) {
          const bool mirrored = (j % 2 == 0 ? 1 : -1) == epsilon(t.type());
          const bool linked =
              mirrored ? mt_cmp(t, i + 1, j - 1) < u : mt_cmp(t, i, j + 1) > v;
          if (linked) uf.unite(u, v);
        }
      }
    }
  }
  std::map<int, Cluster> by_root;
  for (int k = 1; k <= n; ++k) {
    Cluster& c = by_root[uf.find(k)];
    c.labels.push_back(k);
    c.squares.push_back(t.domino(k).first);
    c.squares.push_back(t.domino(k).second);
  }
  if (t.has_zero_square() && n > 0) {
    auto it = by_root.find(uf.find(0));
    if (it == by_root.end()) throw InternalError("the zero square is in no cluster");
    it->second.has_zero = true;
    it->second.squares.push_back({1, 1});
  }
  std::vector<Cluster> out;
  for (auto& [root, c] : by_root) {
    std::sort(c.labels.begin(), c.labels.end());
    std::sort(c.squares.begin(), c.squares.end());
    c.id = c.labels.front();
    c.min_row = c.max_row = c.squares.front().row;
    c.min_col = c.max_col = c.squares.front().col;
    for (Square s : c.squares) {
      c.min_row = std::min(c.min_row, s.row);
      c.max_row = std::max(c.max_row, s.row);
      c.min_col = std::min(c.min_col, s.col);
      c.max_col = std::max(c.max_col, s.col);
    }
    c.cls = t.domino(c.id).first.parity() == 1 ? ParityClass::BC : ParityClass::DD;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Cluster& a, const Cluster& b) { return a.id < b.id; });
  // Kinds: the zero cluster is the one through the domino of 1 (types B, C);
  // in type B it is also the one holding the zero square.  The right-edge
  // test reads squares of closed nested clusters as interior, so kinds are
  // settled innermost first (nesting shrinks both bounding box spans).
  std::vector<Cluster*> order;
  for (Cluster& c : out) order.push_back(&c);
  std::sort(order.begin(), order.end(), [](const Cluster* a, const Cluster* b) {
    return a->max_row - a->min_row + a->max_col - a->min_col <
           b->max_row - b->min_row + b->max_col - b->min_col;
  });
  for (Cluster* pc : order) {
    Cluster& c = *pc;
    if (t.type() != GroupType::D && c.id == 1) {
      if (t.type() == GroupType::B && !c.has_zero)
        throw InternalError("the domino of 1 escaped the zero square's cluster");
      c.kind = ClusterKind::Cl0;
      continue;
    }
    std::set<Square> closure(c.squares.begin(), c.squares.end());
    for (const Cluster& x : out)
      if (x.id != c.id && x.kind == ClusterKind::Closed && nested_in(x, c))
        closure.insert(x.squares.begin(), x.squares.end());
    bool open = false;
    for (int k : c.labels) {
      const DominoKind kk = domino_kind(t, k);
      if (kk != DominoKind::IPlus && kk != DominoKind::N) continue;
      for (Square s : {t.domino(k).first, t.domino(k).second})
        if (!closure.count({s.row, s.col + 1})) open = true;
    }
    c.kind = open ? ClusterKind::Open : ClusterKind::Closed;
  }
  return out;
}

inline const Cluster& cluster_of(const std::vector<Cluster>& cs, int label) {
  for (const Cluster& c : cs)
    if (std::binary_search(c.labels.begin(), c.labels.end(), label)) return c;
  throw InternalError("label " + std::to_string(label) + " is in no cluster");
}

/// Labels of the closure: the cluster plus every closed cluster nested
/// inside it.
inline std::vector<int> closure_bar(const std::vector<Cluster>& all, const Cluster& c) {
  std::vector<int> out = c.labels;
  for (const Cluster& x : all)
    if (x.id != c.id && x.kind == ClusterKind::Closed && nested_in(x, c))
      out.insert(out.end(), x.labels.begin(), x.labels.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Labels in the closure of c owning a square edge-adjacent to some square
/// outside the closure (squares beyond the diagram included).
inline std::vector<int> periphery(const DominoTableau& t, const std::vector<Cluster>& all,
                                  const Cluster& c) {
  std::set<Square> sq(c.squares.begin(), c.squares.end());
  std::vector<int> labels = c.labels;
  for (const Cluster& x : all)
    if (x.id != c.id && x.kind == ClusterKind::Closed && nested_in(x, c)) {
      sq.insert(x.squares.begin(), x.squares.end());
      labels.insert(labels.end(), x.labels.begin(), x.labels.end());
    }
  std::vector<int> out;
  for (int k : labels) {
    bool border = false;
    for (Square s : {t.domino(k).first, t.domino(k).second})
      for (Square nb : {Square{s.row - 1, s.col}, Square{s.row + 1, s.col},
                        Square{s.row, s.col - 1}, Square{s.row, s.col + 1}})
        if (!sq.count(nb)) border = true;
    if (border) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The cycle through the smallest label of the cluster, in the cluster's
/// own class.  Defined for open and closed clusters only.
inline Cycle initial_cycle(const DominoTableau& t, const Cluster& c) {
  if (c.kind == ClusterKind::Cl0)
    throw ValidationError("the zero cluster has no initial cycle");
  return cycle(t, c.id, c.cls);
}

}  // namespace tabx
