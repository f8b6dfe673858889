#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <vector>

#include "tabx/errors.hpp"
#include "tabx/partition.hpp"

namespace tabx {

/// Grid square in matrix coordinates: row 1 is the top row, col 1 the
/// leftmost column, so S(1,1) is the top-left corner.
struct Square {
  int row = 0;
  int col = 0;

  int parity() const { return ((row + col) % 2 + 2) % 2; }

  auto operator<=>(const Square&) const = default;
};

/// Two edge-adjacent squares sharing one label.  `first` is the upper square
/// of a vertical domino or the left square of a horizontal one.
struct Domino {
  int label = 0;
  Square first;
  Square second;

  bool vertical() const { return first.col == second.col; }
  bool horizontal() const { return first.row == second.row; }
  int min_row() const { return first.row; }
  int max_row() const { return second.row; }
};

/// Standard domino tableau of one of the types B, C, D.
///
/// Stored as a row-major grid of labels.  In type B the top-left square
/// carries the extra label 0 and every grid has an odd number of squares;
/// in types C and D all labels are positive and the square count is even.
/// Labels 1..n each cover exactly one domino, and the squares with labels
/// <= i form a Young diagram for every i (standardness).
class DominoTableau {
 public:
  using Grid = std::vector<std::vector<int>>;

  static DominoTableau from_grid(GroupType t, Grid g) {
    DominoTableau out;
    out.type_ = t;
    out.grid_ = std::move(g);
    out.validate();
    return out;
  }

  /// Rebuild a tableau from a full set of dominos.  In type B the zero
  /// square at S(1,1) is supplied implicitly.
  static DominoTableau from_dominos(GroupType t, const std::vector<Domino>& ds) {
    std::map<Square, int> occ;
    if (t == GroupType::B) occ[{1, 1}] = 0;
    for (const Domino& d : ds) {
      for (Square s : {d.first, d.second}) {
        if (s.row < 1 || s.col < 1) throw ValidationError("square off the grid");
        if (!occ.emplace(s, d.label).second) throw ValidationError("overlapping dominos");
      }
    }
    int max_row = 0;
    for (const auto& [s, lab] : occ) max_row = std::max(max_row, s.row);
    Grid g(max_row);
    for (const auto& [s, lab] : occ) {
      auto& row = g[s.row - 1];
      if (s.col > static_cast<int>(row.size())) row.resize(s.col, -1);
      row[s.col - 1] = lab;
    }
    for (const auto& row : g)
      for (int v : row)
        if (v < 0) throw ValidationError("rows are not contiguous");
    return from_grid(t, std::move(g));
  }

  static DominoTableau empty(GroupType t) {
    return t == GroupType::B ? from_grid(t, {{0}}) : from_grid(t, {});
  }

  GroupType type() const { return type_; }

  /// Number of dominos.
  int size() const { return static_cast<int>(dominos_.size()); }

  const Grid& grid() const { return grid_; }

  Partition shape() const {
    Partition p;
    for (const auto& row : grid_) p.push_back(static_cast<int>(row.size()));
    return p;
  }

  bool has_zero_square() const { return type_ == GroupType::B; }

  /// True iff the (1-based) square lies inside the diagram.
  bool in_shape(Square s) const {
    if (s.row < 1 || s.col < 1) return false;
    if (s.row > static_cast<int>(grid_.size())) return false;
    return s.col <= static_cast<int>(grid_[s.row - 1].size());
  }

  /// Label at a square inside the diagram (0 on the zero square).
  int label_at(Square s) const {
    if (!in_shape(s)) throw ValidationError("square outside the diagram");
    return grid_[s.row - 1][s.col - 1];
  }

  const Domino& domino(int k) const {
    if (k < 1 || k > size()) throw ValidationError("no domino with label " + std::to_string(k));
    return dominos_[k - 1];
  }

  const std::vector<Domino>& dominos() const { return dominos_; }

  /// Row lengths of the region with labels <= i (zero square included).
  Partition prefix_shape(int i) const {
    Partition p;
    for (const auto& row : grid_) {
      int len = 0;
      for (int v : row) {
        if (v > i) break;
        ++len;
      }
      if (len == 0) break;
      p.push_back(len);
    }
    return p;
  }

  bool operator==(const DominoTableau& o) const {
    return type_ == o.type_ && grid_ == o.grid_;
  }

  bool operator<(const DominoTableau& o) const {
    if (type_ != o.type_) return type_ < o.type_;
    return grid_ < o.grid_;
  }

 private:
  DominoTableau() = default;

  void validate() {
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      if (grid_[i].empty()) throw ValidationError("empty row");
      if (i > 0 && grid_[i].size() > grid_[i - 1].size())
        throw ValidationError("row lengths must weakly decrease");
    }
    // Count occurrences and locate squares per label.
    std::map<int, std::vector<Square>> where;
    int total = 0;
    for (std::size_t i = 0; i < grid_.size(); ++i)
      for (std::size_t j = 0; j < grid_[i].size(); ++j) {
        int v = grid_[i][j];
        Square s{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
        if (v < 0) throw ValidationError("negative label");
        if (v == 0) {
          if (type_ != GroupType::B) throw ValidationError("zero square outside type B");
          if (s != Square{1, 1}) throw ValidationError("zero square must sit at the corner");
        }
        where[v].push_back(s);
        ++total;
      }
    if (type_ == GroupType::B) {
      if (where.count(0) == 0) throw ValidationError("type B needs the zero square");
      if (where[0].size() != 1) throw ValidationError("duplicated zero square");
      if (total % 2 != 1) throw ValidationError("type B square count must be odd");
    } else {
      if (total % 2 != 0) throw ValidationError("square count must be even");
    }
    const int n = type_ == GroupType::B ? (total - 1) / 2 : total / 2;
    dominos_.clear();
    dominos_.reserve(n);
    for (int k = 1; k <= n; ++k) {
      auto it = where.find(k);
      if (it == where.end() || it->second.size() != 2)
        throw ValidationError("label " + std::to_string(k) + " must appear exactly twice");
      Square a = it->second[0], b = it->second[1];  // a < b in (row, col) order
      const bool adjacent = (a.row == b.row && b.col == a.col + 1) ||
                            (a.col == b.col && b.row == a.row + 1);
      if (!adjacent) throw ValidationError("label " + std::to_string(k) + " is not a domino");
      dominos_.push_back(Domino{k, a, b});
    }
    // Standardness: labels weakly increase along rows and down columns;
    // with each label covering one domino this makes every prefix a
    // Young diagram.
    for (std::size_t i = 0; i < grid_.size(); ++i)
      for (std::size_t j = 0; j < grid_[i].size(); ++j) {
        int v = grid_[i][j];
        if (j + 1 < grid_[i].size() && grid_[i][j + 1] < v)
          throw ValidationError("labels must weakly increase along rows");
        if (i + 1 < grid_.size() && grid_[i + 1].size() > j && grid_[i + 1][j] < v)
          throw ValidationError("labels must weakly increase down columns");
      }
  }

  GroupType type_ = GroupType::C;
  Grid grid_;
  std::vector<Domino> dominos_;
};

}  // namespace tabx
