#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "tabx/admissible.hpp"
#include "tabx/signed.hpp"
#include "tabx/tableau.hpp"

namespace tabx {
namespace detail {

/// Grow tableaux one domino at a time.  A domino with the next label goes
/// either horizontally at the end of a row (the row above must stay at
/// least as long) or vertically at the common end of two equal rows.  When
/// admissible_only is set, horizontal dominos are only placed in columns
/// whose parity sign matches eps; when target is set, growth stays inside
/// that shape.
inline void grow_sdt(GroupType t, int k, int n, DominoTableau::Grid& g,
                     bool admissible_only, const Partition* target,
                     const std::function<void(const DominoTableau::Grid&)>& emit) {
  if (k > n) {
    emit(g);
    return;
  }
  const int rows = static_cast<int>(g.size());
  const auto len = [&](int i) {
    return i >= 1 && i <= rows ? static_cast<int>(g[i - 1].size()) : 0;
  };
  const auto room = [&](int i, int want) {
    if (!target) return true;
    if (i > static_cast<int>(target->size())) return false;
    return (*target)[i - 1] >= want;
  };
  const int eps = epsilon(t);
  for (int i = 1; i <= rows + 1; ++i) {
    const int li = len(i);
    // Horizontal domino at row i, columns li+1 and li+2.
    if ((i == 1 || len(i - 1) >= li + 2) && room(i, li + 2)) {
      const int c = li + 1;
      const int colsign = c % 2 == 0 ? +1 : -1;
      if (!admissible_only || colsign == eps) {
        if (i > rows) g.emplace_back();
        g[i - 1].push_back(k);
        g[i - 1].push_back(k);
        grow_sdt(t, k + 1, n, g, admissible_only, target, emit);
        g[i - 1].pop_back();
        g[i - 1].pop_back();
        if (g[i - 1].empty()) g.pop_back();
      }
    }
    // Vertical domino at rows i and i+1, column li+1.
    if (len(i + 1) == li && (i == 1 || len(i - 1) > li) && room(i, li + 1) &&
        room(i + 1, li + 1)) {
      while (static_cast<int>(g.size()) < i + 1) g.emplace_back();
      g[i - 1].push_back(k);
      g[i].push_back(k);
      grow_sdt(t, k + 1, n, g, admissible_only, target, emit);
      g[i - 1].pop_back();
      g[i].pop_back();
      while (!g.empty() && g.back().empty()) g.pop_back();
    }
  }
}

inline DominoTableau::Grid seed_grid(GroupType t) {
  return t == GroupType::B ? DominoTableau::Grid{{0}} : DominoTableau::Grid{};
}

}  // namespace detail

/// Number of dominos needed to fill the shape in the given type.
inline int dominos_in_shape(GroupType t, const Partition& shape) {
  const int m = partition_size(shape);
  if (t == GroupType::B) {
    if (m % 2 != 1) throw ValidationError("type B shapes have an odd square count");
    return (m - 1) / 2;
  }
  if (m % 2 != 0) throw ValidationError("the shape needs an even square count");
  return m / 2;
}

inline void for_each_sdt(GroupType t, int n,
                         const std::function<void(const DominoTableau&)>& fn) {
  if (n < 0) throw ValidationError("negative size");
  DominoTableau::Grid g = detail::seed_grid(t);
  detail::grow_sdt(t, 1, n, g, false, nullptr, [&](const DominoTableau::Grid& done) {
    fn(DominoTableau::from_grid(t, done));
  });
}

inline std::vector<DominoTableau> all_sdt(GroupType t, int n) {
  std::vector<DominoTableau> out;
  for_each_sdt(t, n, [&](const DominoTableau& x) { out.push_back(x); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<DominoTableau> sdt_of_shape(GroupType t, const Partition& shape) {
  if (!is_valid_partition(shape)) throw ValidationError("not a partition");
  const int n = dominos_in_shape(t, shape);
  std::vector<DominoTableau> out;
  DominoTableau::Grid g = detail::seed_grid(t);
  detail::grow_sdt(t, 1, n, g, false, &shape, [&](const DominoTableau::Grid& done) {
    out.push_back(DominoTableau::from_grid(t, done));
  });
  std::sort(out.begin(), out.end());
  return out;
}

enum class AdmissibleStrategy { FilterStandard, ChainGrowth };

inline void for_each_admissible(GroupType t, int n,
                                const std::function<void(const DominoTableau&)>& fn) {
  if (n < 0) throw ValidationError("negative size");
  DominoTableau::Grid g = detail::seed_grid(t);
  detail::grow_sdt(t, 1, n, g, true, nullptr, [&](const DominoTableau::Grid& done) {
    fn(DominoTableau::from_grid(t, done));
  });
}

inline std::vector<DominoTableau> all_admissible(
    GroupType t, int n, AdmissibleStrategy s = AdmissibleStrategy::ChainGrowth) {
  std::vector<DominoTableau> out;
  if (s == AdmissibleStrategy::ChainGrowth) {
    for_each_admissible(t, n, [&](const DominoTableau& x) { out.push_back(x); });
  } else {
    for_each_sdt(t, n, [&](const DominoTableau& x) {
      if (is_admissible(x)) out.push_back(x);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<DominoTableau> admissible_of_shape(
    GroupType t, const Partition& shape,
    AdmissibleStrategy s = AdmissibleStrategy::ChainGrowth) {
  if (!is_valid_partition(shape)) throw ValidationError("not a partition");
  const int n = dominos_in_shape(t, shape);
  std::vector<DominoTableau> out;
  if (s == AdmissibleStrategy::ChainGrowth) {
    DominoTableau::Grid g = detail::seed_grid(t);
    detail::grow_sdt(t, 1, n, g, true, &shape, [&](const DominoTableau::Grid& done) {
      out.push_back(DominoTableau::from_grid(t, done));
    });
  } else {
    for (const DominoTableau& x : sdt_of_shape(t, shape))
      if (is_admissible(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Signed classes over every admissible tableau of the given size, grouped
/// by tableau in grid order.
inline std::vector<SignedClass> all_signed_classes(GroupType t, int n, SignMode m) {
  std::vector<SignedClass> out;
  for (const DominoTableau& x : all_admissible(t, n)) {
    std::vector<SignedClass> cs = all_classes(x, m);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

inline std::vector<SignedClass> signed_classes_of_shape(GroupType t, const Partition& shape,
                                                        SignMode m) {
  std::vector<SignedClass> out;
  for (const DominoTableau& x : admissible_of_shape(t, shape)) {
    std::vector<SignedClass> cs = all_classes(x, m);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

/// All partitions of m, largest part first, in lexicographic order.
inline std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  Partition cur;
  const std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

/// Orbit shapes filled by n dominos.
inline std::vector<Partition> orbit_shapes(GroupType t, int n) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_of(square_count(t, n)))
    if (is_orbit_shape(p, t)) out.push_back(p);
  return out;
}

/// Standard Young tableaux of the shape, one square per label.
inline std::vector<DominoTableau::Grid> all_syt(const Partition& shape) {
  if (!is_valid_partition(shape)) throw ValidationError("not a partition");
  const int n = partition_size(shape);
  std::vector<DominoTableau::Grid> out;
  DominoTableau::Grid g;
  const std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.push_back(g);
      return;
    }
    const int rows = static_cast<int>(g.size());
    for (int i = 1; i <= rows + 1; ++i) {
      const int li = i <= rows ? static_cast<int>(g[i - 1].size()) : 0;
      if (i > static_cast<int>(shape.size()) || shape[i - 1] < li + 1) continue;
      if (i > 1 && static_cast<int>(g[i - 2].size()) < li + 1) continue;
      if (i > rows) g.emplace_back();
      g[i - 1].push_back(k);
      rec(k + 1);
      g[i - 1].pop_back();
      if (g.back().empty()) g.pop_back();
    }
  };
  rec(1);
  return out;
}

/// Number of standard Young tableaux by the hook length formula.
inline long long syt_count_hook(const Partition& shape) {
  if (!is_valid_partition(shape)) throw ValidationError("not a partition");
  const int m = partition_size(shape);
  std::vector<long long> hooks;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 1; j <= shape[i]; ++j) {
      int below = 0;
      for (std::size_t a = i + 1; a < shape.size(); ++a)
        if (shape[a] >= j) ++below;
      hooks.push_back(shape[i] - j + below + 1);
    }
  long long fact = 1;
  for (int i = 1; i <= m; ++i) fact *= i;
  long long hp = 1;
  for (long long h : hooks) hp *= h;
  return fact / hp;
}

}  // namespace tabx
