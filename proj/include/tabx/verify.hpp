#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tabx/bijection.hpp"
#include "tabx/clusters.hpp"
#include "tabx/cycles.hpp"
#include "tabx/enumerate.hpp"
#include "tabx/io.hpp"
#include "tabx/signed.hpp"
#include "tabx/tau.hpp"

namespace tabx {

struct CheckResult {
  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }
  long long total_cases() const {
    long long n = 0;
    for (const CheckResult& c : checks) n += c.cases;
    return n;
  }
};

namespace detail {

struct CheckFailure {
  std::string message;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw CheckFailure{msg};
}

template <class Fn>
inline void run_check(Report& r, const std::string& name, Fn&& fn) {
  CheckResult c;
  c.name = name;
  try {
    fn(c.cases);
  } catch (const CheckFailure& f) {
    c.passed = false;
    c.detail = f.message;
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  r.checks.push_back(std::move(c));
}

inline std::string describe(const DominoTableau& t) {
  return std::string(1, type_letter(t.type())) + " \"" + compact(t) + "\"";
}

/// Left- and top-closed square sets are exactly the Young diagrams.
inline bool young_set(const std::set<Square>& sq) {
  for (Square s : sq) {
    if (s.row > 1 && !sq.count({s.row - 1, s.col})) return false;
    if (s.col > 1 && !sq.count({s.row, s.col - 1})) return false;
  }
  return true;
}

}  // namespace detail

/// The largest shape covered when checking sizes up to max_size.
inline int shape_square_bound(GroupType t, int max_size) {
  return t == GroupType::B ? 2 * max_size + 1 : 2 * max_size + 2;
}

/// Orbit shapes with at most the given number of squares.
inline std::vector<Partition> orbit_shapes_up_to(GroupType t, int square_bound) {
  std::vector<Partition> out;
  for (int n = 0; square_count(t, n) <= square_bound; ++n)
    for (Partition& p : orbit_shapes(t, n)) out.push_back(std::move(p));
  return out;
}

/// Count tableaux with n dominos by brute force: place the dominos label by
/// label anywhere in a bounding box and keep the placements whose label
/// prefixes are all left- and top-closed.  Shares no logic with the growth
/// enumeration.
inline long long sdt_count_oracle(GroupType t, int n) {
  const int box = square_count(t, n) + 1;
  std::set<Square> used;
  if (t == GroupType::B) used.insert({1, 1});
  long long count = 0;
  const std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      ++count;
      return;
    }
    for (int r = 1; r <= box; ++r)
      for (int c = 1; c <= box; ++c)
        for (int o = 0; o < 2; ++o) {
          const Square a{r, c};
          const Square b = o == 0 ? Square{r, c + 1} : Square{r + 1, c};
          if (used.count(a) || used.count(b)) continue;
          used.insert(a);
          used.insert(b);
          if (detail::young_set(used)) rec(k + 1);
          used.erase(a);
          used.erase(b);
        }
  };
  rec(1);
  return count;
}

inline void check_bijection(Report& r, const std::vector<GroupType>& types, int max_size) {
  using detail::require;
  for (GroupType t : types) {
    detail::run_check(r, std::string("bijection/size/") + type_letter(t),
                      [&](long long& cases) {
      for (int n = 0; n <= max_size; ++n) {
        const std::vector<DominoTableau> sdt = all_sdt(t, n);
        const std::vector<SignedClass> xs = all_signed_classes(t, n, SignMode::OpCl);
        require(xs.size() == sdt.size(),
                "class and tableau counts differ at n=" + std::to_string(n) + ": " +
                    std::to_string(xs.size()) + " vs " + std::to_string(sdt.size()));
        std::set<DominoTableau> images;
        for (const SignedClass& x : xs) {
          const DominoTableau img = phi(x);
          require(img.type() == t && img.size() == n,
                  "phi image has the wrong size at " + detail::describe(x.tab));
          require(std::binary_search(sdt.begin(), sdt.end(), img),
                  "phi image is not on the tableau list at " + detail::describe(x.tab));
          require(images.insert(img).second, "phi repeats " + detail::describe(img));
          require(psi(img, SignMode::OpCl) == x,
                  "psi(phi(x)) is not x at " + detail::describe(x.tab));
          ++cases;
        }
        for (const DominoTableau& T : sdt) {
          require(phi(psi(T, SignMode::OpCl)) == T,
                  "phi(psi(T)) is not T at " + detail::describe(T));
          ++cases;
        }
      }
    });
    detail::run_check(r, std::string("bijection/shape/") + type_letter(t),
                      [&](long long& cases) {
      for (const Partition& shape : orbit_shapes_up_to(t, shape_square_bound(t, max_size))) {
        const std::vector<DominoTableau> sdt = sdt_of_shape(t, shape);
        const std::vector<SignedClass> xs = signed_classes_of_shape(t, shape, SignMode::Cl);
        require(xs.size() == sdt.size(),
                "class and tableau counts differ on shape " + format_partition(shape) + ": " +
                    std::to_string(xs.size()) + " vs " + std::to_string(sdt.size()));
        std::set<DominoTableau> images;
        for (const SignedClass& x : xs) {
          const DominoTableau img = phi(x);
          require(img.shape() == shape,
                  "phi changed the shape at " + detail::describe(x.tab));
          require(std::binary_search(sdt.begin(), sdt.end(), img),
                  "phi image is not on the tableau list at " + detail::describe(x.tab));
          require(images.insert(img).second, "phi repeats " + detail::describe(img));
          require(psi(img, SignMode::Cl) == x,
                  "psi(phi(x)) is not x at " + detail::describe(x.tab));
          ++cases;
        }
        for (const DominoTableau& T : sdt) {
          require(phi(psi(T, SignMode::Cl)) == T,
                  "phi(psi(T)) is not T at " + detail::describe(T));
          ++cases;
        }
      }
    });
  }
}

inline void check_involution(Report& r, const std::vector<GroupType>& types, int max_size) {
  using detail::require;
  for (GroupType t : types) {
    detail::run_check(r, std::string("involution/") + type_letter(t), [&](long long& cases) {
      for (int n = 0; n <= max_size; ++n)
        for (const DominoTableau& T : all_sdt(t, n))
          for (ParityClass cls : {ParityClass::BC, ParityClass::DD})
            for (const Cycle& y : all_cycles(T, cls)) {
              ++cases;
              const std::string at = std::string(class_name(cls)) + " cycle of " +
                                     std::to_string(y.min_label()) + " in " +
                                     detail::describe(T);
              if (y.open && y.acquired)
                require(square_addable(T.shape(), *y.acquired),
                        "the acquired square of the " + at + " is not addable");
              if (!cycle_movable(T, y)) {
                require(y.open, "a closed " + at + " did not move");
                require(!y.acquired || !square_removable(T.shape(), *y.vacated),
                        "a movable-looking " + at + " was refused");
                bool threw = false;
                try {
                  move_through(T, y);
                } catch (const MoveError&) {
                  threw = true;
                }
                require(threw, "the immovable " + at + " moved without error");
                continue;
              }
              const DominoTableau T2 = move_through(T, y);
              const Cycle y2 = cycle(T2, y.min_label(), cls);
              require(y2.label_set() == y.label_set(),
                      "moving changed the labels of the " + at);
              require(y2.open == y.open, "moving changed the openness of the " + at);
              if (y.open) {
                require(y2.vacated && y2.acquired,
                        "the moved " + at + " lost its boundary squares");
                require(*y2.vacated == *y.acquired && *y2.acquired == *y.vacated,
                        "the moved " + at + " did not swap its boundary squares");
                std::map<int, int> rowlen;
                const Partition s = T.shape();
                for (std::size_t i = 0; i < s.size(); ++i) rowlen[static_cast<int>(i) + 1] = s[i];
                rowlen[y.vacated->row] -= 1;
                rowlen[y.acquired->row] += 1;
                Partition expect;
                for (int i = 1; rowlen.count(i) && rowlen[i] > 0; ++i) expect.push_back(rowlen[i]);
                require(T2.shape() == expect, "moving the " + at + " mangled the shape");
              } else {
                require(T2.shape() == T.shape(), "moving the closed " + at + " changed the shape");
              }
              for (int k = 1; k <= T.size(); ++k) {
                if (y.label_set().count(k)) {
                  require(fixed_square(T, k, cls) == fixed_square(T2, k, cls),
                          "moving the " + at + " moved a fixed square");
                } else {
                  require(T.domino(k).first == T2.domino(k).first &&
                              T.domino(k).second == T2.domino(k).second,
                          "moving the " + at + " disturbed the domino of " + std::to_string(k));
                }
              }
              require(move_through(T2, y2) == T, "moving the " + at + " twice is not the identity");
            }
    });
  }
}

inline void check_order_independence(Report& r, const std::vector<GroupType>& types,
                                     int max_size) {
  using detail::require;
  for (GroupType t : types) {
    detail::run_check(r, std::string("order-independence/") + type_letter(t),
                      [&](long long& cases) {
      for (int n = 0; n <= std::min(4, max_size); ++n)
        for (const DominoTableau& T : all_admissible(t, n)) {
          std::vector<Cycle> sig_all;
          for (const Cluster& c : clusters(T))
            if (signable(c, SignMode::OpCl)) sig_all.push_back(initial_cycle(T, c));
          if (sig_all.size() < 2 || sig_all.size() >= 31) continue;
          for (unsigned mask = 0; mask < (1u << sig_all.size()); ++mask) {
            if (std::popcount(mask) < 2) continue;
            std::vector<Cycle> sigma;
            for (std::size_t i = 0; i < sig_all.size(); ++i)
              if ((mask >> i) & 1u) sigma.push_back(sig_all[i]);
            const DominoTableau base = move_through_set(T, sigma);
            std::vector<int> idx(sigma.size());
            std::iota(idx.begin(), idx.end(), 0);
            do {
              DominoTableau cur = T;
              for (int i : idx) {
                const Cycle f = cycle(cur, sigma[i].min_label(), sigma[i].cls);
                require(f.label_set() == sigma[i].label_set(),
                        "reordering changed a cycle at " + detail::describe(T));
                cur = move_through(cur, f);
              }
              require(cur == base, "orderings disagree at " + detail::describe(T));
              ++cases;
            } while (std::next_permutation(idx.begin(), idx.end()));
          }
        }
    });
  }
}

inline void check_clusters(Report& r, const std::vector<GroupType>& types, int max_size) {
  using detail::require;
  for (GroupType t : types) {
    detail::run_check(r, std::string("clusters/") + type_letter(t), [&](long long& cases) {
      for (int n = 0; n <= max_size; ++n)
        for (const DominoTableau& T : all_admissible(t, n)) {
          ++cases;
          const std::vector<Cluster> cs = clusters(T);
          std::set<int> seen;
          for (const Cluster& c : cs)
            for (int l : c.labels)
              require(seen.insert(l).second,
                      "clusters overlap at " + detail::describe(T));
          require(static_cast<int>(seen.size()) == n,
                  "clusters miss a label at " + detail::describe(T));
          int n_cl0 = 0;
          for (const Cluster& c : cs)
            if (c.kind == ClusterKind::Cl0) ++n_cl0;
          if (t == GroupType::D)
            require(n_cl0 == 0, "type D grew a zero cluster at " + detail::describe(T));
          else
            require(n_cl0 == (n == 0 ? 0 : 1),
                    "there must be one zero cluster at " + detail::describe(T));
          if (t == GroupType::B && n > 0)
            for (const Cluster& c : cs)
              if (c.kind == ClusterKind::Cl0)
                require(c.has_zero,
                        "the zero cluster misses the zero square at " + detail::describe(T));
          for (const Cluster& c : cs) {
            if (c.kind != ClusterKind::Cl0) {
              const Cycle y = initial_cycle(T, c);
              for (int l : y.labels)
                require(std::binary_search(c.labels.begin(), c.labels.end(), l),
                        "the initial cycle leaves its cluster at " + detail::describe(T));
            }
            if (c.kind == ClusterKind::Closed)
              require(domino_kind(T, c.id) == DominoKind::IPlus,
                      "a closed cluster starts without I+ at " + detail::describe(T));
          }
          std::set<int> row_end_clusters;
          for (int part : b_lambda(T.shape(), t)) {
            const int lab = end_of_row_label(T, part);
            if (lab == 0) continue;
            const Cluster& c = cluster_of(cs, lab);
            require(c.kind != ClusterKind::Closed,
                    "the end of a row of length " + std::to_string(part) +
                        " sits in a closed cluster at " + detail::describe(T));
            row_end_clusters.insert(c.id);
          }
          for (const Cluster& c : cs)
            if (c.kind == ClusterKind::Open)
              require(row_end_clusters.count(c.id) > 0,
                      "an open cluster holds no marked row end at " + detail::describe(T));
          for (const Cluster& a : cs)
            for (const Cluster& b : cs)
              if (a.id != b.id && b.kind == ClusterKind::Closed && nested_in(a, b))
                require(a.kind == ClusterKind::Closed,
                        "an open cluster is nested in a closed one at " + detail::describe(T));
        }
    });
  }
}

inline void check_infsup(Report& r, const std::vector<GroupType>& types, int max_size) {
  using detail::require;
  for (GroupType t : types) {
    detail::run_check(r, std::string("infsup/") + type_letter(t), [&](long long& cases) {
      for (int n = 0; n <= max_size; ++n)
        for (const DominoTableau& T : all_admissible(t, n)) {
          const std::vector<Cluster> cs = clusters(T);
          for (const Cluster& c : cs) {
            if (c.kind == ClusterKind::Cl0) continue;
            ++cases;
            std::map<int, int> mincol, maxcol;
            for (Square s : c.squares) {
              auto it = mincol.find(s.row);
              if (it == mincol.end() || s.col < it->second) mincol[s.row] = s.col;
              it = maxcol.find(s.row);
              if (it == maxcol.end() || s.col > it->second) maxcol[s.row] = s.col;
            }
            for (const auto& [row, col] : mincol)
              require(domino_kind(T, T.label_at({row, col})) == DominoKind::IPlus,
                      "a cluster's leftmost domino in row " + std::to_string(row) +
                          " is not I+ at " + detail::describe(T));
            std::map<int, int> mincol_bar = mincol;
            for (const Cluster& x : cs)
              if (x.id != c.id && nested_in(x, c))
                for (Square s : x.squares) {
                  auto it = mincol_bar.find(s.row);
                  if (it == mincol_bar.end() || s.col < it->second) mincol_bar[s.row] = s.col;
                }
            for (const auto& [row, col] : mincol_bar)
              require(domino_kind(T, T.label_at({row, col})) == DominoKind::IPlus,
                      "a closure's leftmost domino in row " + std::to_string(row) +
                          " is not I+ at " + detail::describe(T));
            if (c.kind == ClusterKind::Closed)
              for (const auto& [row, col] : maxcol)
                require(domino_kind(T, T.label_at({row, col})) == DominoKind::IMinus,
                        "a closed cluster's rightmost domino in row " + std::to_string(row) +
                            " is not I- at " + detail::describe(T));
          }
        }
    });
  }
}

inline void check_tau(Report& r, const std::vector<GroupType>& types, int max_size) {
  using detail::require;
  for (GroupType t : types) {
    detail::run_check(r, std::string("tau/") + type_letter(t), [&](long long& cases) {
      for (int n = 0; n <= max_size; ++n)
        for (const DominoTableau& T : all_admissible(t, n)) {
          std::set<SignedClass> visited;
          for (const SignedClass& x : all_classes(T, SignMode::OpCl)) {
            if (visited.count(x)) continue;
            const std::set<SignedClass> orb = au_orbit(x);
            const std::set<int> tau0 = tau(phi(x));
            for (const SignedClass& y : orb) {
              visited.insert(y);
              require(tau_agree(t, tau0, tau(phi(y))),
                      "tau is not constant on an orbit at " + detail::describe(T));
              ++cases;
            }
          }
          for (const SignedClass& x : all_classes(T, SignMode::OpCl)) {
            require(tau_agree(t, tau(phi(x)), tau(phi(embed(forget_open(x))))),
                    "tau differs between a class and its representative at " +
                        detail::describe(T));
            ++cases;
          }
        }
    });
  }
}

inline void check_counts(Report& r, const std::vector<GroupType>& types, int max_size) {
  using detail::require;
  for (GroupType t : types) {
    detail::run_check(r, std::string("counts/orbits/") + type_letter(t),
                      [&](long long& cases) {
      for (const Partition& shape : orbit_shapes_up_to(t, shape_square_bound(t, max_size))) {
        const std::vector<SignedClass> xs = signed_classes_of_shape(t, shape, SignMode::OpCl);
        std::set<SignedClass> left(xs.begin(), xs.end());
        long long orbits = 0;
        while (!left.empty()) {
          for (const SignedClass& y : au_orbit(*left.begin())) {
            require(left.erase(y) == 1,
                    "an orbit left its shape on " + format_partition(shape));
          }
          ++orbits;
        }
        const long long cl = static_cast<long long>(
            signed_classes_of_shape(t, shape, SignMode::Cl).size());
        const long long sdt = static_cast<long long>(sdt_of_shape(t, shape).size());
        require(orbits == cl && cl == sdt,
                "orbit, class and tableau counts differ on shape " + format_partition(shape) +
                    ": " + std::to_string(orbits) + ", " + std::to_string(cl) + ", " +
                    std::to_string(sdt));
        ++cases;
      }
    });
    detail::run_check(r, std::string("counts/oracle/") + type_letter(t),
                      [&](long long& cases) {
      for (int n = 0; n <= std::min(2, max_size); ++n) {
        const long long brute = sdt_count_oracle(t, n);
        const long long grown = static_cast<long long>(all_sdt(t, n).size());
        require(brute == grown, "the brute force count differs at n=" + std::to_string(n) +
                                    ": " + std::to_string(brute) + " vs " +
                                    std::to_string(grown));
        if (n == 2) require(brute == 6, "six tableaux expected at n=2");
        ++cases;
      }
    });
    detail::run_check(r, std::string("counts/strategies/") + type_letter(t),
                      [&](long long& cases) {
      for (int n = 0; n <= max_size; ++n) {
        const std::vector<DominoTableau> filt =
            all_admissible(t, n, AdmissibleStrategy::FilterStandard);
        const std::vector<DominoTableau> grown =
            all_admissible(t, n, AdmissibleStrategy::ChainGrowth);
        require(filt == grown, "the two admissible enumerations differ at n=" +
                                   std::to_string(n));
        for (const DominoTableau& T : grown)
          require(is_orbit_shape(T.shape(), t),
                  "an admissible tableau has a non-orbit shape: " + detail::describe(T));
        long long streamed = 0;
        for_each_sdt(t, n, [&](const DominoTableau&) { ++streamed; });
        require(streamed == static_cast<long long>(all_sdt(t, n).size()),
                "streaming disagrees with collection at n=" + std::to_string(n));
        ++cases;
      }
    });
  }
  detail::run_check(r, "counts/syt", [&](long long& cases) {
    for (int m = 1; m <= 8; ++m)
      for (const Partition& p : partitions_of(m)) {
        require(static_cast<long long>(all_syt(p).size()) == syt_count_hook(p),
                "hook count differs on " + format_partition(p));
        ++cases;
      }
    require(syt_count_hook({3, 2}) == 5, "five tableaux expected on 3,2");
    require(syt_count_hook({2, 1}) == 2, "two tableaux expected on 2,1");
    require(syt_count_hook({1, 1, 1}) == 1, "one tableau expected on 1,1,1");
  });
}

inline std::vector<std::string> suite_names() {
  return {"bijection", "involution", "order-independence", "clusters",
          "infsup",    "tau",        "counts"};
}

inline Report verify_suite(const std::string& suite, const std::vector<GroupType>& types,
                           int max_size) {
  Report r;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "bijection") check_bijection(r, types, max_size), known = true;
  if (all || suite == "involution") check_involution(r, types, max_size), known = true;
  if (all || suite == "order-independence") check_order_independence(r, types, max_size), known = true;
  if (all || suite == "clusters") check_clusters(r, types, max_size), known = true;
  if (all || suite == "infsup") check_infsup(r, types, max_size), known = true;
  if (all || suite == "tau") check_tau(r, types, max_size), known = true;
  if (all || suite == "counts") check_counts(r, types, max_size), known = true;
  if (!known) throw ParseError("unknown suite '" + suite + "'");
  return r;
}

}  // namespace tabx
