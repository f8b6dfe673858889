#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "tabx/clusters.hpp"
#include "tabx/cycles.hpp"
#include "tabx/signed.hpp"

namespace tabx {

inline void validate_class(const SignedClass& x) {
  std::set<int> expected;
  for (const Cluster& c : clusters(x.tab))
    if (signable(c, x.mode)) expected.insert(c.id);
  std::set<int> given;
  for (const auto& [k, v] : x.cluster_sign) {
    if (v != +1 && v != -1) throw ValidationError("signs must be + or -");
    given.insert(k);
  }
  if (given != expected) throw ValidationError("sign keys do not match the signable clusters");
}

/// Map a signed class to a standard tableau: move through the initial
/// cycles of all positively signed clusters, smallest label first.  A cl
/// class is first given the sign - on every open cluster.
inline DominoTableau phi(const SignedClass& x0) {
  validate_class(x0);
  const SignedClass x = embed(x0);
  std::vector<Cycle> sigma;
  for (const Cluster& c : clusters(x.tab))
    if (signable(c, SignMode::OpCl) && x.cluster_sign.at(c.id) > 0)
      sigma.push_back(initial_cycle(x.tab, c));
  try {
    return move_through_set(x.tab, sigma);
  } catch (const MoveError& e) {
    throw InternalError(std::string("phi failed to move its cycles: ") + e.what());
  }
}

/// The cycles carrying the inadmissible dominos of t, each computed in the
/// class fixing the left square of its smallest inadmissible label.  The
/// selected cycles must be disjoint and each must start at the label that
/// selected it; otherwise t is outside the image of phi.
inline std::vector<Cycle> iota(const DominoTableau& t) {
  std::set<int> pool;
  for (int k = 1; k <= t.size(); ++k)
    if (domino_kind(t, k) == DominoKind::InadmissibleHorizontal) pool.insert(k);
  std::vector<Cycle> out;
  std::set<int> taken;
  while (!pool.empty()) {
    const int k = *pool.begin();
    const ParityClass c =
        t.domino(k).first.parity() == 1 ? ParityClass::BC : ParityClass::DD;
    Cycle y = cycle(t, k, c);
    if (y.min_label() != k)
      throw UncoveredInadmissible("label " + std::to_string(k) +
                                  " is not first in its cycle");
    for (int l : y.labels) {
      if (taken.count(l))
        throw UncoveredInadmissible("the cycles through the inadmissible labels overlap");
      taken.insert(l);
      pool.erase(l);
    }
    out.push_back(std::move(y));
  }
  return out;
}

/// Inverse of phi: undo the cycles found by iota, then read the signs off
/// the result.  Throws UncoveredInadmissible when t is not in the image.
inline SignedClass psi(const DominoTableau& t, SignMode m) {
  const std::vector<Cycle> ys = iota(t);
  DominoTableau base = t;
  try {
    base = move_through_set(t, ys);
  } catch (const MoveError& e) {
    throw UncoveredInadmissible(std::string("the inadmissible cycles cannot be undone: ") +
                                e.what());
  }
  const AdmissibilityResult adm = admissibility(base);
  if (!adm.admissible)
    throw UncoveredInadmissible("undoing the cycles left label " +
                                std::to_string(adm.failing_label) + " inadmissible");
  const std::vector<Cluster> cs = clusters(base);
  SignedClass out{base, SignMode::OpCl, {}};
  for (const Cluster& c : cs)
    if (signable(c, SignMode::OpCl)) out.cluster_sign[c.id] = -1;
  for (const Cycle& y : ys) {
    const std::set<int> labels = y.label_set();
    bool matched = false;
    for (const Cluster& c : cs) {
      if (!signable(c, SignMode::OpCl)) continue;
      if (initial_cycle(base, c).label_set() == labels) {
        out.cluster_sign.at(c.id) = +1;
        matched = true;
        break;
      }
    }
    if (!matched)
      throw UncoveredInadmissible("a moved cycle is not the initial cycle of any cluster");
  }
  return m == SignMode::Cl ? forget_open(out) : out;
}

}  // namespace tabx
