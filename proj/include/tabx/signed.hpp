#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tabx/clusters.hpp"
#include "tabx/io.hpp"

namespace tabx {

/// Which clusters carry a sign: both open and closed ones, or only closed
/// ones.  The zero cluster is never signed.
enum class SignMode { OpCl, Cl };

inline std::string mode_name(SignMode m) { return m == SignMode::OpCl ? "opcl" : "cl"; }

inline SignMode mode_from_name(const std::string& s) {
  if (s == "opcl") return SignMode::OpCl;
  if (s == "cl") return SignMode::Cl;
  throw ParseError("unknown mode '" + s + "'");
}

inline bool signable(const Cluster& c, SignMode m) {
  if (c.kind == ClusterKind::Cl0) return false;
  return m == SignMode::OpCl || c.kind == ClusterKind::Closed;
}

/// Equivalence class of signed tableaux: an admissible tableau together
/// with one sign per signable cluster, keyed by the cluster's smallest
/// label.
struct SignedClass {
  DominoTableau tab = DominoTableau::empty(GroupType::C);
  SignMode mode = SignMode::OpCl;
  std::map<int, int> cluster_sign;

  bool operator==(const SignedClass& o) const {
    return mode == o.mode && tab == o.tab && cluster_sign == o.cluster_sign;
  }
  bool operator<(const SignedClass& o) const {
    if (mode != o.mode) return mode < o.mode;
    if (!(tab == o.tab)) return tab < o.tab;
    return cluster_sign < o.cluster_sign;
  }
};

/// Validated constructor: the sign keys must be exactly the signable
/// cluster ids and the values +1 or -1.
inline SignedClass make_class(DominoTableau t, SignMode m, std::map<int, int> signs) {
  const std::vector<Cluster> cs = clusters(t);
  std::set<int> expected;
  for (const Cluster& c : cs)
    if (signable(c, m)) expected.insert(c.id);
  std::set<int> given;
  for (const auto& [k, v] : signs) {
    if (v != +1 && v != -1)
      throw ValidationError("sign of cluster " + std::to_string(k) + " must be + or -");
    given.insert(k);
  }
  if (given != expected) {
    std::string msg = "sign keys must be exactly the signable cluster labels:";
    for (int k : expected) msg += ' ' + std::to_string(k);
    throw ValidationError(msg);
  }
  return SignedClass{std::move(t), m, std::move(signs)};
}

/// Every class over one tableau: all sign patterns, listed with the pattern
/// of pluses first and the sign of the smallest cluster varying fastest.
inline std::vector<SignedClass> all_classes(const DominoTableau& t, SignMode m) {
  const std::vector<Cluster> cs = clusters(t);
  std::vector<int> ids;
  for (const Cluster& c : cs)
    if (signable(c, m)) ids.push_back(c.id);
  if (ids.size() >= 31) throw ValidationError("too many signable clusters");
  std::vector<SignedClass> out;
  for (unsigned mask = 0; mask < (1u << ids.size()); ++mask) {
    std::map<int, int> signs;
    for (std::size_t i = 0; i < ids.size(); ++i)
      signs[ids[i]] = (mask >> i) & 1u ? -1 : +1;
    out.push_back(SignedClass{t, m, std::move(signs)});
  }
  return out;
}

/// Drop the signs of open clusters.
inline SignedClass forget_open(const SignedClass& x) {
  if (x.mode == SignMode::Cl) return x;
  SignedClass out{x.tab, SignMode::Cl, {}};
  for (const Cluster& c : clusters(x.tab))
    if (signable(c, SignMode::Cl)) out.cluster_sign[c.id] = x.cluster_sign.at(c.id);
  return out;
}

/// Section of forget_open: give every open cluster the sign -.
inline SignedClass embed(const SignedClass& x) {
  if (x.mode == SignMode::OpCl) return x;
  SignedClass out{x.tab, SignMode::OpCl, x.cluster_sign};
  for (const Cluster& c : clusters(x.tab))
    if (c.kind == ClusterKind::Open) out.cluster_sign[c.id] = -1;
  return out;
}

/// Label at the end of row r, where r is a part of the shape and the row
/// is the first one of that length.  Returns 0 when that square is the
/// zero square.
inline int end_of_row_label(const DominoTableau& t, int r) {
  const Partition shape = t.shape();
  for (std::size_t a = 0; a < shape.size(); ++a)
    if (shape[a] == r) return t.label_at({static_cast<int>(a) + 1, r});
  throw ValidationError("no row of length " + std::to_string(r));
}

/// Generator of the component group attached to a part r: flip the sign of
/// the cluster through the domino ending the first row of length r.  The
/// zero cluster gives the identity; so does an unsigned open cluster.
inline SignedClass au_generator(const SignedClass& x, int r) {
  const int label = end_of_row_label(x.tab, r);
  if (label == 0) return x;
  const std::vector<Cluster> cs = clusters(x.tab);
  const Cluster& c = cluster_of(cs, label);
  if (c.kind == ClusterKind::Cl0) return x;
  if (c.kind == ClusterKind::Closed)
    throw InternalError("a generator reached the closed cluster of " + std::to_string(c.id));
  if (!signable(c, x.mode)) return x;
  SignedClass out = x;
  out.cluster_sign.at(c.id) *= -1;
  return out;
}

/// Orbit of the class under all generators, one per part in b_lambda.
inline std::set<SignedClass> au_orbit(const SignedClass& x) {
  const std::set<int> gens = b_lambda(x.tab.shape(), x.tab.type());
  std::set<SignedClass> seen{x};
  std::vector<SignedClass> queue{x};
  while (!queue.empty()) {
    SignedClass cur = queue.back();
    queue.pop_back();
    for (int r : gens) {
      SignedClass next = au_generator(cur, r);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

/// Parse the signed format: `type:` and `mode:` headers, the grid rows and
/// a `signs:` line listing `label=+` or `label=-` per signable cluster.
inline SignedClass parse_signed(const std::string& text,
                                std::optional<GroupType> fallback_type = std::nullopt,
                                std::optional<SignMode> fallback_mode = std::nullopt) {
  detail::RawTableau raw = detail::lex_tableau(text);
  std::optional<GroupType> t = raw.type ? raw.type : fallback_type;
  if (!t) throw ParseError("no group type given");
  std::optional<SignMode> m =
      raw.mode ? std::optional<SignMode>(mode_from_name(*raw.mode)) : fallback_mode;
  if (!m) throw ParseError("no sign mode given");
  std::map<int, int> signs;
  if (raw.signs) {
    std::istringstream in(*raw.signs);
    std::string tok;
    while (in >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq + 2 != tok.size() ||
          (tok[eq + 1] != '+' && tok[eq + 1] != '-'))
        throw ParseError("bad sign '" + tok + "'");
      int key = 0;
      try {
        std::size_t pos = 0;
        key = std::stoi(tok.substr(0, eq), &pos);
        if (pos != eq) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad sign '" + tok + "'");
      }
      if (!signs.emplace(key, tok[eq + 1] == '+' ? +1 : -1).second)
        throw ParseError("cluster " + std::to_string(key) + " is signed twice");
    }
  }
  return make_class(DominoTableau::from_grid(*t, std::move(raw.rows)), *m, std::move(signs));
}

inline std::string render_signed(const SignedClass& x) {
  std::string out = "type: ";
  out += type_letter(x.tab.type());
  out += '\n';
  out += "mode: " + mode_name(x.mode) + '\n';
  out += render_tableau(x.tab, false);
  out += "signs:";
  for (const auto& [k, v] : x.cluster_sign) {
    out += ' ' + std::to_string(k);
    out += '=';
    out += v > 0 ? '+' : '-';
  }
  out += '\n';
  return out;
}

}  // namespace tabx
