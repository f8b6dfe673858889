#pragma once

#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tabx/errors.hpp"

namespace tabx {

enum class GroupType { B, C, D };

/// Sign of the defining form: +1 for the orthogonal types B and D, -1 for C.
inline int epsilon(GroupType t) { return t == GroupType::C ? -1 : +1; }

/// Number of squares covered by n dominos: 2n+1 in type B (the zero square
/// at the top-left corner is always present), 2n in types C and D.
inline int square_count(GroupType t, int n) {
  return t == GroupType::B ? 2 * n + 1 : 2 * n;
}

inline char type_letter(GroupType t) {
  switch (t) {
    case GroupType::B: return 'B';
    case GroupType::C: return 'C';
    default: return 'D';
  }
}

inline GroupType type_from_letter(char c) {
  switch (c) {
    case 'B': case 'b': return GroupType::B;
    case 'C': case 'c': return GroupType::C;
    case 'D': case 'd': return GroupType::D;
    default: throw ParseError(std::string("unknown group type '") + c + "'");
  }
}

/// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

inline bool is_valid_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline int partition_size(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

/// Shapes of nilpotent orbits.  A partition lies in P_eps iff every part
/// value i with (-1)^i == eps occurs an even number of times; the total must
/// be odd in type B and even in types C and D.  A size mismatch yields false.
inline bool is_orbit_shape(const Partition& p, GroupType t) {
  if (!is_valid_partition(p)) throw ValidationError("not a partition");
  const int m = partition_size(p);
  if (t == GroupType::B ? m % 2 == 0 : m % 2 != 0) return false;
  const int eps = epsilon(t);
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const int sign = p[i] % 2 == 0 ? +1 : -1;  // (-1)^part
    if (sign == eps && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

/// Distinct parts r with (-1)^r == -eps.  These index the Z_2 factors of the
/// component group attached to the orbit of shape lambda.
inline std::set<int> b_lambda(const Partition& p, GroupType t) {
  if (!is_valid_partition(p)) throw ValidationError("not a partition");
  const int eps = epsilon(t);
  std::set<int> out;
  for (int r : p) {
    const int sign = r % 2 == 0 ? +1 : -1;
    if (sign == -eps) out.insert(r);
  }
  return out;
}

/// Comma separated parts, e.g. "6,4".  Trailing zero parts are stripped.
inline Partition parse_partition(const std::string& s) {
  Partition p;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad partition part '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size()) throw ParseError("bad partition part '" + token + "'");
    if (v < 0) throw ParseError("negative partition part");
    p.push_back(v);
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!is_valid_partition(p)) throw ParseError("parts must be weakly decreasing");
  return p;
}

inline std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace tabx
