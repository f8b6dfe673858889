#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tabx/errors.hpp"
#include "tabx/tableau.hpp"

namespace tabx {
namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

/// Lexed tableau text: `key: value` header lines plus rows of labels.
struct RawTableau {
  std::optional<GroupType> type;
  std::optional<std::string> mode;
  std::optional<std::string> signs;
  DominoTableau::Grid rows;
};

inline RawTableau lex_tableau(const std::string& text) {
  RawTableau raw;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon != std::string::npos) {
      std::string key = trim(line.substr(0, colon));
      std::string value = trim(line.substr(colon + 1));
      if (key == "type") {
        if (value.size() != 1) throw ParseError("bad type '" + value + "'");
        raw.type = type_from_letter(value[0]);
      } else if (key == "mode") {
        raw.mode = value;
      } else if (key == "signs") {
        raw.signs = value;
      } else {
        throw ParseError("unknown header '" + key + "'");
      }
      continue;
    }
    std::vector<int> row;
    std::istringstream cells(line);
    std::string tok;
    while (cells >> tok) {
      try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw ParseError("");
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad label '" + tok + "'");
      }
    }
    raw.rows.push_back(std::move(row));
  }
  return raw;
}

}  // namespace detail

/// Parse the plain format: an optional `type: B|C|D` header followed by the
/// rows of the grid, one per line, labels separated by whitespace.  The
/// header wins over the fallback type.
inline DominoTableau parse_tableau(const std::string& text,
                                   std::optional<GroupType> fallback = std::nullopt) {
  detail::RawTableau raw = detail::lex_tableau(text);
  if (raw.mode || raw.signs)
    throw ParseError("sign headers are not allowed in a plain tableau");
  std::optional<GroupType> t = raw.type ? raw.type : fallback;
  if (!t) throw ParseError("no group type given");
  return DominoTableau::from_grid(*t, std::move(raw.rows));
}

/// Render rows top to bottom, labels separated by single spaces.
inline std::string render_tableau(const DominoTableau& t, bool with_type_header = false) {
  std::string out;
  if (with_type_header) {
    out += "type: ";
    out += type_letter(t.type());
    out += '\n';
  }
  for (const auto& row : t.grid()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

/// Compact one line form "1 2 2/1 3 3" used in messages and tests.
inline std::string compact(const DominoTableau& t) {
  std::string out;
  const auto& g = t.grid();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += '/';
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(g[i][j]);
    }
  }
  return out;
}

/// Parse the compact form (rows separated by '/'), mainly for tests.
inline DominoTableau parse_compact(GroupType type, const std::string& s) {
  std::string text = s;
  for (char& c : text)
    if (c == '/') c = '\n';
  return parse_tableau(text, type);
}

}  // namespace tabx
