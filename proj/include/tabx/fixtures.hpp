#pragma once

#include <string>
#include <vector>

#include "tabx/errors.hpp"

namespace tabx {

/// Sample inputs bundled with the toolkit.  The same files ship in the
/// fixtures/ directory of the source tree.
struct Fixture {
  const char* name;
  const char* content;
};

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> fs = {
      {"t_c",
       "type: C\n"
       "1 2 3 4 5 5\n"
       "1 2 3 4\n"},
      {"t_c_prime",
       "type: C\n"
       "1 2 2 3 3 5 5\n"
       "1 4 4\n"},
      {"t_c_mt2",
       "type: C\n"
       "1 2 2 4 5 5\n"
       "1 3 3 4\n"},
      {"t_c_mt4",
       "type: C\n"
       "1 2 3 4 4 5 5\n"
       "1 2 3\n"},
      {"t_d12",
       "type: D\n"
       "1 3 3 5 5 11\n"
       "1 4 6 7 8 11\n"
       "2 4 6 7 8 12\n"
       "2 9 9 10 10 12\n"},
      {"t_d1",
       "type: D\n"
       "1 2 3\n"
       "1 2 3\n"},
      {"t_d2",
       "type: D\n"
       "1 2 2\n"
       "1 3 3\n"},
      {"t_d1_plus",
       "type: D\n"
       "mode: cl\n"
       "1 2 3\n"
       "1 2 3\n"
       "signs: 1=+\n"},
      {"t_d1_opcl_pp",
       "type: D\n"
       "mode: opcl\n"
       "1 2 3\n"
       "1 2 3\n"
       "signs: 1=+ 3=+\n"},
      {"t_d1_opcl_pm",
       "type: D\n"
       "mode: opcl\n"
       "1 2 3\n"
       "1 2 3\n"
       "signs: 1=+ 3=-\n"},
      {"t_d1_opcl_mp",
       "type: D\n"
       "mode: opcl\n"
       "1 2 3\n"
       "1 2 3\n"
       "signs: 1=- 3=+\n"},
      {"t_d1_opcl_mm",
       "type: D\n"
       "mode: opcl\n"
       "1 2 3\n"
       "1 2 3\n"
       "signs: 1=- 3=-\n"},
      {"t_d2_opcl_plus",
       "type: D\n"
       "mode: opcl\n"
       "1 2 2\n"
       "1 3 3\n"
       "signs: 1=+\n"},
      {"t_d2_opcl_minus",
       "type: D\n"
       "mode: opcl\n"
       "1 2 2\n"
       "1 3 3\n"
       "signs: 1=-\n"},
      {"t_d1_phi_pp",
       "type: D\n"
       "1 1 3 3\n"
       "2 2\n"},
      {"t_d1_phi_pm",
       "type: D\n"
       "1 1 3\n"
       "2 2 3\n"},
      {"t_d1_phi_mp",
       "type: D\n"
       "1 2 3 3\n"
       "1 2\n"},
      {"t_d2_phi_plus",
       "type: D\n"
       "1 1 2 2\n"
       "3 3\n"},
  };
  return fs;
}

inline const char* fixture(const std::string& name) {
  for (const Fixture& f : fixtures())
    if (name == f.name) return f.content;
  throw ValidationError("no fixture named '" + name + "'");
}

}  // namespace tabx
