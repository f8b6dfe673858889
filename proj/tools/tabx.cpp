// tabx: command line front end for the domino tableau library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tabx/tabx.hpp"

using namespace tabx;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in.good()) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<GroupType> opt_type(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s.size() != 1) throw ParseError("unknown group type '" + s + "'");
  return type_from_letter(s[0]);
}

ParityClass parse_class(const std::string& s) {
  if (s == "BC" || s == "bc") return ParityClass::BC;
  if (s == "DD" || s == "dd") return ParityClass::DD;
  throw ParseError("unknown cycle class '" + s + "' (use BC or DD)");
}

std::vector<GroupType> parse_types(const std::string& s) {
  std::vector<GroupType> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    if (token.size() != 1) throw ParseError("unknown group type '" + token + "'");
    out.push_back(type_from_letter(token[0]));
  }
  if (out.empty()) throw ParseError("no group type given");
  return out;
}

std::string square_str(const Square& s) {
  return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

std::string label_set_str(const std::vector<int>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out + "}";
}

void print_cycle(const DominoTableau& t, const Cycle& y) {
  std::string line = std::string("class=") + class_name(y.cls) +
                     " labels=" + label_set_str(y.labels) +
                     " kind=" + (y.open ? "open" : "closed");
  if (y.open) {
    line += " vacated=" + square_str(*y.vacated);
    line += " acquired=" + (y.acquired ? square_str(*y.acquired) : std::string("none"));
    line += std::string(" movable=") + (cycle_movable(t, y) ? "yes" : "no");
  }
  std::cout << line << '\n';
}

std::string signs_str(const SignedClass& x) {
  std::string out;
  for (const auto& [k, v] : x.cluster_sign) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k);
    out += '=';
    out += v > 0 ? '+' : '-';
  }
  return out;
}

int run_verify(const std::string& suite, const std::string& types_str, int max_size,
               const std::string& report_path) {
  if (max_size < 0) throw ParseError("negative size bound");
  if (const char* cap = std::getenv("TABX_MAX_SIZE")) {
    try {
      max_size = std::min(max_size, std::stoi(cap));
    } catch (const std::exception&) {
      throw ParseError("TABX_MAX_SIZE must be an integer");
    }
  }
  const std::vector<GroupType> types = parse_types(types_str);
  const Report r = verify_suite(suite, types, max_size);
  for (const CheckResult& c : r.checks) {
    std::cout << "check=" << c.name << " status=" << (c.passed ? "pass" : "fail")
              << " cases=" << c.cases;
    if (!c.passed) std::cout << " detail=" << c.detail;
    std::cout << '\n';
  }
  long long failed = 0;
  for (const CheckResult& c : r.checks)
    if (!c.passed) ++failed;
  std::cout << "checks=" << r.checks.size() << " failed=" << failed
            << " cases=" << r.total_cases() << " max_size=" << max_size << '\n';
  if (!report_path.empty()) {
    nlohmann::json j;
    j["suite"] = suite;
    j["max_size"] = max_size;
    std::vector<std::string> tnames;
    for (GroupType t : types) tnames.push_back(std::string(1, type_letter(t)));
    j["types"] = tnames;
    j["checks"] = nlohmann::json::array();
    for (const CheckResult& c : r.checks)
      j["checks"].push_back({{"name", c.name},
                             {"passed", c.passed},
                             {"cases", c.cases},
                             {"detail", c.detail}});
    j["all_passed"] = r.all_passed();
    j["total_cases"] = r.total_cases();
    std::ofstream out(report_path);
    if (!out.good()) throw ParseError("cannot write '" + report_path + "'");
    out << j.dump(2) << '\n';
  }
  return r.all_passed() ? 0 : 1;
}

int run_enum(const std::string& what, const std::string& type_str, const std::string& shape_str,
             int size, bool has_size, const std::string& mode_str, bool count_only) {
  const std::optional<GroupType> ty = opt_type(type_str);
  const bool has_shape = !shape_str.empty();
  if (what == "syt") {
    if (!has_shape) throw ParseError("syt enumeration needs --shape");
    const std::vector<DominoTableau::Grid> ts = all_syt(parse_partition(shape_str));
    if (count_only) {
      std::cout << ts.size() << '\n';
      return 0;
    }
    for (const DominoTableau::Grid& g : ts) {
      std::string line;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) line += '/';
        for (std::size_t j = 0; j < g[i].size(); ++j) {
          if (j) line += ' ';
          line += std::to_string(g[i][j]);
        }
      }
      std::cout << line << '\n';
    }
    return 0;
  }
  if (!ty) throw ParseError("no group type given");
  if (has_shape == has_size) throw ParseError("give exactly one of --shape and --size");
  if (what == "sdt" || what == "admissible") {
    std::vector<DominoTableau> ts;
    if (what == "sdt")
      ts = has_shape ? sdt_of_shape(*ty, parse_partition(shape_str)) : all_sdt(*ty, size);
    else
      ts = has_shape ? admissible_of_shape(*ty, parse_partition(shape_str))
                     : all_admissible(*ty, size);
    if (count_only) {
      std::cout << ts.size() << '\n';
      return 0;
    }
    for (const DominoTableau& t : ts) std::cout << compact(t) << '\n';
    return 0;
  }
  if (what == "classes") {
    const SignMode m = mode_from_name(mode_str);
    const std::vector<SignedClass> xs =
        has_shape ? signed_classes_of_shape(*ty, parse_partition(shape_str), m)
                  : all_signed_classes(*ty, size, m);
    if (count_only) {
      std::cout << xs.size() << '\n';
      return 0;
    }
    for (const SignedClass& x : xs)
      std::cout << compact(x.tab) << " | " << signs_str(x) << '\n';
    return 0;
  }
  throw ParseError("unknown enumeration '" + what + "' (use sdt, syt, admissible or classes)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tabx: standard and admissible domino tableaux for the classical types B, C, D;\n"
      "cycles and moving-through, clusters, signed classes, the phi/psi bijections,\n"
      "tau invariants, exhaustive enumeration and a self-verification suite.\n"
      "Tableau files: optional 'type: B|C|D' header, then the grid rows; signed files\n"
      "add a 'mode: opcl|cl' header and a trailing 'signs: 1=+ 3=-' line."};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string type_str, class_str = "BC", mode_str = "opcl";
  std::string shape_str, what_str, suite = "all", types_str = "B,C,D", report_path;
  std::string fixture_name;
  int label = 0, size = 0, max_size = 4;
  bool count_only = false;
  int rc = 0;

  CLI::App* adm = app.add_subcommand("admissible", "check admissibility of a tableau");
  adm->add_option("--in", in_path, "input file, - for standard input");
  adm->add_option("--type", type_str, "group type when the file has no header");
  adm->callback([&] {
    const DominoTableau t = parse_tableau(read_input(in_path), opt_type(type_str));
    const AdmissibilityResult r = admissibility(t);
    std::cout << "admissible: " << (r.admissible ? "yes" : "no") << '\n';
    if (!r.admissible) std::cout << "failing label: " << r.failing_label << '\n';
    std::string kinds;
    for (int k = 1; k <= t.size(); ++k)
      kinds += (k > 1 ? " " : "") + std::to_string(k) + "=" + kind_name(domino_kind(t, k));
    if (t.size() > 0) std::cout << "kinds: " << kinds << '\n';
  });

  CLI::App* clu = app.add_subcommand("clusters", "list the clusters of an admissible tableau");
  clu->add_option("--in", in_path, "input file, - for standard input");
  clu->add_option("--type", type_str, "group type when the file has no header");
  clu->callback([&] {
    const DominoTableau t = parse_tableau(read_input(in_path), opt_type(type_str));
    for (const Cluster& c : clusters(t))
      std::cout << "id=" << c.id << " kind=" << cluster_kind_name(c.kind)
                << " class=" << class_name(c.cls) << " labels=" << label_set_str(c.labels)
                << '\n';
  });

  CLI::App* cyc = app.add_subcommand("cycles", "list the cycles of one parity class");
  cyc->add_option("--in", in_path, "input file, - for standard input");
  cyc->add_option("--type", type_str, "group type when the file has no header");
  cyc->add_option("--class", class_str, "parity class, BC or DD");
  CLI::Option* cyc_label = cyc->add_option("--label", label, "only the cycle through this label");
  cyc->callback([&] {
    const DominoTableau t = parse_tableau(read_input(in_path), opt_type(type_str));
    const ParityClass c = parse_class(class_str);
    if (*cyc_label) {
      print_cycle(t, cycle(t, label, c));
    } else {
      for (const Cycle& y : all_cycles(t, c)) print_cycle(t, y);
    }
  });

  CLI::App* mt = app.add_subcommand("move-through", "move through the cycle of a label");
  mt->add_option("--in", in_path, "input file, - for standard input");
  mt->add_option("--type", type_str, "group type when the file has no header");
  mt->add_option("--class", class_str, "parity class, BC or DD");
  mt->add_option("--label", label, "label selecting the cycle")->required();
  mt->callback([&] {
    const DominoTableau t = parse_tableau(read_input(in_path), opt_type(type_str));
    std::cout << render_tableau(move_through(t, label, parse_class(class_str)), true);
  });

  CLI::App* phi_cmd = app.add_subcommand("phi", "map a signed class to a standard tableau");
  phi_cmd->add_option("--in", in_path, "signed input file, - for standard input");
  phi_cmd->add_option("--type", type_str, "group type when the file has no header");
  phi_cmd->add_option("--mode", mode_str, "sign mode when the file has no header, opcl or cl");
  phi_cmd->callback([&] {
    const SignedClass x =
        parse_signed(read_input(in_path), opt_type(type_str), mode_from_name(mode_str));
    std::cout << render_tableau(phi(x), true);
  });

  CLI::App* psi_cmd = app.add_subcommand("psi", "map a standard tableau back to a signed class");
  psi_cmd->add_option("--in", in_path, "input file, - for standard input");
  psi_cmd->add_option("--type", type_str, "group type when the file has no header");
  psi_cmd->add_option("--mode", mode_str, "sign mode of the result, opcl or cl");
  psi_cmd->callback([&] {
    const DominoTableau t = parse_tableau(read_input(in_path), opt_type(type_str));
    std::cout << render_signed(psi(t, mode_from_name(mode_str)));
  });

  CLI::App* tau_cmd = app.add_subcommand("tau", "print the tau invariant of a tableau");
  tau_cmd->add_option("--in", in_path, "input file, - for standard input");
  tau_cmd->add_option("--type", type_str, "group type when the file has no header");
  tau_cmd->callback([&] {
    const DominoTableau t = parse_tableau(read_input(in_path), opt_type(type_str));
    std::string line = "tau:";
    bool flagged = false;
    for (int i : tau(t)) {
      line += ' ' + std::to_string(i);
      if (t.type() == GroupType::D && i <= 2) {
        line += '*';
        flagged = true;
      }
    }
    std::cout << line << '\n';
    if (flagged)
      std::cout << "* type D reports the indices 1 and 2 under an unpinned normalisation\n";
  });

  CLI::App* enum_cmd = app.add_subcommand(
      "enum",
      "enumerate tableaux or classes; a type D shape with all parts even stands for two\n"
      "orbits but is listed once");
  enum_cmd->add_option("--what", what_str, "sdt, syt, admissible or classes")->required();
  enum_cmd->add_option("--type", type_str, "group type");
  enum_cmd->add_option("--shape", shape_str, "shape as comma separated parts, e.g. 3,3");
  CLI::Option* size_opt = enum_cmd->add_option("--size", size, "number of dominos");
  enum_cmd->add_option("--mode", mode_str, "sign mode for classes, opcl or cl");
  enum_cmd->add_flag("--count-only", count_only, "print only the count");
  enum_cmd->callback([&] {
    rc = run_enum(what_str, type_str, shape_str, size, static_cast<bool>(*size_opt), mode_str,
                  count_only);
  });

  CLI::App* ver = app.add_subcommand("verify", "run the self-verification suites");
  ver->add_option("--suite", suite, "all, bijection, involution, order-independence, clusters, "
                                    "infsup, tau or counts");
  ver->add_option("--type", types_str, "comma separated group types");
  ver->add_option("--max-size", max_size, "largest number of dominos checked "
                                          "(TABX_MAX_SIZE caps it)");
  ver->add_option("--report", report_path, "also write a JSON report to this file");
  ver->callback([&] { rc = run_verify(suite, types_str, max_size, report_path); });

  CLI::App* fix = app.add_subcommand("fixtures", "list bundled fixtures or print one");
  fix->add_option("name", fixture_name, "fixture to print");
  fix->callback([&] {
    if (fixture_name.empty()) {
      for (const Fixture& f : fixtures()) std::cout << f.name << '\n';
    } else {
      std::cout << fixture(fixture_name);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return rc;
}
