// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabx/tabx.hpp"

using namespace tabx;

namespace {

const std::vector<GroupType> kTypes = {GroupType::B, GroupType::C, GroupType::D};

int failures = 0;

void need(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

void need_checks(const Report& r, const std::string& prefix) {
  int matched = 0;
  for (const CheckResult& c : r.checks) {
    if (c.name.rfind(prefix, 0) != 0) continue;
    ++matched;
    need(c.passed, c.name + ": " + c.detail);
  }
  need(matched > 0, "no checks matched " + prefix);
}

void criterion(int no, const std::string& name, const std::function<void()>& fn) {
  std::string detail;
  try {
    fn();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  if (detail.empty()) {
    std::printf("PASS %2d %s\n", no, name.c_str());
  } else {
    ++failures;
    std::printf("FAIL %2d %s: %s\n", no, name.c_str(), detail.c_str());
  }
  std::fflush(stdout);
}

std::set<DominoTableau> as_set(const std::vector<DominoTableau>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

int main() {
  criterion(1, "reference tableau: kinds, cycles and moving-through", [] {
    const DominoTableau t = parse_tableau(fixture("t_c"));
    const DominoTableau tp = parse_tableau(fixture("t_c_prime"));
    need(is_admissible(t), "the reference tableau is admissible");
    need(!is_admissible(tp) && admissibility(tp).failing_label == 2,
         "the perturbed tableau fails at label 2");
    const DominoKind want[] = {DominoKind::IMinus, DominoKind::IPlus, DominoKind::IMinus,
                               DominoKind::IPlus, DominoKind::N};
    for (int k = 1; k <= 5; ++k)
      need(domino_kind(t, k) == want[k - 1], "kind of " + std::to_string(k));
    const std::vector<std::set<int>> bc = {{1}, {2, 3}, {4, 5}};
    const std::vector<std::set<int>> dd = {{1, 2}, {3, 4}, {5}};
    const std::vector<Cycle> ybc = all_cycles(t, ParityClass::BC);
    const std::vector<Cycle> ydd = all_cycles(t, ParityClass::DD);
    need(ybc.size() == 3 && ydd.size() == 3, "three cycles in each class");
    for (int i = 0; i < 3; ++i) {
      need(ybc[i].label_set() == bc[i], "BC cycle labels");
      need(ydd[i].label_set() == dd[i], "DD cycle labels");
    }
    const DominoTableau m2 = move_through(t, 2, ParityClass::BC);
    need(m2 == parse_tableau(fixture("t_c_mt2")) && m2.shape() == Partition{6, 4},
         "the image of moving through 2");
    const DominoTableau m4 = move_through(t, 4, ParityClass::BC);
    need(m4 == parse_tableau(fixture("t_c_mt4")) && m4.shape() == Partition{7, 3},
         "the image of moving through 4");
  });

  criterion(2, "large example: clusters, initial cycle and periphery", [] {
    const DominoTableau t = parse_tableau(fixture("t_d12"));
    const std::vector<Cluster> cs = clusters(t);
    need(cs.size() == 2, "exactly two clusters");
    need(cs[0].labels == std::vector<int>{1, 2, 3, 4, 5, 8, 9, 10, 11, 12} &&
             cs[0].kind == ClusterKind::Closed && cs[0].cls == ParityClass::DD,
         "the big cluster is closed of class DD");
    need(cs[1].labels == std::vector<int>{6, 7} && cs[1].kind == ClusterKind::Closed &&
             cs[1].cls == ParityClass::BC,
         "the nested cluster is closed of class BC");
    const Cycle y = initial_cycle(t, cs[0]);
    need(!y.open && y.labels == std::vector<int>{1, 3, 5, 11, 12, 10, 9, 2},
         "the initial cycle of the big cluster");
    need(cycle(t, 4, ParityClass::DD).label_set() == std::set<int>{4, 6},
         "the DD cycle of 4");
    need(cycle(t, 7, ParityClass::DD).label_set() == std::set<int>{7, 8},
         "the DD cycle of 7");
    need(nested_in(cs[1], cs[0]), "the small cluster is nested in the big one");
    std::vector<int> ysorted = y.labels;
    std::sort(ysorted.begin(), ysorted.end());
    need(periphery(t, cs, cs[0]) == ysorted,
         "the periphery of the closure equals the initial cycle");
  });

  criterion(3, "two-row example: class images by shape", [] {
    const Partition twothree{3, 3};
    const std::vector<SignedClass> opcl =
        signed_classes_of_shape(GroupType::D, twothree, SignMode::OpCl);
    need(opcl.size() == 6, "six open-and-closed classes over 3,3");
    std::set<DominoTableau> images;
    for (const SignedClass& x : opcl) {
      need(images.insert(phi(x)).second, "the images are distinct");
      need(psi(phi(x), SignMode::OpCl) == x, "psi inverts phi");
    }
    std::set<DominoTableau> want = as_set(sdt_of_shape(GroupType::D, {3, 3}));
    const std::set<DominoTableau> grown = as_set(sdt_of_shape(GroupType::D, {4, 2}));
    need(want.size() == 3 && grown.size() == 3, "three tableaux of each shape");
    want.insert(grown.begin(), grown.end());
    need(images == want, "the images fill the shapes 3,3 and 4,2");
    const std::vector<SignedClass> cl =
        signed_classes_of_shape(GroupType::D, twothree, SignMode::Cl);
    need(cl.size() == 3, "three closed-sign classes over 3,3");
    std::set<DominoTableau> climages;
    for (const SignedClass& x : cl) {
      const DominoTableau img = phi(x);
      need(img.shape() == twothree, "closed-sign images keep the shape");
      need(climages.insert(img).second, "the closed-sign images are distinct");
      need(psi(img, SignMode::Cl) == x, "psi inverts phi on closed signs");
    }
    need(climages == as_set(sdt_of_shape(GroupType::D, twothree)),
         "the closed-sign images fill the shape 3,3");
  });

  criterion(4, "size bijection between signed classes and tableaux (n <= 4)", [] {
    need_checks(verify_suite("bijection", kTypes, 4), "bijection/size/");
  });

  criterion(5, "shape bijection on closed-sign classes (shapes <= 10 squares)", [] {
    need_checks(verify_suite("bijection", kTypes, 4), "bijection/shape/");
  });

  criterion(6, "moving-through laws on all tableaux (n <= 4)", [] {
    need_checks(verify_suite("involution", kTypes, 4), "involution/");
  });

  criterion(7, "order independence of disjoint cycle moves (n <= 3)", [] {
    need_checks(verify_suite("order-independence", kTypes, 3), "order-independence/");
  });

  criterion(8, "cluster structure propositions (n <= 5)", [] {
    need_checks(verify_suite("clusters", kTypes, 5), "clusters/");
    need_checks(verify_suite("infsup", kTypes, 5), "infsup/");
  });

  criterion(9, "orbit, class and tableau counts agree (shapes <= 10 squares)", [] {
    need_checks(verify_suite("counts", kTypes, 4), "counts/orbits/");
  });

  criterion(10, "tau laws: orbit constancy and representatives (n <= 5)", [] {
    need_checks(verify_suite("tau", kTypes, 5), "tau/");
  });

  criterion(11, "independent brute-force count check", [] {
    need(sdt_count_oracle(GroupType::C, 2) == 6, "six tableaux of two dominos in type C");
    need(sdt_count_oracle(GroupType::D, 2) == 6, "six tableaux of two dominos in type D");
    need_checks(verify_suite("counts", kTypes, 2), "counts/oracle/");
  });

  if (failures == 0) {
    std::printf("all 11 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
