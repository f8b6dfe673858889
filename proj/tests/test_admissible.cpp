#include <catch2/catch_amalgamated.hpp>
#include "tabx/tabx.hpp"

using namespace tabx;

TEST_CASE("kinds in the reference type C tableau") {
  const DominoTableau t = parse_tableau(fixture("t_c"), std::nullopt);
  REQUIRE(t.size() == 5);
  CHECK(domino_kind(t, 1) == DominoKind::IMinus);
  CHECK(domino_kind(t, 2) == DominoKind::IPlus);
  CHECK(domino_kind(t, 3) == DominoKind::IMinus);
  CHECK(domino_kind(t, 4) == DominoKind::IPlus);
  CHECK(domino_kind(t, 5) == DominoKind::N);
  CHECK(is_admissible(t));
  CHECK(admissibility(t).failing_label == 0);
}

TEST_CASE("the perturbed reference tableau is inadmissible") {
  const DominoTableau t = parse_tableau(fixture("t_c_prime"), std::nullopt);
  const AdmissibilityResult r = admissibility(t);
  CHECK_FALSE(r.admissible);
  CHECK(r.failing_label == 2);
  CHECK(domino_kind(t, 2) == DominoKind::InadmissibleHorizontal);
}

TEST_CASE("kind depends on column parity and type") {
  // Vertical dominos alternate I+/I- along the columns.
  const DominoTableau d = parse_compact(GroupType::D, "1 2 3/1 2 3");
  CHECK(domino_kind(d, 1) == DominoKind::IPlus);
  CHECK(domino_kind(d, 2) == DominoKind::IMinus);
  CHECK(domino_kind(d, 3) == DominoKind::IPlus);
  const DominoTableau c = parse_compact(GroupType::C, "1 2 3/1 2 3");
  CHECK(domino_kind(c, 1) == DominoKind::IMinus);
  CHECK(domino_kind(c, 2) == DominoKind::IPlus);
  CHECK(domino_kind(c, 3) == DominoKind::IMinus);
  // A horizontal domino is N exactly when its left column sign matches eps.
  const DominoTableau h = parse_compact(GroupType::C, "1 1 2 2");
  CHECK(domino_kind(h, 1) == DominoKind::N);
  CHECK(domino_kind(h, 2) == DominoKind::N);
  const DominoTableau hd = parse_compact(GroupType::D, "1 1 2 2");
  CHECK(domino_kind(hd, 1) == DominoKind::InadmissibleHorizontal);
  CHECK(domino_kind(hd, 2) == DominoKind::InadmissibleHorizontal);
  CHECK(kind_name(DominoKind::IPlus) == "I+");
  CHECK(kind_name(DominoKind::InadmissibleHorizontal) == "inadmissible");
}

TEST_CASE("admissibility equals prefix shapes being orbit shapes") {
  for (GroupType t : {GroupType::B, GroupType::C, GroupType::D})
    for (const DominoTableau& T : all_sdt(t, 3)) {
      bool ok = true;
      for (int i = 1; i <= T.size(); ++i)
        if (!is_orbit_shape(T.prefix_shape(i), t)) ok = false;
      CHECK(ok == is_admissible(T));
    }
}
