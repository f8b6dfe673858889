#include <catch2/catch_amalgamated.hpp>
#include "tabx/tabx.hpp"

using namespace tabx;

static DominoTableau t_c() { return parse_tableau(fixture("t_c")); }

TEST_CASE("cycles of the reference tableau in class BC") {
  const DominoTableau t = t_c();
  const std::vector<Cycle> ys = all_cycles(t, ParityClass::BC);
  REQUIRE(ys.size() == 3);

  CHECK(ys[0].labels == std::vector<int>{1});
  CHECK(ys[0].open);
  CHECK(*ys[0].vacated == Square{1, 1});
  CHECK(*ys[0].acquired == Square{3, 1});
  CHECK_FALSE(cycle_movable(t, ys[0]));

  CHECK(ys[1].labels == std::vector<int>{2, 3});
  CHECK_FALSE(ys[1].open);
  CHECK(cycle_movable(t, ys[1]));

  CHECK(ys[2].labels == std::vector<int>{4, 5});
  CHECK(ys[2].open);
  CHECK(*ys[2].vacated == Square{2, 4});
  CHECK(*ys[2].acquired == Square{1, 7});
  CHECK(cycle_movable(t, ys[2]));
}

TEST_CASE("cycles of the reference tableau in class DD") {
  const DominoTableau t = t_c();
  const std::vector<Cycle> ys = all_cycles(t, ParityClass::DD);
  REQUIRE(ys.size() == 3);
  CHECK(ys[0].labels == std::vector<int>{1, 2});
  CHECK_FALSE(ys[0].open);
  CHECK(ys[1].labels == std::vector<int>{3, 4});
  CHECK_FALSE(ys[1].open);
  CHECK(ys[2].labels == std::vector<int>{5});
  CHECK(ys[2].open);
  CHECK(*ys[2].vacated == Square{1, 6});
  CHECK(*ys[2].acquired == Square{2, 5});
  CHECK(cycle_movable(t, ys[2]));
}

TEST_CASE("moving through the closed BC cycle") {
  const DominoTableau t = t_c();
  const DominoTableau moved = move_through(t, 2, ParityClass::BC);
  CHECK(moved == parse_tableau(fixture("t_c_mt2")));
  CHECK(moved.shape() == Partition{6, 4});
  // Moving through is an involution on each cycle.
  CHECK(move_through(moved, 2, ParityClass::BC) == t);
}

TEST_CASE("moving through the movable open BC cycle changes the shape") {
  const DominoTableau t = t_c();
  const DominoTableau moved = move_through(t, 4, ParityClass::BC);
  CHECK(moved == parse_tableau(fixture("t_c_mt4")));
  CHECK(moved.shape() == Partition{7, 3});
  CHECK(move_through(moved, 4, ParityClass::BC) == t);
}

TEST_CASE("an open cycle whose vacated square is interior cannot move") {
  const DominoTableau t = t_c();
  CHECK_THROWS_AS(move_through(t, 1, ParityClass::BC), MoveError);
}

TEST_CASE("moving a disjoint set of cycles") {
  const DominoTableau t = t_c();
  const DominoTableau moved =
      move_through_set(t, {cycle(t, 2, ParityClass::BC), cycle(t, 4, ParityClass::BC)});
  CHECK(moved.shape() == Partition{7, 3});
  CHECK(move_through_set(moved,
                         {cycle(moved, 2, ParityClass::BC), cycle(moved, 4, ParityClass::BC)}) == t);
  CHECK_THROWS_AS(move_through_set(t, {cycle(t, 2, ParityClass::BC), cycle(t, 3, ParityClass::BC)}),
                  MoveError);
}

TEST_CASE("comparison values around the diagram") {
  const DominoTableau t = t_c();
  CHECK(mt_cmp(t, 0, 3) == 0);
  CHECK(mt_cmp(t, 2, 0) == 0);
  CHECK(mt_cmp(t, 1, 5) == 5);
  CHECK(mt_cmp(t, 3, 1) == std::numeric_limits<int>::max());
  const DominoTableau b = parse_compact(GroupType::B, "0 1 1");
  CHECK(mt_cmp(b, 1, 1) == 0);
}

TEST_CASE("removable and addable squares of a shape") {
  const Partition shape{6, 4};
  CHECK(square_removable(shape, {1, 6}));
  CHECK(square_removable(shape, {2, 4}));
  CHECK_FALSE(square_removable(shape, {1, 4}));
  CHECK_FALSE(square_removable(shape, {1, 1}));
  CHECK(square_addable(shape, {1, 7}));
  CHECK(square_addable(shape, {2, 5}));
  CHECK(square_addable(shape, {3, 1}));
  CHECK_FALSE(square_addable(shape, {3, 2}));
  CHECK_FALSE(square_addable(shape, {0, 1}));
}

TEST_CASE("moving through twice is the identity on every small tableau") {
  for (GroupType ty : {GroupType::B, GroupType::C, GroupType::D})
    for (const DominoTableau& t : all_sdt(ty, 3))
      for (ParityClass c : {ParityClass::BC, ParityClass::DD})
        for (const Cycle& y : all_cycles(t, c)) {
          if (!cycle_movable(t, y)) continue;
          const DominoTableau once = move_through(t, y);
          CHECK(move_through(once, y.min_label(), c) == t);
        }
}
