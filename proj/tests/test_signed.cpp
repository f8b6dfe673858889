#include <catch2/catch_amalgamated.hpp>
#include "tabx/tabx.hpp"

using namespace tabx;

TEST_CASE("signable clusters by mode") {
  const DominoTableau t = parse_tableau(fixture("t_c"));
  const std::vector<Cluster> cs = clusters(t);
  CHECK_FALSE(signable(cs[0], SignMode::OpCl));  // zero cluster
  CHECK(signable(cs[1], SignMode::OpCl));
  CHECK(signable(cs[1], SignMode::Cl));
  CHECK(signable(cs[2], SignMode::OpCl));  // open cluster
  CHECK_FALSE(signable(cs[2], SignMode::Cl));
  CHECK(all_classes(t, SignMode::OpCl).size() == 4);
  CHECK(all_classes(t, SignMode::Cl).size() == 2);
}

TEST_CASE("class counts over the vertical type D tableau") {
  const DominoTableau t = parse_tableau(fixture("t_d1"));
  CHECK(all_classes(t, SignMode::OpCl).size() == 4);
  CHECK(all_classes(t, SignMode::Cl).size() == 2);
  const DominoTableau t2 = parse_tableau(fixture("t_d2"));
  CHECK(all_classes(t2, SignMode::OpCl).size() == 2);
  CHECK(all_classes(t2, SignMode::Cl).size() == 1);
}

TEST_CASE("make_class validates keys and values") {
  const DominoTableau t = parse_tableau(fixture("t_d1"));
  CHECK_NOTHROW(make_class(t, SignMode::OpCl, {{1, +1}, {3, -1}}));
  CHECK_THROWS_AS(make_class(t, SignMode::OpCl, {{1, +1}}), ValidationError);
  CHECK_THROWS_AS(make_class(t, SignMode::OpCl, {{1, +1}, {2, -1}}), ValidationError);
  CHECK_THROWS_AS(make_class(t, SignMode::OpCl, {{1, 2}, {3, -1}}), ValidationError);
  CHECK_NOTHROW(make_class(t, SignMode::Cl, {{1, -1}}));
  CHECK_THROWS_AS(make_class(t, SignMode::Cl, {{1, +1}, {3, -1}}), ValidationError);
}

TEST_CASE("parse and render signed classes") {
  const SignedClass x = parse_signed(fixture("t_d1_opcl_pm"));
  CHECK(x.mode == SignMode::OpCl);
  CHECK(x.tab == parse_tableau(fixture("t_d1")));
  CHECK(x.cluster_sign == std::map<int, int>{{1, +1}, {3, -1}});
  CHECK(parse_signed(render_signed(x)) == x);

  const SignedClass y = parse_signed(fixture("t_d1_plus"));
  CHECK(y.mode == SignMode::Cl);
  CHECK(y.cluster_sign == std::map<int, int>{{1, +1}});
  CHECK(parse_signed(render_signed(y)) == y);

  CHECK_THROWS_AS(parse_signed("type: D\n1 2 3\n1 2 3\nsigns: 1=+ 3=+\n"), ParseError);
  CHECK_THROWS_AS(parse_signed("type: D\nmode: opcl\n1 2 3\n1 2 3\nsigns: 1=% 3=+\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_signed("type: D\nmode: opcl\n1 2 3\n1 2 3\nsigns: 1=+ 1=- 3=+\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_signed("type: D\nmode: opcl\n1 2 3\n1 2 3\nsigns: 3=+\n"),
                  ValidationError);
  // Fallbacks fill missing headers.
  const SignedClass z = parse_signed("1 2 3\n1 2 3\nsigns: 1=- 3=-\n", GroupType::D,
                                     SignMode::OpCl);
  CHECK(z == parse_signed(fixture("t_d1_opcl_mm")));
}

TEST_CASE("forgetting and embedding signs") {
  const SignedClass pp = parse_signed(fixture("t_d1_opcl_pp"));
  const SignedClass pm = parse_signed(fixture("t_d1_opcl_pm"));
  const SignedClass plus = parse_signed(fixture("t_d1_plus"));
  CHECK(forget_open(pp) == plus);
  CHECK(forget_open(pm) == plus);
  CHECK(embed(plus) == pm);
  CHECK(forget_open(embed(plus)) == plus);
  CHECK(embed(pp) == pp);
}

TEST_CASE("component group generators flip open clusters") {
  const SignedClass pp = parse_signed(fixture("t_d1_opcl_pp"));
  const SignedClass pm = parse_signed(fixture("t_d1_opcl_pm"));
  // One generator for the part 3; it reaches the open cluster of 3.
  CHECK(b_lambda(pp.tab.shape(), pp.tab.type()) == std::set<int>{3});
  CHECK(end_of_row_label(pp.tab, 3) == 3);
  CHECK(au_generator(pp, 3) == pm);
  CHECK(au_generator(pm, 3) == pp);
  CHECK(au_orbit(pp) == std::set<SignedClass>{pp, pm});
  // In cl mode the open cluster carries no sign, so the orbit is a point.
  const SignedClass plus = parse_signed(fixture("t_d1_plus"));
  CHECK(au_generator(plus, 3) == plus);
  CHECK(au_orbit(plus) == std::set<SignedClass>{plus});
}

TEST_CASE("a generator through the zero square is the identity") {
  const DominoTableau t = parse_tableau("type: B\n0\n1\n1\n");
  CHECK(end_of_row_label(t, 1) == 0);
  CHECK_THROWS_AS(end_of_row_label(t, 2), ValidationError);
  const SignedClass x = all_classes(t, SignMode::OpCl).at(0);
  CHECK(au_generator(x, 1) == x);
}

TEST_CASE("orbits partition the opcl classes over a tableau") {
  for (GroupType ty : {GroupType::B, GroupType::C, GroupType::D})
    for (const DominoTableau& t : all_admissible(ty, 3)) {
      std::set<SignedClass> seen;
      for (const SignedClass& x : all_classes(t, SignMode::OpCl)) {
        const std::set<SignedClass> orb = au_orbit(x);
        CHECK(orb.count(x) == 1);
        if (seen.count(x)) continue;
        for (const SignedClass& y : orb) {
          CHECK(seen.insert(y).second);
          CHECK(au_orbit(y) == orb);
        }
      }
      CHECK(seen.size() == all_classes(t, SignMode::OpCl).size());
    }
}
