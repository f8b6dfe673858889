#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>
#include "tabx/tabx.hpp"

using namespace tabx;

TEST_CASE("every bundled fixture parses") {
  int plain = 0, signed_ = 0;
  for (const Fixture& f : fixtures()) {
    const std::string text = f.content;
    if (text.find("signs:") != std::string::npos) {
      CHECK_NOTHROW(parse_signed(text));
      ++signed_;
    } else {
      CHECK_NOTHROW(parse_tableau(text));
      ++plain;
    }
  }
  CHECK(plain == 11);
  CHECK(signed_ == 7);
  CHECK_THROWS_AS(fixture("no_such_fixture"), ValidationError);
}

TEST_CASE("the fixtures directory mirrors the bundled fixtures") {
  // The test runner starts in the source tree root.
  for (const Fixture& f : fixtures()) {
    const std::string path = std::string("fixtures/") + f.name + ".tab";
    std::ifstream in(path);
    INFO(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == f.content);
  }
}
