#include <doctest.h>

#include "dyckflaws/enumeration.hpp"
#include "dyckflaws/path.hpp"
#include "oracle.hpp"

using namespace dyck;

TEST_CASE("parse and render") {
  CHECK(parse_path("").empty());
  CHECK(parse_path("").semilength() == 0);
  CHECK(parse_path("UDUD").semilength() == 2);
  CHECK(render_path(parse_path("uDdU")) == "UDDU");
  CHECK(render_path(Path({Step::Up, Step::Down})) == "UD");
  CHECK(render_path(Path({Step::Down, Step::Up, Step::Up, Step::Down})) == "DUUD");
  CHECK(render_path(Path()) == "");
}

TEST_CASE("parse errors carry distinct kinds") {
  auto kind_of = [](std::string_view w) {
    try {
      parse_path(w);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("no error for " << w);
    return ParseError::Kind::OddLength;
  };
  CHECK(kind_of("UUD") == ParseError::Kind::OddLength);
  CHECK(kind_of("UUUD") == ParseError::Kind::Unbalanced);
  CHECK(kind_of("UXDD") == ParseError::Kind::ForeignCharacter);
  CHECK(kind_of("U D") == ParseError::Kind::ForeignCharacter);
  CHECK_THROWS_AS(Path({Step::Up, Step::Up}), ParseError);
}

TEST_CASE("height profile") {
  CHECK(height_profile(parse_path("UDUD")) == std::vector<int>{0, 1, 0, 1, 0});
  CHECK(height_profile(parse_path("DUUD")) == std::vector<int>{0, -1, 0, 1, 0});
  CHECK(height_profile(parse_path("")) == std::vector<int>{0});
}

TEST_CASE("statistics of small paths") {
  // UDDU and DUUD are the two one-flaw paths of semilength 2 (row "2x").
  CHECK(stats(parse_path("UDDU")) == StatVector{2, 1, 1, 1, 0, 1});
  CHECK(stats(parse_path("DUUD")) == StatVector{2, 1, 1, 1, 1, 0});
  CHECK(stats(parse_path("DDUU")) == StatVector{2, 2, 0, 1, 1, 1});
  CHECK(stats(parse_path("DUDU")) == StatVector{2, 2, 1, 2, 0, 0});
  CHECK(stats(parse_path("UUDD")) == StatVector{2, 0, 1, 0, 1, 1});
  CHECK(stats(parse_path("")) == StatVector{});
}

TEST_CASE("is_catalan") {
  CHECK(is_catalan(parse_path("UDUD")));
  CHECK_FALSE(is_catalan(parse_path("DU")));
  CHECK(is_catalan(parse_path("")));
}

TEST_CASE("statistics agree with the bitmask oracle for n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    for (auto mask : oracle::balanced_masks(n)) {
      const Path p = parse_path(oracle::word_of(mask, n));
      const StatVector s = stats(p);
      const oracle::Stats o = oracle::stats_of(mask, n);
      REQUIRE(s.semilength == n);
      CHECK(s.flaws == o.m);
      CHECK(s.peaks == o.peaks);
      CHECK(s.valleys == o.valleys);
      CHECK(s.double_ascents == o.da);
      CHECK(s.double_descents == o.dd);

      CHECK(s.flaws >= 0);
      CHECK(s.flaws <= n);
      if (n >= 1) {
        CHECK(s.peaks + s.valleys + s.double_ascents + s.double_descents == 2 * n - 1);
      }
      if (n >= 1 && s.flaws == 0) CHECK(s.peaks == s.valleys + 1);
      CHECK(is_catalan(p) == (s.flaws == 0));
    }
  }
}

TEST_CASE("parse/render round trip on all paths up to n = 6") {
  for (int n = 0; n <= 6; ++n) {
    for (const Path& p : enumerate_paths(n)) {
      CHECK(parse_path(render_path(p)) == p);
    }
  }
}
