#include "doctest.h"

#include "chowsym/cycle_notation.hpp"
#include "chowsym/double_cover.hpp"

using chowsym::Involution;
using chowsym::parse_cycles;

TEST_CASE("splitting") {
  CHECK(chowsym::orbit_splits(parse_cycles("(12)(34)")));
  CHECK_FALSE(chowsym::orbit_splits(Involution::identity(4)));
  CHECK_FALSE(chowsym::orbit_splits(parse_cycles("(12)", 4)));
}

TEST_CASE("stabilizer component order") {
  CHECK(chowsym::stabilizer_component_order(Involution::identity(4)) == 16);
  CHECK(chowsym::stabilizer_component_order(parse_cycles("(12)", 4)) == 4);
  for (const auto& w : chowsym::enumerate_involutions(6, true)) {
    CHECK(chowsym::stabilizer_component_order(w) == 1);
  }
}

TEST_CASE("double cover suite, exhaustive m <= 8") {
  for (int m : {2, 4, 6, 8}) {
    for (const auto& w : chowsym::enumerate_involutions(m, false)) {
      const int fixed = chowsym::cycle_stats(w).fixed_points;
      REQUIRE(chowsym::orbit_splits(w) == (fixed == 0));
      REQUIRE(chowsym::stabilizer_component_order(w) == (std::uint64_t{1} << fixed));
      REQUIRE(chowsym::orbit_splits(w) == (chowsym::stabilizer_component_order(w) == 1));
    }
  }
}

TEST_CASE("cover lifts") {
  const auto split = chowsym::cover_lifts(chowsym::Orbit::of(parse_cycles("(12)(34)")));
  REQUIRE(split.size() == 2);
  CHECK(split[0].split);
  CHECK(split[0].sign == chowsym::CoverSign::Plus);
  CHECK(split[1].sign == chowsym::CoverSign::Minus);
  CHECK(split[0].base == split[1].base);
  const auto single = chowsym::cover_lifts(chowsym::Orbit::of(Involution::identity(4)));
  REQUIRE(single.size() == 1);
  CHECK_FALSE(single[0].split);
  for (const auto& w : chowsym::enumerate_involutions(6, false)) {
    const auto lifts = chowsym::cover_lifts(chowsym::Orbit::of(w));
    CHECK(lifts.front().split == w.is_fixed_point_free());
  }
}

TEST_CASE("fibration image examples") {
  CHECK(chowsym::fibration_image(parse_cycles("(16)(23)(45)")) == parse_cycles("(12)(34)"));
  CHECK(chowsym::fibration_image(parse_cycles("(12)(34)(56)")) == parse_cycles("(12)(34)"));
  CHECK(chowsym::fibration_image(parse_cycles("(12)(34)")) == parse_cycles("(12)"));
  CHECK(chowsym::fibration_image(parse_cycles("(12)")).size() == 0);
  CHECK_THROWS_AS(chowsym::fibration_image(parse_cycles("(12)(34)", 6)), std::invalid_argument);
  CHECK_THROWS_AS(chowsym::fibration_image(Involution::identity(4)), std::invalid_argument);
}

TEST_CASE("fibration pullback examples") {
  const auto a = chowsym::fibration_pullback(3, 5, parse_cycles("(12)(34)"));
  CHECK(a == parse_cycles("(12)(34)(56)"));
  CHECK(chowsym::orbit_codimension(a) == 3);
  const auto b = chowsym::fibration_pullback(2, 1, parse_cycles("(12)"));
  CHECK(b == parse_cycles("(14)(23)"));
  CHECK(chowsym::orbit_codimension(b) == 4);
  const auto c = chowsym::fibration_pullback(3, 3, parse_cycles("(12)(34)"));
  CHECK(c == parse_cycles("(12)(36)(45)"));
  CHECK(chowsym::orbit_codimension(c) == 5);

  CHECK_THROWS_AS(chowsym::fibration_pullback(3, 6, parse_cycles("(12)(34)")), std::invalid_argument);
  CHECK_THROWS_AS(chowsym::fibration_pullback(3, 0, parse_cycles("(12)(34)")), std::invalid_argument);
  CHECK_THROWS_AS(chowsym::fibration_pullback(3, 2, parse_cycles("(12)")), std::invalid_argument);
}

TEST_CASE("fibration suite, exhaustive m <= 8") {
  for (int n = 2; n <= 4; ++n) {
    const int m = 2 * n;
    for (const auto& reduced : chowsym::enumerate_involutions(m - 2, false)) {
      for (int i = 1; i <= m - 1; ++i) {
        const auto up = chowsym::fibration_pullback(n, i, reduced);
        REQUIRE(chowsym::stratum_index(up) == i);
        REQUIRE(chowsym::fibration_image(up) == reduced);
        REQUIRE(chowsym::orbit_codimension(up) == chowsym::orbit_codimension(reduced) + (m - i));
      }
    }
    for (const auto& w : chowsym::enumerate_involutions(m, true)) {
      REQUIRE(chowsym::stratum_index(w) < m);
      REQUIRE(chowsym::fibration_image(w).is_fixed_point_free());
      // pullback o image = id on each stratum
      REQUIRE(chowsym::fibration_pullback(n, chowsym::stratum_index(w), chowsym::fibration_image(w)) == w);
    }
  }
  // n = 1: the only pullback is (12).
  REQUIRE(chowsym::fibration_pullback(1, 1, Involution()) == Involution({2, 1}));
}

TEST_CASE("fiber dimension") {
  CHECK(chowsym::fiber_dimension(2, 3) == 6);
  CHECK(chowsym::fiber_dimension(1, 1) == 2);
  CHECK_THROWS_AS(chowsym::fiber_dimension(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(chowsym::fiber_dimension(2, 0), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= 2 * n - 1; ++i) {
      // dim X_i minus dim of GL(2n-2)/SO(2n-2), both counted as symmetric-matrix dimensions.
      const int dim_stratum = n * (2 * n + 1) - (2 * n - i);
      const int dim_base = (n - 1) * (2 * n - 1);
      CHECK(chowsym::fiber_dimension(n, i) == dim_stratum - dim_base);
      const auto spec = chowsym::fibration_spec(n, i);
      CHECK(spec.fiber_dim == 2 * n + i - 1);
    }
  }
}

TEST_CASE("survivor") {
  CHECK(chowsym::survivor_involution(1) == Involution({2, 1}));
  CHECK(chowsym::survivor_involution(2) == parse_cycles("(12)(34)"));
  CHECK(chowsym::survivor_involution(3) == parse_cycles("(12)(34)(56)"));
  CHECK(chowsym::orbit_codimension(chowsym::survivor_involution(2)) == 2);
  CHECK(chowsym::orbit_codimension(chowsym::survivor_involution(3)) == 3);
  CHECK_THROWS_AS(chowsym::survivor_involution(0), std::invalid_argument);
  for (int n = 1; n <= 5; ++n) {
    int count = 0;
    chowsym::for_each_involution(2 * n, true, [&](std::span<const int> line) {
      const Involution w(std::vector<int>(line.begin(), line.end()));
      if (chowsym::orbit_codimension(w) <= n) {
        ++count;
        CHECK(w == chowsym::survivor_involution(n));
      }
    });
    CHECK(count == 1);
  }
}
