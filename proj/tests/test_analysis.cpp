#include "doctest.h"

#include "hk/analysis.hpp"
#include "hk/gallery.hpp"
#include "oracles.hpp"

using hk::Interval;
using hk::Rat;
using hk::StepFn;

namespace {
StepFn<Rat> two_piece() {
  return StepFn<Rat>({Rat(0), Rat(1, 2), Rat(1)}, {Rat(1), Rat(-2)}, Rat(1));
}
}  // namespace

TEST_CASE("integrals are exact piece sums") {
  const auto f = two_piece();
  CHECK(hk::hk_integral(f) == Rat(-1, 2));
  CHECK(hk::hk_integral(f, Interval<Rat>::closed(Rat(0), Rat(1, 2))) == Rat(1, 2));
  CHECK(hk::hk_integral(f, Interval<Rat>::closed(Rat(1, 4), Rat(3, 4))) == Rat(-1, 4));

  SUBCASE("openness of the window does not matter") {
    CHECK(hk::hk_integral(f, Interval<Rat>::open(Rat(1, 4), Rat(3, 4))) == Rat(-1, 4));
    CHECK(hk::hk_integral(f, Interval<Rat>::left_open(Rat(1, 4), Rat(3, 4))) == Rat(-1, 4));
  }

  SUBCASE("windows outside the base are rejected") {
    CHECK_THROWS_AS(hk::hk_integral(f, Interval<Rat>::closed(Rat(0), Rat(2))), hk::OutOfDomain);
    CHECK_THROWS_AS(hk::hk_integral(f, Interval<Rat>::closed(Rat(-1), Rat(1))), hk::OutOfDomain);
  }
}

TEST_CASE("indefinite integral is piecewise linear from zero") {
  const auto phi = hk::indefinite(two_piece());
  CHECK(phi(Rat(0)) == Rat(0));
  CHECK(phi(Rat(1, 4)) == Rat(1, 4));
  CHECK(phi(Rat(1, 2)) == Rat(1, 2));
  CHECK(phi(Rat(3, 4)) == Rat(0));
  CHECK(phi(Rat(1)) == Rat(-1, 2));
}

TEST_CASE("alexiewicz norm equals the pairwise oracle") {
  const auto f = two_piece();
  CHECK(hk::alexiewicz_norm(f) == Rat(1));
  CHECK(hk::alexiewicz_norm(f) == oracle::brute_alexiewicz(f));

  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto g = hk::gallery::random_step(seed, 12, 4, Rat(0), Rat(1));
    CAPTURE(seed);
    CHECK(hk::alexiewicz_norm(g) == oracle::brute_alexiewicz(g));
  }
}

TEST_CASE("norm axioms on step functions") {
  const auto f = two_piece();
  const auto g = StepFn<Rat>::indicator(Rat(0), Rat(1), Rat(1, 3), Rat(2, 3));
  CHECK(hk::alexiewicz_norm(f + g) <= hk::alexiewicz_norm(f) + hk::alexiewicz_norm(g));
  CHECK(hk::alexiewicz_norm(f.scaled(Rat(-7, 3))) == Rat(7, 3) * hk::alexiewicz_norm(f));
  CHECK(hk::alexiewicz_norm(StepFn<Rat>::zero(Rat(0), Rat(1))) == Rat(0));
  CHECK(hk::alexiewicz_norm(f) <= hk::l1_norm(f));
}

TEST_CASE("total variation respects the measuring interval") {
  const auto g = hk::gallery::heaviside_compact(3);  // chi_(0,1/3] on [0,1]
  CHECK(hk::total_variation(g) == Rat(2));
  CHECK(hk::total_variation(g, Interval<Rat>::left_open(Rat(0), Rat(1))) == Rat(1));
  CHECK(hk::total_variation(StepFn<Rat>::constant(Rat(0), Rat(1), Rat(5))) == Rat(0));

  SUBCASE("matches the sampling oracle on random steps and windows") {
    const Interval<Rat> windows[] = {
        Interval<Rat>::closed(Rat(0), Rat(1)),
        Interval<Rat>::left_open(Rat(0), Rat(1)),
        Interval<Rat>::closed(Rat(1, 5), Rat(4, 5)),
        Interval<Rat>::open(Rat(1, 3), Rat(2, 3)),
    };
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto f = hk::gallery::random_step(seed * 7, 10, 4, Rat(0), Rat(1));
      for (const auto& w : windows) {
        CAPTURE(seed);
        CAPTURE(w.str());
        CHECK(hk::total_variation(f, w) == oracle::sampled_variation(f, w));
      }
    }
  }
}

TEST_CASE("sup and l1 norms") {
  const auto f = two_piece();
  CHECK(hk::sup_norm(f) == Rat(2));
  CHECK(hk::l1_norm(f) == Rat(3, 2));
  CHECK(hk::sup_norm(f, Interval<Rat>::left_open(Rat(0), Rat(1, 2))) == Rat(1));
  CHECK(hk::l1_norm(f, Interval<Rat>::closed(Rat(0), Rat(1, 2))) == Rat(1, 2));
}

TEST_CASE("measure of exceedance") {
  const auto g5 = hk::gallery::typewriter(5);
  CHECK(hk::measure_exceedance(g5, Rat(1, 2)) == Rat(1, 4));
  CHECK(hk::measure_exceedance(g5, Rat(2)) == Rat(0));
  CHECK_THROWS_AS(hk::measure_exceedance(g5, Rat(0)), hk::NonpositiveEpsilon);
  CHECK_THROWS_AS(hk::measure_exceedance(g5, Rat(-1)), hk::NonpositiveEpsilon);

  SUBCASE("antitone in epsilon") {
    const auto f = hk::gallery::random_step(99, 12, 4, Rat(0), Rat(1));
    const Rat grid[] = {Rat(1, 100), Rat(1, 10), Rat(1, 2), Rat(9, 10), Rat(3)};
    for (std::size_t i = 1; i < std::size(grid); ++i)
      CHECK(hk::measure_exceedance(f, grid[i]) <= hk::measure_exceedance(f, grid[i - 1]));
  }

  SUBCASE("chebyshev bound, exact") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto f = hk::gallery::random_step(seed * 13 + 1, 12, 4, Rat(0), Rat(1));
      for (const Rat& eps : {Rat(1, 100), Rat(1, 10), Rat(1, 2)}) {
        CAPTURE(seed);
        CHECK(hk::measure_exceedance(f, eps) <= hk::l1_norm(f) / eps);
      }
    }
  }
}

TEST_CASE("normalization anchors the left endpoint at zero") {
  const auto f = two_piece();
  const auto rep = hk::nbv_normalize(f);
  CHECK(rep.shift == Rat(1));
  CHECK(rep.changed_points.empty());
  CHECK(rep.normalized.value_at_lo() == Rat(0));
  CHECK(rep.normalized(Rat(1, 4)) == Rat(0));
  CHECK(rep.normalized(Rat(3, 4)) == Rat(-3));
  CHECK(hk::total_variation(rep.normalized) == hk::total_variation(f));
}
