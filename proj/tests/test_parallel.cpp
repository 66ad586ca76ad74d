#include "doctest.h"

#include <string>
#include <vector>

#include "hk/analysis.hpp"
#include "hk/errors.hpp"
#include "hk/gallery.hpp"
#include "hk/hk_function.hpp"
#include "hk/parallel.hpp"
#include "hk/rational.hpp"

using hk::Exec;
using hk::Rat;
namespace gal = hk::gallery;

TEST_CASE("hardware_threads reports at least one") {
  CHECK(hk::hardware_threads() >= 1);
}

TEST_CASE("serial and parallel maps agree exactly on rational work") {
  auto norms = [](Exec how) {
    return hk::indexed_map<Rat>(
        64,
        [](int i) {
          const auto f = gal::random_step(100 + i, 40, 5, Rat(0), Rat(1));
          return hk::alexiewicz_norm(f);
        },
        how);
  };
  const auto s = norms(Exec::serial);
  const auto p = norms(Exec::parallel);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == p[i]);
}

TEST_CASE("serial and parallel maps agree bitwise on float work") {
  const auto member = gal::oscillatory_member(2, 3);
  auto sweep = [&](Exec how) {
    return hk::indexed_map<double>(
        128,
        [&](int i) {
          const auto g = hk::to_float(gal::typewriter(i + 1));
          return hk::hk_integral(hk::multiply_step(member.flt, g));
        },
        how);
  };
  const auto s = sweep(Exec::serial);
  const auto p = sweep(Exec::parallel);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == p[i]);
}

TEST_CASE("exceptions thrown inside a parallel region propagate") {
  auto boom = [](int i) -> int {
    if (i == 17) throw hk::Error("worker failed");
    return i;
  };
  CHECK_THROWS_AS(hk::indexed_map<int>(64, boom, Exec::parallel), hk::Error);
  CHECK_THROWS_AS(hk::indexed_map<int>(64, boom, Exec::serial), hk::Error);
  // A clean run still returns every slot in order.
  const auto vals = hk::indexed_map<int>(5, [](int i) { return i * i; }, Exec::parallel);
  CHECK(vals == std::vector<int>{0, 1, 4, 9, 16});
}
