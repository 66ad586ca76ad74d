#include "doctest.h"

#include <cmath>

#include "hk/gallery.hpp"
#include "hk/hk_function.hpp"
#include "hk/norm_search.hpp"

using hk::AntiderivFn;
using hk::HKFn;
using hk::Interval;
using hk::Rat;
using hk::StepFn;

namespace {
StepFn<Rat> two_piece() {
  return StepFn<Rat>({Rat(0), Rat(1, 2), Rat(1)}, {Rat(1), Rat(-2)}, Rat(1));
}
}  // namespace

TEST_CASE("combinators evaluate pointwise") {
  const HKFn<Rat> f{two_piece()};
  const HKFn<Rat> g{StepFn<Rat>::indicator(Rat(0), Rat(1), Rat(1, 4), Rat(3, 4))};

  const auto s = HKFn<Rat>::sum({f, g});
  CHECK(s(Rat(1, 8)) == Rat(1));
  CHECK(s(Rat(3, 8)) == Rat(2));
  CHECK(s(Rat(7, 8)) == Rat(-2));

  const auto sc = HKFn<Rat>::scale(Rat(-2), f);
  CHECK(sc(Rat(1, 4)) == Rat(-2));
  CHECK(sc(Rat(3, 4)) == Rat(4));

  const auto r = HKFn<Rat>::restrict(f, Interval<Rat>::left_open(Rat(1, 2), Rat(1)));
  CHECK(r(Rat(1, 4)) == Rat(0));
  CHECK(r(Rat(3, 4)) == Rat(-2));

  const HKFn<Rat> other{StepFn<Rat>::zero(Rat(0), Rat(2))};
  CHECK_THROWS_AS(HKFn<Rat>::sum({f, other}), hk::DomainMismatch);
  CHECK_THROWS_AS(HKFn<Rat>::sum({}), hk::Error);
}

TEST_CASE("integral is linear") {
  const HKFn<Rat> f{two_piece()};
  const HKFn<Rat> g{StepFn<Rat>::indicator(Rat(0), Rat(1), Rat(1, 4), Rat(3, 4))};
  const auto s = HKFn<Rat>::sum({f, HKFn<Rat>::scale(Rat(3), g)});
  CHECK(hk::hk_integral(s) == hk::hk_integral(f) + Rat(3) * hk::hk_integral(g));
  CHECK(hk::hk_integral(s, Interval<Rat>::closed(Rat(0), Rat(1, 2))) ==
        Rat(1, 2) + Rat(3) * Rat(1, 4));
}

TEST_CASE("restriction agrees with multiplying by an indicator") {
  const auto f = two_piece();
  const auto w = Interval<Rat>::left_open(Rat(1, 4), Rat(3, 4));
  const auto via_restrict =
      HKFn<Rat>::restrict(HKFn<Rat>{f}, w);
  const auto via_product = f * StepFn<Rat>::indicator(Rat(0), Rat(1), Rat(1, 4), Rat(3, 4));
  for (const Rat& x : {Rat(1, 8), Rat(3, 8), Rat(5, 8), Rat(7, 8), Rat(1)})
    CHECK(via_restrict(x) == via_product(x));
  CHECK(hk::hk_integral(via_restrict) == hk::hk_integral(HKFn<Rat>{via_product}));
}

TEST_CASE("flatten folds step trees and refuses antiderivatives") {
  const HKFn<Rat> f{two_piece()};
  const auto tree = HKFn<Rat>::sum(
      {HKFn<Rat>::scale(Rat(2), f),
       HKFn<Rat>::restrict(f, Interval<Rat>::left_open(Rat(0), Rat(1, 2)))});
  const auto flat = tree.flatten();
  REQUIRE(flat.has_value());
  for (const Rat& x : {Rat(1, 8), Rat(3, 8), Rat(5, 8), Rat(7, 8)})
    CHECK((*flat)(x) == tree(x));

  const HKFn<double> osc{AntiderivFn::oscillatory(2, 3)};
  CHECK(!osc.flatten().has_value());
  CHECK(osc.has_antideriv());
  CHECK(!f.has_antideriv());
}

TEST_CASE("indefinite integral evaluation") {
  const HKFn<Rat> f{two_piece()};
  CHECK(f.indefinite_at(Rat(0)) == Rat(0));
  CHECK(f.indefinite_at(Rat(1, 2)) == Rat(1, 2));
  CHECK(f.indefinite_at(Rat(1)) == Rat(-1, 2));
}

TEST_CASE("step times step multiplies exactly") {
  const auto f = HKFn<Rat>{two_piece()};
  const auto g = StepFn<Rat>::indicator(Rat(0), Rat(1), Rat(1, 4), Rat(3, 4));
  const auto prod = hk::multiply_step(f, g);
  CHECK(hk::hk_integral(prod) == Rat(1, 4) - Rat(1, 2));
  const auto flat = prod.flatten();
  REQUIRE(flat.has_value());
  CHECK((*flat)(Rat(3, 8)) == Rat(1));
  CHECK((*flat)(Rat(5, 8)) == Rat(-2));
  CHECK((*flat)(Rat(7, 8)) == Rat(0));
}

TEST_CASE("antiderivative times indicator pairs to an F difference") {
  const HKFn<double> f{AntiderivFn::oscillatory(2, 3)};
  const auto g = StepFn<double>::indicator(0.0, 1.0, 0.25, 0.75);
  const auto prod = hk::multiply_step(f, g);
  const double expect = std::pow(0.75, 2) * std::sin(std::pow(0.75, -3)) -
                        std::pow(0.25, 2) * std::sin(std::pow(0.25, -3));
  CHECK(hk::hk_integral(prod) == doctest::Approx(expect).epsilon(1e-14));

  SUBCASE("mismatched bases are rejected") {
    const auto wrong = StepFn<double>::indicator(0.0, 2.0, 0.5, 1.0);
    CHECK_THROWS_AS(hk::multiply_step(f, wrong), hk::DomainMismatch);
    const HKFn<double> ray{AntiderivFn::cos_over_x()};
    CHECK_THROWS_AS(hk::multiply_step(ray, g), hk::DomainMismatch);
  }
}

TEST_CASE("multiplying by constants hits the scaled fast path exactly") {
  const HKFn<double> f{AntiderivFn::oscillatory(2, 3)};
  const double norm_f = hk::alexiewicz_norm(f);

  const auto ones = StepFn<double>::constant(0.0, 1.0, 1.0);
  CHECK(hk::alexiewicz_norm(hk::multiply_step(f, ones)) == norm_f);

  const auto twos = StepFn<double>::constant(0.0, 1.0, 2.0);
  CHECK(hk::alexiewicz_norm(hk::multiply_step(f, twos)) == 2.0 * norm_f);

  const auto zeros = StepFn<double>::zero(0.0, 1.0);
  CHECK(hk::alexiewicz_norm(hk::multiply_step(f, zeros)) == 0.0);
}
