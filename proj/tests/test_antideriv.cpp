#include "doctest.h"

#include <cmath>

#include "hk/antiderivative.hpp"
#include "hk/hk_function.hpp"
#include "oracles.hpp"

using hk::AntiderivFn;
using hk::HKFn;

TEST_CASE("exponent validation") {
  CHECK_THROWS_AS(AntiderivFn::oscillatory(1, 1), hk::InvalidExponents);
  CHECK_THROWS_AS(AntiderivFn::oscillatory(2, 0), hk::InvalidExponents);
  CHECK_THROWS_AS(AntiderivFn::oscillatory(3, 1), hk::InvalidExponents);  // q < p-1
  CHECK_NOTHROW(AntiderivFn::oscillatory(2, 1));
  CHECK_NOTHROW(AntiderivFn::oscillatory(2, 3));
  CHECK_NOTHROW(AntiderivFn::oscillatory(3, 2));
}

TEST_CASE("oscillatory antiderivative values") {
  const auto ad = AntiderivFn::oscillatory(2, 3);
  CHECK(ad.F(0.0) == 0.0);
  CHECK(ad.F(1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
  CHECK(ad.F(0.5) == doctest::Approx(0.25 * std::sin(8.0)).epsilon(1e-15));
  CHECK_THROWS_AS(ad.F(2.0), hk::OutOfDomain);
  CHECK_THROWS_AS(ad.F(-0.5), hk::OutOfDomain);
}

TEST_CASE("pointwise derivative matches finite differences of F") {
  const auto ad = AntiderivFn::oscillatory(2, 3);
  auto F = [&](double x) { return ad.F(x); };
  for (double x : {0.4, 0.55, 0.7, 0.9}) {
    const double approx = oracle::central_diff(F, x, 1e-6);
    CHECK(ad.derivative(x) == doctest::Approx(approx).epsilon(1e-5));
  }
  CHECK_THROWS_AS(ad.derivative(0.0), hk::SingularPoint);

  const auto cx = AntiderivFn::cos_over_x();
  auto G = [&](double x) { return cx.F(x); };
  for (double x : {1.5, 2.0, 7.0}) {
    const double approx = oracle::central_diff(G, x, 1e-6);
    CHECK(cx.derivative(x) == doctest::Approx(approx).epsilon(1e-5));
  }
}

TEST_CASE("integrals are antiderivative differences") {
  const HKFn<double> f{AntiderivFn::oscillatory(2, 3)};
  CHECK(hk::hk_integral(f) == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
  CHECK(hk::hk_integral(f, hk::Interval<double>::closed(0.5, 1.0)) ==
        doctest::Approx(std::sin(1.0) - 0.25 * std::sin(8.0)).epsilon(1e-15));
}

TEST_CASE("declared limit at infinity") {
  const auto cx = AntiderivFn::cos_over_x();
  CHECK(cx.F_at_hi() == 0.0);
  const HKFn<double> f{cx};
  CHECK(hk::hk_integral(f) == doctest::Approx(-std::cos(1.0)).epsilon(1e-15));
}

TEST_CASE("linear ramp on the ray") {
  const auto ramp = AntiderivFn::linear(2.0);
  CHECK(ramp.F(3.0) == 6.0);
  CHECK(ramp.derivative(10.0) == 2.0);
  CHECK_THROWS_AS(ramp.F_at_hi(), hk::UnboundedWithoutLimit);
  CHECK(AntiderivFn::linear(0.0).F_at_hi() == 0.0);
}

TEST_CASE("inverse square kernel") {
  const auto k = AntiderivFn::inverse_square(3.0, hk::Interval<double>::ray_up(1.0));
  CHECK(k.F(2.0) == -1.5);
  CHECK(k.derivative(2.0) == 0.75);
  CHECK(k.F_at_hi() == 0.0);
  const HKFn<double> f{k};
  CHECK(hk::hk_integral(f) == doctest::Approx(3.0).epsilon(1e-15));
}
