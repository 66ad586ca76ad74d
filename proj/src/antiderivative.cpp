#include "hk/antiderivative.hpp"

#include <cmath>

#include "hk/errors.hpp"
#include "hk/scalar.hpp"

namespace hk {

double AntiderivFn::F(double x) const {
  if (!base_.lo_infinite && x < base_.lo) throw OutOfDomain("antiderivative below base");
  if (!base_.hi_infinite && x > base_.hi) throw OutOfDomain("antiderivative above base");
  return F_(x);
}

double AntiderivFn::F_at_hi() const {
  if (base_.hi_infinite) {
    if (!limit_up_) throw UnboundedWithoutLimit("no declared limit at +inf");
    return *limit_up_;
  }
  return F_(base_.hi);
}

double AntiderivFn::F_at_lo() const {
  if (base_.lo_infinite) {
    if (!limit_down_) throw UnboundedWithoutLimit("no declared limit at -inf");
    return *limit_down_;
  }
  return F_(base_.lo);
}

double AntiderivFn::derivative(double x) const {
  if (!base_.lo_infinite && x < base_.lo) throw OutOfDomain("evaluation below base");
  if (!base_.hi_infinite && x > base_.hi) throw OutOfDomain("evaluation above base");
  for (double s : singular_)
    if (x == s) throw SingularPoint("integrand undefined at " + scalar::str(s));
  return f_(x);
}

AntiderivFn AntiderivFn::oscillatory(int p, int q) {
  if (p < 2 || q < 1 || q < p - 1)
    throw InvalidExponents("need p >= 2, q >= 1, q >= p-1");
  const double dp = p, dq = q;
  auto F = [dp, dq](double x) {
    if (x == 0.0) return 0.0;
    return std::pow(x, dp) * std::sin(std::pow(x, -dq));
  };
  // d/dx [x^p sin(x^-q)] = p x^(p-1) sin(x^-q) - q x^(p-q-1) cos(x^-q)
  auto f = [dp, dq](double x) {
    const double phase = std::pow(x, -dq);
    return dp * std::pow(x, dp - 1.0) * std::sin(phase) -
           dq * std::pow(x, dp - dq - 1.0) * std::cos(phase);
  };
  return AntiderivFn("x^p sin(x^-q)", {dp, dq}, Interval<double>::closed(0.0, 1.0),
                     std::move(F), std::move(f), {0.0}, std::nullopt);
}

AntiderivFn AntiderivFn::cos_over_x() {
  auto F = [](double x) { return std::cos(x) / x; };
  auto f = [](double x) { return -std::sin(x) / x - std::cos(x) / (x * x); };
  return AntiderivFn("cos(x)/x", {}, Interval<double>::ray_up(1.0), std::move(F),
                     std::move(f), {}, 0.0);
}

AntiderivFn AntiderivFn::linear(double c) {
  auto F = [c](double x) { return c * x; };
  auto f = [c](double) { return c; };
  std::optional<double> limit_up;
  if (c == 0.0) limit_up = 0.0;
  return AntiderivFn("c*x", {c}, Interval<double>::ray_up(1.0), std::move(F), std::move(f),
                     {}, limit_up);
}

AntiderivFn AntiderivFn::inverse_square(double v, Interval<double> base) {
  auto F = [v](double x) {
    if (x == 0.0) throw UnboundedWithoutLimit("-v/x has no limit at 0");
    return -v / x;
  };
  auto f = [v](double x) { return v / (x * x); };
  std::vector<double> singular;
  if (!base.lo_infinite && base.lo == 0.0) singular.push_back(0.0);
  std::optional<double> limit_up;
  if (base.hi_infinite) limit_up = 0.0;
  return AntiderivFn("-1/x", {v}, base, std::move(F), std::move(f), std::move(singular),
                     limit_up);
}

}  // namespace hk
