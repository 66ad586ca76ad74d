#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hk/antiderivative.hpp"
#include "hk/errors.hpp"
#include "hk/hk_function.hpp"
#include "hk/interval.hpp"

namespace hk {

namespace detail {

// Image of a window w subset of [1,+inf) under x -> 1/x. Endpoint openness
// travels with the endpoint: x = c in w iff 1/c in the image.
inline Interval<double> recip_window(const Interval<double>& w) {
  Interval<double> r;
  if (w.hi_infinite) {
    r.lo = 0.0;
    r.lo_open = true;
  } else {
    r.lo = 1.0 / w.hi;
    r.lo_open = w.hi_open;
  }
  r.hi = 1.0 / w.lo;
  r.hi_open = w.lo_open;
  return r;
}

// Image of a window w subset of (0,1] under t -> 1/t.
inline Interval<double> recip_window_back(const Interval<double>& w) {
  Interval<double> r;
  if (w.lo == 0.0) {
    r.hi_infinite = true;
    r.hi_open = true;
  } else {
    r.hi = 1.0 / w.lo;
    r.hi_open = w.lo_open;
  }
  r.lo = 1.0 / w.hi;
  r.lo_open = w.hi_open;
  return r;
}

inline AntiderivFn compactify_leaf(const AntiderivFn& a) {
  const Interval<double>& b = a.base();
  if (b.lo_infinite || !b.hi_infinite || b.lo != 1.0 || b.lo_open)
    throw UnsupportedBase("reciprocal transform needs base [1, +inf)");
  std::vector<double> singular{0.0};
  for (double s : a.singular_points())
    if (s >= 1.0) singular.push_back(1.0 / s);
  auto F = [a](double t) {
    if (t == 0.0) {
      auto lim = a.limit_at_hi();
      if (!lim) throw UnboundedWithoutLimit("no declared limit at +inf");
      return -*lim;
    }
    return -a.F(1.0 / t);
  };
  auto f = [a](double t) { return a.derivative(1.0 / t) / (t * t); };
  return AntiderivFn("recip " + a.family(), a.params(), Interval<double>::closed(0.0, 1.0),
                     std::move(F), std::move(f), std::move(singular), std::nullopt);
}

inline AntiderivFn uncompactify_leaf(const AntiderivFn& a) {
  const Interval<double>& b = a.base();
  if (b.lo_infinite || b.hi_infinite || b.lo != 0.0 || b.hi != 1.0)
    throw UnsupportedBase("inverse reciprocal transform needs base [0, 1]");
  std::vector<double> singular;
  for (double s : a.singular_points())
    if (s > 0.0) singular.push_back(1.0 / s);
  const double limit_up = -a.F(0.0);
  auto F = [a](double x) { return -a.F(1.0 / x); };
  auto f = [a](double x) { return a.derivative(1.0 / x) / (x * x); };
  return AntiderivFn("recip " + a.family(), a.params(), Interval<double>::ray_up(1.0),
                     std::move(F), std::move(f), std::move(singular), limit_up);
}

}  // namespace detail

// Change of variables x -> 1/x carrying a function on [1,+inf) to one on
// [0,1] with all subinterval integrals preserved: the image of f is
// t -> f(1/t)/t^2 and the image antiderivative is t -> -F(1/t), extended to
// t = 0 by the declared limit of F at +inf when one exists.
inline HKFn<double> compactify(const HKFn<double>& f) {
  const Interval<double>& b = f.base();
  if (b.lo_infinite || !b.hi_infinite || b.lo != 1.0 || b.lo_open)
    throw UnsupportedBase("reciprocal transform needs base [1, +inf)");
  return std::visit(
      [&](const auto& n) -> HKFn<double> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, StepFn<double>>) {
          throw UnsupportedBase("step functions have bounded bases");
        } else if constexpr (std::is_same_v<T, typename HKFn<double>::Sum>) {
          std::vector<HKFn<double>> terms;
          terms.reserve(n.terms.size());
          for (const auto& t : n.terms) terms.push_back(compactify(t));
          return HKFn<double>::sum(std::move(terms));
        } else if constexpr (std::is_same_v<T, typename HKFn<double>::Scaled>) {
          return HKFn<double>::scale(n.factor, compactify(*n.inner));
        } else if constexpr (std::is_same_v<T, typename HKFn<double>::Restricted>) {
          HKFn<double> image = compactify(*n.inner);
          auto clip = intersect(n.window, Interval<double>::ray_up(1.0));
          if (!clip) return HKFn<double>::scale(0.0, std::move(image));
          return HKFn<double>::restrict(std::move(image), detail::recip_window(*clip));
        } else {
          return HKFn<double>(detail::compactify_leaf(n));
        }
      },
      f.node());
}

// Inverse direction: a function on [0,1] is carried to [1,+inf). Step pieces
// become scaled restrictions of the v/x^2 kernel, since the constant v on a
// t-window corresponds to v/x^2 on the reciprocal x-window.
inline HKFn<double> uncompactify(const HKFn<double>& f) {
  const Interval<double>& b = f.base();
  if (b.lo_infinite || b.hi_infinite || b.lo != 0.0 || b.hi != 1.0)
    throw UnsupportedBase("inverse reciprocal transform needs base [0, 1]");
  return std::visit(
      [&](const auto& n) -> HKFn<double> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, StepFn<double>>) {
          const StepFn<double> s = n.canonical();
          const Interval<double> ray = Interval<double>::ray_up(1.0);
          std::vector<HKFn<double>> terms;
          for (std::size_t i = 0; i < s.pieces(); ++i) {
            const double v = s.values()[i];
            if (v == 0.0) continue;
            Interval<double> back = detail::recip_window_back(
                Interval<double>::left_open(s.breakpoints()[i], s.breakpoints()[i + 1]));
            terms.push_back(HKFn<double>::restrict(
                HKFn<double>(AntiderivFn::inverse_square(v, ray)), std::move(back)));
          }
          if (terms.empty())
            return HKFn<double>::scale(0.0, HKFn<double>(AntiderivFn::inverse_square(1.0, ray)));
          if (terms.size() == 1) return std::move(terms.front());
          return HKFn<double>::sum(std::move(terms));
        } else if constexpr (std::is_same_v<T, typename HKFn<double>::Sum>) {
          std::vector<HKFn<double>> terms;
          terms.reserve(n.terms.size());
          for (const auto& t : n.terms) terms.push_back(uncompactify(t));
          return HKFn<double>::sum(std::move(terms));
        } else if constexpr (std::is_same_v<T, typename HKFn<double>::Scaled>) {
          return HKFn<double>::scale(n.factor, uncompactify(*n.inner));
        } else if constexpr (std::is_same_v<T, typename HKFn<double>::Restricted>) {
          HKFn<double> preimage = uncompactify(*n.inner);
          auto clip = intersect(n.window, Interval<double>::closed(0.0, 1.0));
          if (!clip || clip->hi == 0.0) return HKFn<double>::scale(0.0, std::move(preimage));
          return HKFn<double>::restrict(std::move(preimage), detail::recip_window_back(*clip));
        } else {
          return HKFn<double>(detail::uncompactify_leaf(n));
        }
      },
      f.node());
}

}  // namespace hk
