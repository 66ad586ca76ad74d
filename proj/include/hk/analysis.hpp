#pragma once

#include <algorithm>
#include <vector>

#include "hk/step_function.hpp"

namespace hk {

// Indefinite integral of a step function: piecewise linear through
// (x[i], sum of v*length up to x[i]), anchored at 0 on the left endpoint.
// Exact in rational arithmetic, including interior interpolation.
template <class S>
struct PiecewiseLinear {
  std::vector<S> xs;
  std::vector<S> ys;

  S operator()(const S& x) const {
    if (x < xs.front() || x > xs.back()) throw OutOfDomain("evaluation outside base");
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs.begin());
    if (xs[i] == x) return ys[i];
    const S& x0 = xs[i - 1];
    const S& x1 = xs[i];
    return ys[i - 1] + (ys[i] - ys[i - 1]) * (x - x0) / (x1 - x0);
  }
};

template <class S>
PiecewiseLinear<S> indefinite(const StepFn<S>& f) {
  PiecewiseLinear<S> phi;
  phi.xs = f.breakpoints();
  phi.ys.reserve(phi.xs.size());
  S acc{};
  phi.ys.push_back(acc);
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    acc += f.values()[i] * (phi.xs[i + 1] - phi.xs[i]);
    phi.ys.push_back(acc);
  }
  return phi;
}

namespace detail {

template <class S>
void check_subinterval(const StepFn<S>& f, const Interval<S>& I) {
  if (!I.bounded()) throw OutOfDomain("interval must be bounded for a compact-base function");
  if (I.lo < f.lo() || I.hi > f.hi()) throw OutOfDomain("interval escapes the base");
}

// Length of the overlap of (p,q] with I; endpoint openness carries no length.
template <class S>
S overlap_length(const S& p, const S& q, const Interval<S>& I) {
  const S a = std::max(p, I.lo);
  const S b = std::min(q, I.hi);
  return a < b ? b - a : S{};
}

}  // namespace detail

// Integral over I: sum of value * overlap-length against the refinement of I
// by the breakpoints. Endpoint openness of I never changes the value.
template <class S>
S hk_integral(const StepFn<S>& f, const Interval<S>& I) {
  detail::check_subinterval(f, I);
  S acc{};
  for (std::size_t i = 0; i < f.pieces(); ++i)
    acc += f.values()[i] *
           detail::overlap_length(f.breakpoints()[i], f.breakpoints()[i + 1], I);
  return acc;
}

template <class S>
S hk_integral(const StepFn<S>& f) {
  return hk_integral(f, f.base());
}

// sup over subintervals of |integral|. For a step function the indefinite
// integral is piecewise linear, so the sup is attained at breakpoints:
// max(phi) - min(phi). Closing or opening the base does not change the value
// because phi is continuous; this is the closed-base evaluation.
template <class S>
S alexiewicz_norm(const StepFn<S>& f) {
  S acc{}, mx{}, mn{};
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    acc += f.values()[i] * (f.breakpoints()[i + 1] - f.breakpoints()[i]);
    mx = std::max(mx, acc);
    mn = std::min(mn, acc);
  }
  return mx - mn;
}

// Total variation over I. The value sequence seen on I is: the value at the
// left endpoint when I contains it (anchoring a boundary jump), then the piece
// values with positive-length overlap. An open left end contributes no
// boundary jump; the right end never does (pieces are left-closed at their
// right ends, so there is nothing to the right inside I).
template <class S>
S total_variation(const StepFn<S>& g, const Interval<S>& I) {
  detail::check_subinterval(g, I);
  const StepFn<S> f = g.canonical();
  std::vector<S> seen;
  if (I.contains(I.lo)) seen.push_back(f(I.lo));
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    const S a = std::max(f.breakpoints()[i], I.lo);
    const S b = std::min(f.breakpoints()[i + 1], I.hi);
    if (a < b) seen.push_back(f.values()[i]);
  }
  S v{};
  for (std::size_t i = 1; i < seen.size(); ++i)
    v += scalar::abs_of(seen[i] - seen[i - 1]);
  return v;
}

template <class S>
S total_variation(const StepFn<S>& g) {
  return total_variation(g, g.base());
}

// True sup of |g| over the points of I (not the essential sup).
template <class S>
S sup_norm(const StepFn<S>& g, const Interval<S>& I) {
  detail::check_subinterval(g, I);
  S best{};
  bool any = false;
  auto consider = [&](const S& v) {
    S a = scalar::abs_of(v);
    if (!any || best < a) best = a;
    any = true;
  };
  if (I.contains(g.lo())) consider(g.value_at_lo());
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    const S& p = g.breakpoints()[i];
    const S& q = g.breakpoints()[i + 1];
    // does (p,q] meet I?
    const S a = std::max(p, I.lo);
    const S b = std::min(q, I.hi);
    bool meets = a < b;
    if (!meets && a == b) meets = a > p && I.contains(a);
    if (meets) consider(g.values()[i]);
  }
  return any ? best : S{};
}

template <class S>
S sup_norm(const StepFn<S>& g) {
  return sup_norm(g, g.base());
}

template <class S>
S l1_norm(const StepFn<S>& g, const Interval<S>& I) {
  detail::check_subinterval(g, I);
  S acc{};
  for (std::size_t i = 0; i < g.pieces(); ++i)
    acc += scalar::abs_of(g.values()[i]) *
           detail::overlap_length(g.breakpoints()[i], g.breakpoints()[i + 1], I);
  return acc;
}

template <class S>
S l1_norm(const StepFn<S>& g) {
  return l1_norm(g, g.base());
}

// Lebesgue measure of {x in I : |g(x)| > eps}; single points carry none.
template <class S>
S measure_exceedance(const StepFn<S>& g, const S& eps, const Interval<S>& I) {
  if (!(S{} < eps)) throw NonpositiveEpsilon("exceedance level must be positive");
  detail::check_subinterval(g, I);
  S acc{};
  for (std::size_t i = 0; i < g.pieces(); ++i)
    if (scalar::abs_of(g.values()[i]) > eps)
      acc += detail::overlap_length(g.breakpoints()[i], g.breakpoints()[i + 1], I);
  return acc;
}

template <class S>
S measure_exceedance(const StepFn<S>& g, const S& eps) {
  return measure_exceedance(g, eps, g.base());
}

// Normalisation into the left-continuous, vanish-at-the-left-endpoint class:
// the representation is left-continuous already, so the whole adjustment is
// the constant shift by the value at the left endpoint. Variation and jump
// structure are unchanged; no individual points need rewriting.
template <class S>
struct NormalizationReport {
  StepFn<S> normalized;
  std::vector<S> changed_points;
  S shift;
};

template <class S>
NormalizationReport<S> nbv_normalize(const StepFn<S>& g) {
  S shift = g.value_at_lo();
  return NormalizationReport<S>{g.shifted(-shift), {}, shift};
}

}  // namespace hk
