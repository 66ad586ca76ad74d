#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <variant>
#include <vector>

#include "hk/analysis.hpp"
#include "hk/compactify.hpp"
#include "hk/hk_function.hpp"
#include "hk/parallel.hpp"
#include "hk/scalar.hpp"

namespace hk {

struct SearchOptions {
  int grid = 4096;           // uniform scan density over the base
  Exec exec = Exec::serial;  // grid scan execution; per-point work stays serial
};

// Norm value plus the width of the refinement interval that brackets each
// extremum of the indefinite integral. Exact computations report width 0.
template <class S>
struct BracketedNorm {
  S value{};
  double bracket = 0.0;
};

namespace detail {

// Golden-section ascent of a continuous function on [a, b]. Returns the best
// value seen and the final bracket width.
template <class Phi>
std::pair<double, double> golden_max(Phi&& phi, double a, double b) {
  constexpr double r = 0.6180339887498949;
  double x1 = b - r * (b - a);
  double x2 = a + r * (b - a);
  double f1 = phi(x1);
  double f2 = phi(x2);
  double best = std::max(f1, f2);
  for (int i = 0; i < 80 && (b - a) > 1e-14 * (1.0 + std::abs(a) + std::abs(b)); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = phi(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = phi(x1);
    }
    best = std::max(best, std::max(f1, f2));
  }
  return {best, b - a};
}

}  // namespace detail

// Oscillation (max minus min) of the indefinite integral over the closed
// base. Step-backed inputs collapse to the exact breakpoint extrema; scalings
// factor out analytically; unbounded bases go through the reciprocal
// transform; everything else is located by a uniform grid scan plus
// golden-section refinement around the best grid brackets.
template <class S>
BracketedNorm<S> alexiewicz_norm_bracketed(const HKFn<S>& f, const SearchOptions& opt = {}) {
  if (const auto* sc = std::get_if<typename HKFn<S>::Scaled>(&f.node())) {
    BracketedNorm<S> inner = alexiewicz_norm_bracketed(*sc->inner, opt);
    return {scalar::abs_of(sc->factor) * inner.value, inner.bracket};
  }
  if (auto s = f.flatten()) return {alexiewicz_norm(*s), 0.0};
  if constexpr (std::is_same_v<S, double>) {
    if (!f.base().bounded()) return alexiewicz_norm_bracketed(compactify(f), opt);
    const double a = f.base().lo;
    const double b = f.base().hi;
    const int grid = std::max(opt.grid, 8);
    std::vector<double> phi = indexed_map<double>(
        grid + 1,
        [&](int i) { return f.indefinite_at(a + (b - a) * (double(i) / grid)); },
        opt.exec);
    std::size_t imax = 0;
    std::size_t imin = 0;
    for (std::size_t i = 1; i < phi.size(); ++i) {
      if (phi[i] > phi[imax]) imax = i;
      if (phi[i] < phi[imin]) imin = i;
    }
    auto at = [&](std::size_t i) { return a + (b - a) * (double(i) / grid); };
    auto refine = [&](std::size_t i, double sign) {
      const double lo = at(i == 0 ? 0 : i - 1);
      const double hi = at(std::min<std::size_t>(i + 1, std::size_t(grid)));
      return detail::golden_max([&](double x) { return sign * f.indefinite_at(x); }, lo, hi);
    };
    auto [hi_val, hi_width] = refine(imax, 1.0);
    auto [lo_val, lo_width] = refine(imin, -1.0);
    const double top = std::max(hi_val, phi[imax]);
    const double bot = std::max(lo_val, -phi[imin]);
    return {top + bot, std::max(hi_width, lo_width)};
  } else {
    throw Error("norm search needs float arithmetic");  // rational inputs always flatten
  }
}

template <class S>
S alexiewicz_norm(const HKFn<S>& f, const SearchOptions& opt = {}) {
  return alexiewicz_norm_bracketed(f, opt).value;
}

}  // namespace hk
