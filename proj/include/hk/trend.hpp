#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "hk/parallel.hpp"
#include "hk/scalar.hpp"

namespace hk {

enum class Verdict { Converges, Diverges, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Converges:
      return "Converges";
    case Verdict::Diverges:
      return "Diverges";
    default:
      return "Inconclusive";
  }
}

// Finite-horizon decision rule for a sequence of nonnegative gap values that
// should tend to 0. Converges when the tail window already sits at the limit
// (exactly, in exact-zero runs) or when the magnitudes show geometric decay
// across the two halves of the horizon; Diverges when the tail is visibly off
// the limit and the second half shows no decay at all; Inconclusive
// otherwise.
struct Schedule {
  double tol = 1e-9;
  int window = 8;
  bool exact_zero = false;  // demand literal zeros in the tail test
};

inline Schedule rational_defaults() { return Schedule{1e-9, 8, true}; }
inline Schedule float_defaults() { return Schedule{1e-9, 8, false}; }

template <class S>
Verdict decide_verdict(const std::vector<std::pair<int, S>>& points, const Schedule& sch,
                       double* achieved = nullptr) {
  if (points.empty()) return Verdict::Inconclusive;
  const std::size_t count = points.size();
  const std::size_t window =
      std::min<std::size_t>(count, sch.window > 0 ? std::size_t(sch.window) : 1);
  auto mag = [](const S& v) { return std::abs(scalar::to_double(v)); };
  double tail_max = 0.0;
  bool tail_zero = true;
  for (std::size_t i = count - window; i < count; ++i) {
    tail_max = std::max(tail_max, mag(points[i].second));
    if (!(points[i].second == S{})) tail_zero = false;
  }
  if (achieved) *achieved = tail_max;
  const bool tail_ok = sch.exact_zero ? tail_zero : tail_max <= sch.tol;
  double first_half = 0.0;
  double second_half = 0.0;
  const std::size_t half = count / 2;
  for (std::size_t i = 0; i < half; ++i) first_half = std::max(first_half, mag(points[i].second));
  for (std::size_t i = half; i < count; ++i)
    second_half = std::max(second_half, mag(points[i].second));
  const bool decays = count >= 4 && second_half <= first_half / 2.0;
  if (tail_ok || decays) return Verdict::Converges;
  if (tail_max > sch.tol && second_half >= first_half) return Verdict::Diverges;
  return Verdict::Inconclusive;
}

template <class S>
struct TrendSeries {
  std::vector<std::pair<int, S>> points;  // (n, value), n strictly increasing
  Verdict verdict = Verdict::Inconclusive;
  double achieved = 0.0;  // largest magnitude over the tail window
  Schedule schedule;
};

// Evaluate value_at(n) for n = 1..N; points for distinct n are independent,
// so the map may run in parallel, and aggregation keeps the n order.
template <class S, class Fn>
TrendSeries<S> make_trend(int N, Fn&& value_at, const Schedule& sch, Exec how = Exec::parallel) {
  TrendSeries<S> t;
  t.schedule = sch;
  std::vector<S> values = indexed_map<S>(N, [&](int i) { return value_at(i + 1); }, how);
  t.points.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    t.points.emplace_back(int(i) + 1, std::move(values[i]));
  t.verdict = decide_verdict(t.points, sch, &t.achieved);
  return t;
}

}  // namespace hk
