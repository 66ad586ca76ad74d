#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hk/interval.hpp"

namespace hk {

// Piecewise-constant function on a compact base [a,b]. Pieces follow the
// half-open convention: value v[i] on (x[i-1], x[i]], plus a separate value at
// the point a. Every StepFn is therefore left-continuous on (a,b] by
// construction. Breakpoints are strictly increasing and include both
// endpoints; adjacent equal values are permitted, canonical() merges them.
template <class S>
class StepFn {
 public:
  StepFn(std::vector<S> breakpoints, std::vector<S> values, S value_at_lo)
      : breaks_(std::move(breakpoints)), values_(std::move(values)), at_lo_(std::move(value_at_lo)) {
    if (breaks_.size() < 2) throw Error("step function needs at least one piece");
    if (values_.size() + 1 != breaks_.size()) throw Error("step function piece/breakpoint count mismatch");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
      if (!(breaks_[i - 1] < breaks_[i])) throw Error("step function breakpoints must strictly increase");
  }

  static StepFn constant(const S& a, const S& b, const S& c) {
    return StepFn({a, b}, {c}, c);
  }
  static StepFn zero(const S& a, const S& b) { return constant(a, b, S{}); }

  // Indicator of (lo, hi] within [a,b]; the point a itself carries 0 since
  // a <= lo for any admissible window.
  static StepFn indicator(const S& a, const S& b, const S& lo, const S& hi) {
    if (lo < a || hi > b || !(lo < hi)) throw OutOfDomain("indicator window outside base");
    std::vector<S> xs{a};
    std::vector<S> vs;
    const S one = scalar::from_ratio<S>(1, 1);
    if (a < lo) {
      xs.push_back(lo);
      vs.push_back(S{});
    }
    xs.push_back(hi);
    vs.push_back(one);
    if (hi < b) {
      xs.push_back(b);
      vs.push_back(S{});
    }
    return StepFn(std::move(xs), std::move(vs), S{});
  }

  const S& lo() const { return breaks_.front(); }
  const S& hi() const { return breaks_.back(); }
  Interval<S> base() const { return Interval<S>::closed(lo(), hi()); }
  std::size_t pieces() const { return values_.size(); }
  const std::vector<S>& breakpoints() const { return breaks_; }
  const std::vector<S>& values() const { return values_; }
  const S& value_at_lo() const { return at_lo_; }

  // Left-continuous evaluation: x in (x[i-1], x[i]] maps to v[i].
  S operator()(const S& x) const {
    if (x < lo() || x > hi()) throw OutOfDomain("evaluation outside base");
    if (x == lo()) return at_lo_;
    auto it = std::lower_bound(breaks_.begin() + 1, breaks_.end(), x);
    return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
  }

  bool is_canonical() const {
    for (std::size_t i = 1; i < values_.size(); ++i)
      if (values_[i] == values_[i - 1]) return false;
    return true;
  }

  StepFn canonical() const {
    std::vector<S> xs{breaks_.front()};
    std::vector<S> vs;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!vs.empty() && vs.back() == values_[i]) {
        xs.back() = breaks_[i + 1];
      } else {
        vs.push_back(values_[i]);
        xs.push_back(breaks_[i + 1]);
      }
    }
    return StepFn(std::move(xs), std::move(vs), at_lo_);
  }

  // Pointwise combination over the merged breakpoint grid. Bases must match.
  template <class Op>
  static StepFn combine(const StepFn& f, const StepFn& g, Op&& op) {
    if (f.lo() != g.lo() || f.hi() != g.hi())
      throw DomainMismatch("step functions on different bases");
    std::vector<S> xs;
    xs.reserve(f.breaks_.size() + g.breaks_.size());
    std::merge(f.breaks_.begin(), f.breaks_.end(), g.breaks_.begin(), g.breaks_.end(),
               std::back_inserter(xs));
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<S> vs;
    vs.reserve(xs.size() - 1);
    for (std::size_t i = 1; i < xs.size(); ++i) vs.push_back(op(f(xs[i]), g(xs[i])));
    return StepFn(std::move(xs), std::move(vs), op(f.at_lo_, g.at_lo_)).canonical();
  }

  friend StepFn operator+(const StepFn& f, const StepFn& g) {
    return combine(f, g, [](const S& x, const S& y) { return x + y; });
  }
  friend StepFn operator-(const StepFn& f, const StepFn& g) {
    return combine(f, g, [](const S& x, const S& y) { return x - y; });
  }
  friend StepFn operator*(const StepFn& f, const StepFn& g) {
    return combine(f, g, [](const S& x, const S& y) { return x * y; });
  }
  StepFn operator-() const { return scaled(scalar::from_ratio<S>(-1, 1)); }

  StepFn scaled(const S& c) const {
    std::vector<S> vs;
    vs.reserve(values_.size());
    for (const S& v : values_) vs.push_back(c * v);
    return StepFn(breaks_, std::move(vs), c * at_lo_).canonical();
  }

  StepFn shifted(const S& c) const {
    std::vector<S> vs;
    vs.reserve(values_.size());
    for (const S& v : values_) vs.push_back(v + c);
    return StepFn(breaks_, std::move(vs), at_lo_ + c).canonical();
  }

  // f * chi_w, normalised to the left-continuous representative (half-open
  // pieces); differs from the set-theoretic product at most at w's endpoints,
  // which no integral quantity sees.
  StepFn restricted(const Interval<S>& w) const {
    if (!w.bounded()) throw UnboundedWithoutLimit("restriction window must be bounded");
    auto clip = intersect(w, Interval<S>::closed(lo(), hi()));
    if (!clip || !(clip->lo < clip->hi))
      return StepFn({lo(), hi()}, {S{}}, w.contains(lo()) ? at_lo_ : S{});
    std::vector<S> xs{lo()};
    std::vector<S> vs;
    auto push = [&](const S& x, const S& v) {
      if (x > xs.back()) {
        xs.push_back(x);
        vs.push_back(v);
      }
    };
    push(clip->lo, S{});
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const S& r = breaks_[i + 1];
      if (r <= clip->lo) continue;
      push(std::min(r, clip->hi), values_[i]);
      if (r >= clip->hi) break;
    }
    push(hi(), S{});
    return StepFn(std::move(xs), std::move(vs), w.contains(lo()) ? at_lo_ : S{}).canonical();
  }

 private:
  std::vector<S> breaks_;
  std::vector<S> values_;
  S at_lo_;
};

inline StepFn<double> to_float(const StepFn<Rat>& f) {
  std::vector<double> xs;
  xs.reserve(f.breakpoints().size());
  for (const Rat& x : f.breakpoints()) xs.push_back(x.to_double());
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i - 1] < xs[i])) throw Error("breakpoints collide under double conversion");
  std::vector<double> vs;
  vs.reserve(f.values().size());
  for (const Rat& v : f.values()) vs.push_back(v.to_double());
  return StepFn<double>(std::move(xs), std::move(vs), f.value_at_lo().to_double());
}

inline StepFn<double> to_float(const StepFn<double>& f) { return f; }

template <class S>
Interval<double> to_float(const Interval<S>& w) {
  Interval<double> r;
  r.lo = w.lo_infinite ? 0.0 : scalar::to_double(w.lo);
  r.hi = w.hi_infinite ? 0.0 : scalar::to_double(w.hi);
  r.lo_open = w.lo_open;
  r.hi_open = w.hi_open;
  r.lo_infinite = w.lo_infinite;
  r.hi_infinite = w.hi_infinite;
  return r;
}

}  // namespace hk
