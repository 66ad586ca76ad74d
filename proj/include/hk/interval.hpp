#pragma once

#include <optional>
#include <string>

#include "hk/errors.hpp"
#include "hk/scalar.hpp"

namespace hk {

// Interval with optionally open and optionally infinite endpoints. The lo/hi
// values are meaningless when the matching *_infinite flag is set; infinite
// ends are always open as point sets (containment-wise).
template <class S>
struct Interval {
  S lo{};
  S hi{};
  bool lo_open = false;
  bool hi_open = false;
  bool lo_infinite = false;
  bool hi_infinite = false;

  static Interval closed(S a, S b) { return make(std::move(a), std::move(b), false, false); }
  static Interval open(S a, S b) { return make(std::move(a), std::move(b), true, true); }
  static Interval left_open(S a, S b) { return make(std::move(a), std::move(b), true, false); }
  static Interval right_open(S a, S b) { return make(std::move(a), std::move(b), false, true); }
  // [a, +inf) and (-inf, b]
  static Interval ray_up(S a, bool open_at_a = false) {
    Interval i;
    i.lo = std::move(a);
    i.lo_open = open_at_a;
    i.hi_infinite = true;
    i.hi_open = true;
    return i;
  }
  static Interval ray_down(S b, bool open_at_b = false) {
    Interval i;
    i.hi = std::move(b);
    i.hi_open = open_at_b;
    i.lo_infinite = true;
    i.lo_open = true;
    return i;
  }

  bool bounded() const { return !lo_infinite && !hi_infinite; }

  bool contains(const S& x) const {
    if (!lo_infinite) {
      if (x < lo) return false;
      if (x == lo && lo_open) return false;
    }
    if (!hi_infinite) {
      if (x > hi) return false;
      if (x == hi && hi_open) return false;
    }
    return true;
  }

  S length() const {
    if (!bounded()) throw UnboundedWithoutLimit("length of an unbounded interval");
    return hi - lo;
  }

  // Same endpoints, both included. Only for bounded intervals.
  Interval closure() const {
    if (!bounded()) throw UnboundedWithoutLimit("closure of an unbounded interval");
    return closed(lo, hi);
  }

  std::string str() const {
    std::string s = lo_open || lo_infinite ? "(" : "[";
    s += lo_infinite ? "-inf" : scalar::str(lo);
    s += ", ";
    s += hi_infinite ? "+inf" : scalar::str(hi);
    s += hi_open || hi_infinite ? ")" : "]";
    return s;
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.lo_infinite != b.lo_infinite || a.hi_infinite != b.hi_infinite) return false;
    if (!a.lo_infinite && (a.lo_open != b.lo_open || !(a.lo == b.lo))) return false;
    if (!a.hi_infinite && (a.hi_open != b.hi_open || !(a.hi == b.hi))) return false;
    return true;
  }

 private:
  static Interval make(S a, S b, bool ao, bool bo) {
    if (b < a) throw Error("interval endpoints out of order");
    Interval i;
    i.lo = std::move(a);
    i.hi = std::move(b);
    i.lo_open = ao;
    i.hi_open = bo;
    return i;
  }
};

// Openness-correct intersection; empty result maps to nullopt.
template <class S>
std::optional<Interval<S>> intersect(const Interval<S>& a, const Interval<S>& b) {
  Interval<S> r;
  if (a.lo_infinite && b.lo_infinite) {
    r.lo_infinite = true;
    r.lo_open = true;
  } else if (a.lo_infinite) {
    r.lo = b.lo;
    r.lo_open = b.lo_open;
  } else if (b.lo_infinite) {
    r.lo = a.lo;
    r.lo_open = a.lo_open;
  } else if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_open = a.lo_open;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_open = b.lo_open;
  } else {
    r.lo = a.lo;
    r.lo_open = a.lo_open || b.lo_open;
  }
  if (a.hi_infinite && b.hi_infinite) {
    r.hi_infinite = true;
    r.hi_open = true;
  } else if (a.hi_infinite) {
    r.hi = b.hi;
    r.hi_open = b.hi_open;
  } else if (b.hi_infinite) {
    r.hi = a.hi;
    r.hi_open = a.hi_open;
  } else if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_open = a.hi_open;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_open = b.hi_open;
  } else {
    r.hi = a.hi;
    r.hi_open = a.hi_open || b.hi_open;
  }
  if (!r.lo_infinite && !r.hi_infinite) {
    if (r.hi < r.lo) return std::nullopt;
    if (r.hi == r.lo && (r.lo_open || r.hi_open)) return std::nullopt;
  }
  return r;
}

}  // namespace hk
