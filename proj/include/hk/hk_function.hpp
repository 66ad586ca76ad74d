#pragma once

#include <memory>
#include <optional>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "hk/analysis.hpp"
#include "hk/antiderivative.hpp"
#include "hk/errors.hpp"
#include "hk/interval.hpp"
#include "hk/scalar.hpp"
#include "hk/step_function.hpp"

namespace hk {

// Value-semantic heap box so recursive node types stay copyable.
template <class T>
class Box {
 public:
  explicit Box(T v) : p_(std::make_unique<T>(std::move(v))) {}
  Box(const Box& o) : p_(std::make_unique<T>(*o.p_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& o) {
    p_ = std::make_unique<T>(*o.p_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  const T& operator*() const { return *p_; }
  const T* operator->() const { return p_.get(); }

 private:
  std::unique_ptr<T> p_;
};

template <class S>
class HKFn;

namespace fn_node {
template <class S>
struct Sum {
  std::vector<HKFn<S>> terms;
};
template <class S>
struct Scaled {
  S factor;
  Box<HKFn<S>> inner;
};
template <class S>
struct Restricted {
  Box<HKFn<S>> inner;
  Interval<S> window;
};
}  // namespace fn_node

// Integrable function built from step pieces, antiderivative-backed
// integrands (float mode only), sums, scalings, and window restrictions.
// Restrict(f, w) is f on w and 0 elsewhere on f's base, so it plays the role
// of f * indicator(w). Integrals recurse structurally and stay exact wherever
// the leaves are exact.
template <class S>
class HKFn {
 public:
  using Sum = fn_node::Sum<S>;
  using Scaled = fn_node::Scaled<S>;
  using Restricted = fn_node::Restricted<S>;
  using Node = std::conditional_t<
      std::is_same_v<S, double>,
      std::variant<StepFn<S>, AntiderivFn, Sum, Scaled, Restricted>,
      std::variant<StepFn<S>, Sum, Scaled, Restricted>>;

  HKFn(StepFn<S> f) : node_(std::move(f)), base_(std::get<StepFn<S>>(node_).base()) {}

  HKFn(AntiderivFn f) requires std::is_same_v<S, double>
      : node_(std::move(f)), base_(std::get<AntiderivFn>(node_).base()) {}

  static HKFn sum(std::vector<HKFn> terms) {
    if (terms.empty()) throw Error("sum needs at least one term");
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (!(terms[i].base() == terms[0].base()))
        throw DomainMismatch("sum terms live on different bases");
    Interval<S> b = terms[0].base();
    return HKFn(Node(Sum{std::move(terms)}), std::move(b));
  }

  static HKFn scale(S c, HKFn f) {
    Interval<S> b = f.base();
    return HKFn(Node(Scaled{std::move(c), Box<HKFn>(std::move(f))}), std::move(b));
  }

  static HKFn restrict(HKFn f, Interval<S> window) {
    Interval<S> b = f.base();
    return HKFn(Node(Restricted{Box<HKFn>(std::move(f)), std::move(window)}), std::move(b));
  }

  const Node& node() const { return node_; }
  const Interval<S>& base() const { return base_; }

  bool has_antideriv() const {
    return std::visit(
        [](const auto& n) -> bool {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, StepFn<S>>) {
            return false;
          } else if constexpr (std::is_same_v<T, Sum>) {
            for (const auto& t : n.terms)
              if (t.has_antideriv()) return true;
            return false;
          } else if constexpr (std::is_same_v<T, Scaled>) {
            return n.inner->has_antideriv();
          } else if constexpr (std::is_same_v<T, Restricted>) {
            return n.inner->has_antideriv();
          } else {
            return true;
          }
        },
        node_);
  }

  S eval(const S& x) const {
    if (!closure_contains(base_, x)) throw OutOfDomain("evaluation outside base");
    return eval_impl(x);
  }

  S operator()(const S& x) const { return eval(x); }

  S integral(const Interval<S>& I) const {
    check_within_closure(I);
    return integral_clamped(I);
  }

  S integral() const { return integral(base_); }

  // Running integral from the left endpoint of the base.
  S indefinite_at(const S& x) const {
    if (base_.lo_infinite)
      throw UnboundedWithoutLimit("indefinite integral needs a finite left endpoint");
    return integral(Interval<S>::closed(base_.lo, x));
  }

  // Collapse to a single step function when no antiderivative leaf is
  // involved; exact in rational mode.
  std::optional<StepFn<S>> flatten() const {
    return std::visit(
        [](const auto& n) -> std::optional<StepFn<S>> {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, StepFn<S>>) {
            return n;
          } else if constexpr (std::is_same_v<T, Sum>) {
            std::optional<StepFn<S>> acc;
            for (const auto& t : n.terms) {
              auto s = t.flatten();
              if (!s) return std::nullopt;
              acc = acc ? std::optional<StepFn<S>>(*acc + *s) : std::move(s);
            }
            return acc;
          } else if constexpr (std::is_same_v<T, Scaled>) {
            auto s = n.inner->flatten();
            if (!s) return std::nullopt;
            return s->scaled(n.factor);
          } else if constexpr (std::is_same_v<T, Restricted>) {
            auto s = n.inner->flatten();
            if (!s) return std::nullopt;
            auto clip = intersect(n.window, Interval<S>::closed(s->lo(), s->hi()));
            if (!clip) return StepFn<S>::zero(s->lo(), s->hi());
            return s->restricted(*clip);
          } else {
            return std::nullopt;
          }
        },
        node_);
  }

 private:
  HKFn(Node n, Interval<S> b) : node_(std::move(n)), base_(std::move(b)) {}

  static bool closure_contains(const Interval<S>& b, const S& x) {
    if (!b.lo_infinite && x < b.lo) return false;
    if (!b.hi_infinite && x > b.hi) return false;
    return true;
  }

  void check_within_closure(const Interval<S>& I) const {
    bool ok = true;
    if (I.lo_infinite)
      ok = base_.lo_infinite;
    else if (!base_.lo_infinite && I.lo < base_.lo)
      ok = false;
    if (ok) {
      if (I.hi_infinite)
        ok = base_.hi_infinite;
      else if (!base_.hi_infinite && I.hi > base_.hi)
        ok = false;
    }
    if (!ok) throw OutOfDomain("integration interval reaches outside the base");
  }

  S eval_impl(const S& x) const {
    return std::visit(
        [&](const auto& n) -> S {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, StepFn<S>>) {
            return n(x);
          } else if constexpr (std::is_same_v<T, Sum>) {
            S acc{};
            for (const auto& t : n.terms) acc += t.eval_impl(x);
            return acc;
          } else if constexpr (std::is_same_v<T, Scaled>) {
            return n.factor * n.inner->eval_impl(x);
          } else if constexpr (std::is_same_v<T, Restricted>) {
            return n.window.contains(x) ? n.inner->eval_impl(x) : S{};
          } else {
            return n.derivative(x);
          }
        },
        node_);
  }

  S integral_clamped(const Interval<S>& I) const {
    return std::visit(
        [&](const auto& n) -> S {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, StepFn<S>>) {
            return hk_integral(n, I);
          } else if constexpr (std::is_same_v<T, Sum>) {
            S acc{};
            for (const auto& t : n.terms) acc += t.integral_clamped(I);
            return acc;
          } else if constexpr (std::is_same_v<T, Scaled>) {
            return n.factor * n.inner->integral_clamped(I);
          } else if constexpr (std::is_same_v<T, Restricted>) {
            auto clip = intersect(I, n.window);
            if (!clip) return S{};
            return n.inner->integral_clamped(*clip);
          } else {
            const double at_lo = I.lo_infinite ? n.F_at_lo() : n.F(I.lo);
            const double at_hi = I.hi_infinite ? n.F_at_hi() : n.F(I.hi);
            return at_hi - at_lo;
          }
        },
        node_);
  }

  Node node_;
  Interval<S> base_;
};

template <class S>
S hk_integral(const HKFn<S>& f, const Interval<S>& I) {
  return f.integral(I);
}

template <class S>
S hk_integral(const HKFn<S>& f) {
  return f.integral();
}

// Product with a step multiplier. The step side is flattened against f piece
// by piece: exact step arithmetic when f itself is a step function, otherwise
// a sum of scaled window restrictions whose integrals are the exact
// value-times-Phi-difference sums. Values only differ from the pointwise
// product on the measure-zero left endpoint of the base.
template <class S>
HKFn<S> multiply_step(const HKFn<S>& f, const StepFn<S>& g) {
  const Interval<S>& fb = f.base();
  if (fb.lo_infinite || fb.hi_infinite || !(fb.lo == g.lo()) || !(fb.hi == g.hi()))
    throw DomainMismatch("product factors live on different bases");
  if (auto s = f.flatten()) return HKFn<S>(*s * g);
  const S one = scalar::from_ratio<S>(1, 1);
  const StepFn<S> gc = g.canonical();
  std::vector<HKFn<S>> terms;
  for (std::size_t i = 0; i < gc.pieces(); ++i) {
    const S& v = gc.values()[i];
    if (v == S{}) continue;
    HKFn<S> piece =
        gc.pieces() == 1
            ? f
            : HKFn<S>::restrict(
                  f, Interval<S>::left_open(gc.breakpoints()[i], gc.breakpoints()[i + 1]));
    terms.push_back(v == one ? std::move(piece) : HKFn<S>::scale(v, std::move(piece)));
  }
  if (terms.empty()) return HKFn<S>::scale(S{}, f);
  if (terms.size() == 1) return std::move(terms.front());
  return HKFn<S>::sum(std::move(terms));
}

}  // namespace hk
