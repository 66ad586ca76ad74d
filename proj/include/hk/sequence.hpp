#pragma once

#include <functional>
#include <string>

#include "hk/interval.hpp"
#include "hk/rational.hpp"
#include "hk/step_function.hpp"

namespace hk {

// A sequence of step functions g_1, g_2, ... together with its declared
// limit. Every generated function shares the limit's base; `domain` is where
// variation and sup norms are measured and may exclude an endpoint (the
// compactified tail sequence lives on a left-open domain, so the value at 0
// is not part of the function's identity).
template <class S>
struct FunctionSequence {
  std::string id;
  std::function<StepFn<S>(int)> generate;  // pure, defined for n >= 1
  Interval<S> domain;
  StepFn<S> limit;
  bool ae_limit_declared = false;  // the generator's pointwise limit is known analytically
};

inline FunctionSequence<double> to_float(const FunctionSequence<Rat>& s) {
  auto gen = s.generate;
  return FunctionSequence<double>{s.id,
                                  [gen](int n) { return to_float(gen(n)); },
                                  to_float(s.domain),
                                  to_float(s.limit),
                                  s.ae_limit_declared};
}

inline const FunctionSequence<double>& to_float(const FunctionSequence<double>& s) { return s; }

}  // namespace hk
