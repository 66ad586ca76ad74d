#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hk/interval.hpp"

namespace hk {

// Function known through a continuous antiderivative F: the integrand is
// f = F', possibly unbounded near finitely many singular points, and every
// integral is an F-difference. No gauge or tagged-partition machinery is
// involved; exactness comes from evaluating F.
//
// Instances come from a closed registry of families so they can be named in
// serialized descriptions:
//   "x^p sin(x^-q)"  on [0,1], F(0)=0, singular at 0, needs p>=2, q>=1, q>=p-1
//   "cos(x)/x"       on [1,+inf), F(+inf)=0
//   "-1/x"           inverse-square integrand v/x^2 pieces; transform kernel
class AntiderivFn {
 public:
  AntiderivFn(std::string family, std::vector<double> params, Interval<double> base,
              std::function<double(double)> F, std::function<double(double)> f,
              std::vector<double> singular, std::optional<double> limit_up,
              std::optional<double> limit_down = std::nullopt)
      : family_(std::move(family)),
        params_(std::move(params)),
        base_(base),
        F_(std::move(F)),
        f_(std::move(f)),
        singular_(std::move(singular)),
        limit_up_(limit_up),
        limit_down_(limit_down) {}

  static AntiderivFn oscillatory(int p, int q);
  static AntiderivFn cos_over_x();
  // F(x) = -v/x: derivative v/x^2. Kernel for the reciprocal change of
  // variables applied to step pieces (base [0,1] for images, [1,+inf) for
  // preimages).
  static AntiderivFn inverse_square(double v, Interval<double> base);
  // F(x) = c*x on [1,+inf): the constant integrand c. Restricting it gives
  // step-like functions on the ray (the zero constant carries limit 0).
  static AntiderivFn linear(double c);

  const std::string& family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  const Interval<double>& base() const { return base_; }
  const std::vector<double>& singular_points() const { return singular_; }
  std::optional<double> limit_at_hi() const { return limit_up_; }
  std::optional<double> limit_at_lo() const { return limit_down_; }

  // Antiderivative on the closure of the base; infinite endpoints resolve to
  // the declared limits.
  double F(double x) const;
  double F_at_hi() const;
  double F_at_lo() const;

  // Pointwise integrand; throws SingularPoint on the listed points.
  double derivative(double x) const;

 private:
  std::string family_;
  std::vector<double> params_;
  Interval<double> base_;
  std::function<double(double)> F_;
  std::function<double(double)> f_;
  std::vector<double> singular_;
  std::optional<double> limit_up_;
  std::optional<double> limit_down_;
};

}  // namespace hk
