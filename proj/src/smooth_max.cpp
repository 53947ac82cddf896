#include "convex_smooth/smooth_max.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "convex_smooth/errors.hpp"

namespace convex_smooth {

double smooth_max2(const SmoothMaxParams& params, double x, double y) {
  const double d = x - y;
  if (params.theta.variant() == SmoothAbs::Variant::compact &&
      std::abs(d) >= params.theta.epsilon()) {
    return std::max(x, y);  // theta(d) = |d| here; keep the max bitwise
  }
  return 0.5 * (x + y + params.theta.value(d));
}

double smooth_max2_dx(const SmoothMaxParams& params, double x, double y) {
  return 0.5 * (1.0 + params.theta.deriv(x - y));
}

namespace {

class SmoothMax2Fn final : public Fn, public CurvatureInfo {
 public:
  SmoothMax2Fn(SmoothMaxParams params, FnPtr f, FnPtr g)
      : params_(std::move(params)), f_(std::move(f)), g_(std::move(g)) {}

  int dimension() const override { return f_->dimension(); }

  double value(std::span<const double> x) const override {
    return smooth_max2(params_, f_->value(x), g_->value(x));
  }

  bool has_gradient() const override { return f_->has_gradient() && g_->has_gradient(); }

  void gradient(std::span<const double> x, std::span<double> out) const override {
    const double fv = f_->value(x);
    const double gv = g_->value(x);
    const double a = 0.5 * (1.0 + params_.theta.deriv(fv - gv));
    Point gg(out.size());
    f_->gradient(x, out);
    g_->gradient(x, gg);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * out[i] + (1.0 - a) * gg[i];
  }

  const CurvatureInfo* curvature() const override {
    return (f_->curvature() && g_->curvature()) ? this : nullptr;
  }

  double log_directional_curvature(std::span<const double> x,
                                   std::span<const double> v) const override;

 private:
  SmoothMaxParams params_;
  FnPtr f_, g_;
};

double logsumexp3(double a, double b, double c) {
  const double m = std::max(a, std::max(b, c));
  if (!std::isfinite(m)) return m;
  return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

}  // namespace

// d^2/dt^2 M(beta, gamma) = ((1+theta')beta'' + (1-theta')gamma'')/2
//                           + theta''(beta'-gamma')^2 / 2,
// every term nonnegative; combined in log scale. Dropping a term whose
// coefficient rounds to zero keeps this a valid lower bound.
double combine_curvature_log(const SmoothAbs& theta, double diff, double dslope, double log_cb,
                             double log_cg) {
  const double tp = theta.deriv(diff);
  const double wb = 0.5 * (1.0 + tp);
  const double wg = 0.5 * (1.0 - tp);
  const double term_b = (wb > 0.0) ? std::log(wb) + log_cb
                                   : -std::numeric_limits<double>::infinity();
  const double term_g = (wg > 0.0) ? std::log(wg) + log_cg
                                   : -std::numeric_limits<double>::infinity();
  double term_m = -std::numeric_limits<double>::infinity();
  if (dslope != 0.0) {
    term_m = theta.log_second_deriv(diff) - std::log(2.0) + 2.0 * std::log(std::abs(dslope));
  }
  return logsumexp3(term_b, term_g, term_m);
}

double SmoothMax2Fn::log_directional_curvature(std::span<const double> x,
                                               std::span<const double> v) const {
  const double fv = f_->value(x);
  const double gv = g_->value(x);
  Point gf(x.size()), gg(x.size());
  f_->gradient(x, gf);
  g_->gradient(x, gg);
  const double sf = dot(gf, v);
  const double sg = dot(gg, v);
  const double cf = f_->curvature()->log_directional_curvature(x, v);
  const double cg = g_->curvature()->log_directional_curvature(x, v);
  return combine_curvature_log(params_.theta, fv - gv, sf - sg, cf, cg);
}

ConvexFn smooth_max2_fn(const SmoothMaxParams& params, const ConvexFn& f, const ConvexFn& g) {
  if (f.dimension() != g.dimension())
    throw DomainMismatch("smooth_max2_fn: inputs have different dimensions");
  ConvexFn out;
  out.fn = std::make_shared<SmoothMax2Fn>(params, f.fn, g.fn);
  out.domain = f.domain;
  out.smoothness = std::min(f.smoothness, g.smoothness);
  return out;
}

ConvexFn smooth_max_n(double eps, const std::vector<ConvexFn>& fns) {
  if (fns.empty()) throw EmptyList("smooth_max_n: no functions");
  if (fns.size() == 1) return fns.front();
  const double eps_prime = eps / (2.0 * static_cast<double>(fns.size()));
  SmoothMaxParams params{make_theta(eps_prime)};
  ConvexFn acc = fns.back();
  for (std::size_t j = fns.size() - 1; j-- > 0;) acc = smooth_max2_fn(params, fns[j], acc);
  return acc;
}

}  // namespace convex_smooth
