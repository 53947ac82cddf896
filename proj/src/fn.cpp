#include "convex_smooth/fn.hpp"

#include <cmath>

namespace convex_smooth {

double fd_step(std::span<const double> x) { return 1e-5 * (1.0 + norm2(x)); }

void fd_gradient(const Fn& f, std::span<const double> x, std::span<double> out) {
  const double h = fd_step(x);
  Point p(x.begin(), x.end());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double xi = p[i];
    p[i] = xi + h;
    const double fp = f.value(p);
    p[i] = xi - h;
    const double fm = f.value(p);
    p[i] = xi;
    out[i] = (fp - fm) / (2.0 * h);
  }
}

double fd_second_difference(const Fn& f, std::span<const double> x, std::span<const double> v,
                            double h) {
  Point p(x.begin(), x.end());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = x[i] + h * v[i];
  const double fp = f.value(p);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = x[i] - h * v[i];
  const double fm = f.value(p);
  const double f0 = f.value(x);
  return (fp - 2.0 * f0 + fm) / (h * h);
}

ConvexFn make_convex_fn(int dim, LambdaFn::Value value, DomainDesc domain, Smoothness smoothness) {
  return ConvexFn{std::make_shared<LambdaFn>(dim, std::move(value)), std::move(domain), smoothness};
}

ConvexFn make_convex_fn(int dim, LambdaFn::Value value, LambdaFn::Grad grad, DomainDesc domain,
                        Smoothness smoothness) {
  return ConvexFn{std::make_shared<LambdaFn>(dim, std::move(value), std::move(grad)),
                  std::move(domain), smoothness};
}

ConvexFn make_convex_fn1(std::function<double(double)> value, DomainDesc domain,
                         Smoothness smoothness) {
  auto v = [value = std::move(value)](std::span<const double> x) { return value(x[0]); };
  return make_convex_fn(1, v, std::move(domain), smoothness);
}

ConvexFn make_convex_fn1(std::function<double(double)> value, std::function<double(double)> deriv,
                         DomainDesc domain, Smoothness smoothness) {
  auto v = [value = std::move(value)](std::span<const double> x) { return value(x[0]); };
  auto g = [deriv = std::move(deriv)](std::span<const double> x, std::span<double> out) {
    out[0] = deriv(x[0]);
  };
  return make_convex_fn(1, v, g, std::move(domain), smoothness);
}

namespace {

class ScaleShiftFn final : public Fn {
 public:
  ScaleShiftFn(FnPtr f, double alpha, Point a, double b)
      : f_(std::move(f)), alpha_(alpha), a_(std::move(a)), b_(b) {}
  int dimension() const override { return f_->dimension(); }
  double value(std::span<const double> x) const override {
    return alpha_ * f_->value(x) + dot(a_, x) + b_;
  }
  bool has_gradient() const override { return f_->has_gradient(); }
  void gradient(std::span<const double> x, std::span<double> out) const override {
    f_->gradient(x, out);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha_ * out[i] + a_[i];
  }

 private:
  FnPtr f_;
  double alpha_;
  Point a_;
  double b_;
};

class AffineFn final : public Fn {
 public:
  AffineFn(Point a, double b) : a_(std::move(a)), b_(b) {}
  int dimension() const override { return static_cast<int>(a_.size()); }
  double value(std::span<const double> x) const override { return dot(a_, x) + b_; }
  bool has_gradient() const override { return true; }
  void gradient(std::span<const double>, std::span<double> out) const override {
    for (std::size_t i = 0; i < a_.size(); ++i) out[i] = a_[i];
  }

 private:
  Point a_;
  double b_;
};

}  // namespace

FnPtr scale_shift_fn(FnPtr f, double alpha, Point a, double b) {
  return std::make_shared<ScaleShiftFn>(std::move(f), alpha, std::move(a), b);
}

FnPtr affine_fn(Point a, double b) { return std::make_shared<AffineFn>(std::move(a), b); }

}  // namespace convex_smooth
