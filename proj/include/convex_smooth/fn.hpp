#ifndef CONVEX_SMOOTH_FN_HPP
#define CONVEX_SMOOTH_FN_HPP

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "convex_smooth/domain.hpp"
#include "convex_smooth/linalg.hpp"

namespace convex_smooth {

// Exact directional second derivative reported on a log scale, so that
// strictly-positive-curvature certificates survive Gaussian tails that
// underflow plain doubles. Implemented by the closed-form strongly convex
// family; returns -inf only along directions of genuinely zero curvature.
class CurvatureInfo {
 public:
  virtual ~CurvatureInfo() = default;
  virtual double log_directional_curvature(std::span<const double> x,
                                           std::span<const double> v) const = 0;
};

// Immutable evaluable function on R^d. Evaluation is pure and reentrant;
// concurrent use requires no synchronization.
class Fn {
 public:
  virtual ~Fn() = default;
  virtual int dimension() const = 0;
  virtual double value(std::span<const double> x) const = 0;
  virtual bool has_gradient() const { return false; }
  virtual void gradient(std::span<const double> /*x*/, std::span<double> /*out*/) const {}
  virtual const CurvatureInfo* curvature() const { return nullptr; }
};

enum class Smoothness { nonsmooth, c1, c2, cinf };

// Finite-difference step rule used by every derivative check in the library:
// central differences with h = 1e-5 * (1 + |x|).
double fd_step(std::span<const double> x);
void fd_gradient(const Fn& f, std::span<const double> x, std::span<double> out);
double fd_second_difference(const Fn& f, std::span<const double> x, std::span<const double> v,
                            double h);

// Evaluable convex function handle: the universal currency of the pipelines.
struct ConvexFn {
  FnPtr fn;
  DomainDesc domain;
  Smoothness smoothness = Smoothness::nonsmooth;

  int dimension() const { return fn->dimension(); }
  double value(std::span<const double> x) const { return fn->value(x); }
  double value1(double x) const { return fn->value(std::span<const double>(&x, 1)); }
  bool has_gradient() const { return fn->has_gradient(); }

  // Gradient: analytic when present, central differences otherwise.
  Point grad(std::span<const double> x) const {
    Point g(fn->dimension());
    if (fn->has_gradient())
      fn->gradient(x, g);
    else
      fd_gradient(*fn, x, g);
    return g;
  }
};

// Adapters for lambdas and plain functions.
class LambdaFn final : public Fn {
 public:
  using Value = std::function<double(std::span<const double>)>;
  using Grad = std::function<void(std::span<const double>, std::span<double>)>;

  LambdaFn(int dim, Value value) : dim_(dim), value_(std::move(value)) {}
  LambdaFn(int dim, Value value, Grad grad)
      : dim_(dim), value_(std::move(value)), grad_(std::move(grad)) {}

  int dimension() const override { return dim_; }
  double value(std::span<const double> x) const override { return value_(x); }
  bool has_gradient() const override { return static_cast<bool>(grad_); }
  void gradient(std::span<const double> x, std::span<double> out) const override {
    grad_(x, out);
  }

 private:
  int dim_;
  Value value_;
  Grad grad_;
};

ConvexFn make_convex_fn(int dim, LambdaFn::Value value, DomainDesc domain,
                        Smoothness smoothness = Smoothness::nonsmooth);
ConvexFn make_convex_fn(int dim, LambdaFn::Value value, LambdaFn::Grad grad, DomainDesc domain,
                        Smoothness smoothness = Smoothness::nonsmooth);

// f1(x) = f(x) for scalar-argument convenience on 1-d functions.
ConvexFn make_convex_fn1(std::function<double(double)> value, DomainDesc domain,
                         Smoothness smoothness = Smoothness::nonsmooth);
ConvexFn make_convex_fn1(std::function<double(double)> value, std::function<double(double)> deriv,
                         DomainDesc domain, Smoothness smoothness = Smoothness::nonsmooth);

// g(x) = alpha * f(x) + <a, x> + b, convexity preserved for alpha >= 0.
FnPtr scale_shift_fn(FnPtr f, double alpha, Point a, double b);

// Affine function as Fn.
FnPtr affine_fn(Point a, double b);

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_FN_HPP
