#ifndef CONVEX_SMOOTH_CHEBYSHEV_HPP
#define CONVEX_SMOOTH_CHEBYSHEV_HPP

#include <functional>
#include <vector>

namespace convex_smooth {

// Chebyshev interpolant of a function on [lo, hi], evaluated by Clenshaw
// recurrence. Degree n uses the n+1 extrema nodes.
class ChebyshevInterpolant {
 public:
  ChebyshevInterpolant() = default;
  ChebyshevInterpolant(std::vector<double> coeffs, double lo, double hi)
      : coeffs_(std::move(coeffs)), lo_(lo), hi_(hi) {}

  static ChebyshevInterpolant fit(const std::function<double(double)>& f, double lo, double hi,
                                  int degree);

  double operator()(double x) const;
  ChebyshevInterpolant derivative() const;

  const std::vector<double>& coefficients() const { return coeffs_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  // Zeroes the odd coefficients; valid when the sampled function is even
  // about the interval midpoint.
  void symmetrize_even();

 private:
  std::vector<double> coeffs_;
  double lo_ = -1.0;
  double hi_ = 1.0;
};

// Clenshaw-Curtis nodes/weights on [-1, 1] with n+1 points (n >= 2, even).
// Weights are all positive.
void clenshaw_curtis(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Integrates f over [lo, hi] with composite Clenshaw-Curtis panels
// (64 nodes per panel), bisecting panels until the estimate is stable to
// rel_tol. The integrand should be smooth inside each initial panel;
// pass breakpoints to split at known kinks.
double integrate_cc(const std::function<double(double)>& f, double lo, double hi,
                    const std::vector<double>& breakpoints = {}, double rel_tol = 1e-14);

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_CHEBYSHEV_HPP
