#include "convex_smooth/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace convex_smooth {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

ChebyshevInterpolant ChebyshevInterpolant::fit(const std::function<double(double)>& f, double lo,
                                               double hi, int degree) {
  const int n = degree;
  std::vector<double> fv(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double t = std::cos(kPi * j / n);  // extrema nodes, descending order
    const double x = 0.5 * (lo + hi) + 0.5 * (hi - lo) * t;
    fv[j] = f(x);
  }
  // Discrete cosine transform (type I) for the coefficients.
  std::vector<double> c(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.5 * (fv[0] + (k % 2 == 0 ? fv[n] : -fv[n]));
    for (int j = 1; j < n; ++j) s += fv[j] * std::cos(kPi * j * k / n);
    c[k] = 2.0 * s / n;
  }
  c[0] *= 0.5;
  c[n] *= 0.5;
  return ChebyshevInterpolant(std::move(c), lo, hi);
}

double ChebyshevInterpolant::operator()(double x) const {
  const double t = (2.0 * x - lo_ - hi_) / (hi_ - lo_);
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 1;) {
    const double b0 = 2.0 * t * b1 - b2 + coeffs_[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + coeffs_[0];
}

ChebyshevInterpolant ChebyshevInterpolant::derivative() const {
  const int n = static_cast<int>(coeffs_.size()) - 1;
  std::vector<double> d(n + 1, 0.0);
  // Standard descending recurrence for Chebyshev derivative coefficients.
  for (int k = n - 1; k >= 0; --k) {
    d[k] = (k + 2 <= n ? d[k + 2] : 0.0) + 2.0 * (k + 1) * coeffs_[k + 1];
  }
  d[0] *= 0.5;
  const double scale = 2.0 / (hi_ - lo_);
  for (auto& v : d) v *= scale;
  d.pop_back();
  if (d.empty()) d.push_back(0.0);
  return ChebyshevInterpolant(std::move(d), lo_, hi_);
}

void ChebyshevInterpolant::symmetrize_even() {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) coeffs_[k] = 0.0;
}

void clenshaw_curtis(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("clenshaw_curtis: n must be even, >= 2");
  nodes.resize(n + 1);
  weights.resize(n + 1);
  for (int j = 0; j <= n; ++j) nodes[j] = std::cos(kPi * j / n);
  // w_j = (c_j/n) * (1 - sum_{k=1..n/2} b_k cos(2 k theta_j)/(4k^2-1))
  // with b_k = 1 for k = n/2 and 2 otherwise, c_j = 1 at endpoints else 2.
  for (int j = 0; j <= n; ++j) {
    const double theta = kPi * j / n;
    double s = 0.0;
    for (int k = 1; k <= n / 2; ++k) {
      const double b = (k == n / 2) ? 1.0 : 2.0;
      s += b * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
    }
    const double cj = (j == 0 || j == n) ? 1.0 : 2.0;
    weights[j] = cj / n * (1.0 - s);
  }
}

namespace {

double cc_panel(const std::function<double(double)>& f, double a, double b,
                const std::vector<double>& nodes, const std::vector<double>& weights) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) s += weights[j] * f(mid + half * nodes[j]);
  return s * half;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const std::vector<double>& nodes, const std::vector<double>& weights,
                          double whole, double rel_tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = cc_panel(f, a, mid, nodes, weights);
  const double right = cc_panel(f, mid, b, nodes, weights);
  const double refined = left + right;
  if (depth <= 0 || std::abs(refined - whole) <= rel_tol * (std::abs(refined) + 1e-300))
    return refined;
  return integrate_adaptive(f, a, mid, nodes, weights, left, rel_tol, depth - 1) +
         integrate_adaptive(f, mid, b, nodes, weights, right, rel_tol, depth - 1);
}

}  // namespace

double integrate_cc(const std::function<double(double)>& f, double lo, double hi,
                    const std::vector<double>& breakpoints, double rel_tol) {
  std::vector<double> cuts{lo};
  for (double b : breakpoints)
    if (b > lo && b < hi) cuts.push_back(b);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());

  std::vector<double> nodes, weights;
  clenshaw_curtis(64, nodes, weights);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double whole = cc_panel(f, cuts[i], cuts[i + 1], nodes, weights);
    total += integrate_adaptive(f, cuts[i], cuts[i + 1], nodes, weights, whole, rel_tol, 24);
  }
  return total;
}

}  // namespace convex_smooth
