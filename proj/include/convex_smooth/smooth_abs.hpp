#ifndef CONVEX_SMOOTH_SMOOTH_ABS_HPP
#define CONVEX_SMOOTH_SMOOTH_ABS_HPP

#include <iosfwd>
#include <memory>
#include <string>

#include "convex_smooth/chebyshev.hpp"

namespace convex_smooth {

// Smoothed absolute value backing the smooth maximum.
//
// compact variant: theta_eps = |.| convolved with the normalized bump
//   delta_eps(t) = eps^{-1} delta(t/eps), delta(u) ~ exp(-1/(1-u^2)).
//   Exactly |t| for |t| >= eps; inside, a Chebyshev interpolant of the
//   scale-invariant profile T(s) = (|.| * delta)(s), theta_eps(t) = eps*T(t/eps).
//   |theta'(t)| < 1 iff |t| < eps.
//
// heat variant: theta~_eps(t) = t*erf(t/(2 sqrt r)) + 2 sqrt(r/pi) e^{-t^2/4r}
//   + eps/2 with r = pi eps^2 / 16, so |t| <= theta~ <= |t| + eps with the sup
//   deviation eps attained at t = 0 and eps/2 in the tails. Second derivative
//   strictly positive everywhere.
class SmoothAbs {
 public:
  enum class Variant { compact, heat };

  Variant variant() const { return variant_; }
  double epsilon() const { return eps_; }
  double heat_radius() const { return r_; }  // heat variant only

  double value(double t) const;
  double deriv(double t) const;
  // log of the second derivative; stable where the plain value underflows.
  // -inf outside the support for the compact variant.
  double log_second_deriv(double t) const;
  double second_deriv(double t) const;

  void save(std::ostream& os) const;
  static SmoothAbs load(std::istream& is);

  friend SmoothAbs make_theta(double eps);
  friend SmoothAbs make_theta_heat(double eps);

 private:
  SmoothAbs() = default;
  Variant variant_ = Variant::compact;
  double eps_ = 0.0;
  double r_ = 0.0;
};

// Compact-deviation smoothed |.|; throws InvalidEpsilon for eps <= 0.
SmoothAbs make_theta(double eps);
// Heat-kernel variant; throws InvalidEpsilon for eps <= 0.
SmoothAbs make_theta_heat(double eps);

// log(erfc(w)) without underflow for large w.
double log_erfc(double w);

// Internals of the compact profile, exposed for the test oracles.
namespace detail {
// Normalization constant Z = integral of exp(-1/(1-u^2)) over [-1, 1].
double bump_normalization();
// Chebyshev tables of the unit profile T and T'.
const ChebyshevInterpolant& theta_profile();
const ChebyshevInterpolant& theta_profile_deriv();
int theta_profile_degree();
}  // namespace detail

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_SMOOTH_ABS_HPP
