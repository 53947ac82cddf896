#ifndef CONVEX_SMOOTH_SMOOTH_MAX_HPP
#define CONVEX_SMOOTH_SMOOTH_MAX_HPP

#include <vector>

#include "convex_smooth/fn.hpp"
#include "convex_smooth/smooth_abs.hpp"

namespace convex_smooth {

struct SmoothMaxParams {
  SmoothAbs theta;
};

// M_eps(x, y) = (x + y + theta(x - y)) / 2. With the compact theta the value
// equals max{x, y} bitwise whenever |x - y| >= eps (the formula reduces to it
// exactly, and the code takes that branch literally).
double smooth_max2(const SmoothMaxParams& params, double x, double y);

// Partial derivative in x: (1 + theta'(x - y)) / 2, in [0, 1].
double smooth_max2_dx(const SmoothMaxParams& params, double x, double y);

// Pointwise M_eps(f(x), g(x)). Convex; equals f where f >= g + eps and g where
// g >= f + eps (compact variant, exactly); lies in [max{f,g}, max{f,g}+eps/2];
// preserves common local Lipschitz constants.
ConvexFn smooth_max2_fn(const SmoothMaxParams& params, const ConvexFn& f, const ConvexFn& g);

// Right-nested fold M_{eps'}(f_1, M_{eps'}(f_2, ...)) with eps' = eps/(2m).
// Result lies in [max_j f_j, max_j f_j + eps/2] pointwise. m = 1 returns the
// single input unchanged.
ConvexFn smooth_max_n(double eps, const std::vector<ConvexFn>& fns);

// Log of the directional second derivative of M(beta, gamma) along a line,
// from the inputs' values gap, slope gap, and log curvatures. Lower bound when
// a rounded-to-zero coefficient drops a term.
double combine_curvature_log(const SmoothAbs& theta, double diff, double dslope, double log_cb,
                             double log_cg);

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_SMOOTH_MAX_HPP
