#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "convex_smooth/errors.hpp"
#include "convex_smooth/rng.hpp"
#include "convex_smooth/smooth_max.hpp"

using namespace convex_smooth;

namespace {
SmoothMaxParams compact_params(double eps) { return SmoothMaxParams{make_theta(eps)}; }
}  // namespace

TEST_CASE("M equals max exactly when |x - y| >= eps") {
  auto p = compact_params(0.2);
  CHECK(smooth_max2(p, 5.0, 1.0) == 5.0);  // bitwise
  CHECK(smooth_max2(p, 0.3, 0.1) == 0.3);
  CHECK(smooth_max2(p, -2.0, 7.0) == 7.0);
}

TEST_CASE("M(0,0) lands in (0, eps/2]") {
  auto p = compact_params(1.0);
  const double v = smooth_max2(p, 0.0, 0.0);
  CHECK(v > 0.0);
  CHECK(v <= 0.5);
}

TEST_CASE("lemma property suite on random triples") {
  Rng rng(kDefaultSeed);
  for (double eps : {0.01, 0.1, 1.0}) {
    auto p = compact_params(eps);
    for (int k = 0; k < 1000; ++k) {
      const double x = rng.uniform(-3.0, 3.0);
      const double y = rng.uniform(-3.0, 3.0);

      const double m = smooth_max2(p, x, y);
      // (ii) sandwich
      CHECK(m >= std::max(x, y));
      CHECK(m <= std::max(x, y) + 0.5 * eps + 1e-15);
      // (iii) exact equality outside the band, zero tolerance
      if (std::abs(x - y) >= eps) CHECK(m == std::max(x, y));
      // (iv) symmetry, bitwise via the even table
      CHECK(smooth_max2(p, y, x) == m);

      // (i) convexity of (x, y) -> M via midpoints
      const double x2 = rng.uniform(-3.0, 3.0);
      const double y2 = rng.uniform(-3.0, 3.0);
      const double mid = smooth_max2(p, 0.5 * (x + x2), 0.5 * (y + y2));
      CHECK(mid <= 0.5 * (m + smooth_max2(p, x2, y2)) + 1e-12);

      // (v) 1-Lipschitz in the sup norm
      const double other = smooth_max2(p, x2, y2);
      CHECK(std::abs(m - other) <=
            std::max(std::abs(x - x2), std::abs(y - y2)) + 1e-12);

      // (viii) joint monotonicity
      const double dx = rng.uniform(0.0, 1.0);
      const double dy = rng.uniform(0.0, 1.0);
      CHECK(smooth_max2(p, x + dx, y + dy) >= m - 1e-15);
    }
  }
}

TEST_CASE("strict monotonicity (vi)/(vii) with representable margin") {
  // Strictness is asserted at increment 1e-6. In the outer 5% sliver of the
  // band the true increase falls below 1 ulp, so sampling stays within 0.95 eps.
  Rng rng(kDefaultSeed ^ 0x77);
  for (double eps : {0.01, 0.1, 1.0}) {
    auto p = compact_params(eps);
    const double inc = 1e-6;
    for (int k = 0; k < 1000; ++k) {
      const double y = rng.uniform(-2.0, 2.0);
      // (vi): y - eps <= x implies M(x, y) < M(x', y) for x < x'
      double x = y + rng.uniform(-0.95, 3.0) * eps;
      CHECK(smooth_max2(p, x + inc, y) > smooth_max2(p, x, y));
      // (vii): x - eps <= y implies strict increase in y
      double x2 = rng.uniform(-2.0, 2.0);
      double yy = x2 + rng.uniform(-0.95, 3.0) * eps;
      CHECK(smooth_max2(p, x2, yy + inc) > smooth_max2(p, x2, yy));
    }
  }
}

TEST_CASE("derivative identity dM/dx = (1 + theta'(x-y))/2 in [0,1]") {
  Rng rng(kDefaultSeed ^ 0xd1);
  auto p = compact_params(0.3);
  for (int k = 0; k < 500; ++k) {
    const double x = rng.uniform(-1.0, 1.0);
    const double y = rng.uniform(-1.0, 1.0);
    const double d = smooth_max2_dx(p, x, y);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
    const double h = 1e-6;
    const double fd = (smooth_max2(p, x + h, y) - smooth_max2(p, x - h, y)) / (2.0 * h);
    CHECK(d == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("smooth_max2_fn basics") {
  auto dom = DomainDesc::all_of_rd(1);
  auto f = make_convex_fn1([](double x) { return x; }, dom, Smoothness::cinf);
  auto g = make_convex_fn1([](double) { return 0.0; }, dom, Smoothness::cinf);
  auto p = compact_params(0.2);
  auto m = smooth_max2_fn(p, f, g);
  // equals f where f >= g + eps
  double x = 1.0;
  CHECK(m.value(std::span<const double>(&x, 1)) == 1.0);

  // f = g gives f + theta(0)/2 everywhere
  auto m2 = smooth_max2_fn(p, f, f);
  const double t0 = p.theta.value(0.0);
  for (double t : {-1.3, 0.0, 0.7}) {
    CHECK(m2.value(std::span<const double>(&t, 1)) ==
          doctest::Approx(t + 0.5 * t0).epsilon(1e-15));
  }

  auto g2 = make_convex_fn(2, [](std::span<const double> x) { return x[0] + x[1]; },
                           DomainDesc::all_of_rd(2));
  CHECK_THROWS_AS(smooth_max2_fn(p, f, g2), DomainMismatch);
}

TEST_CASE("smooth_max2_fn sandwich for (x^2, 1-x) on a grid") {
  auto dom = DomainDesc::all_of_rd(1);
  auto f = make_convex_fn1([](double x) { return x * x; }, dom, Smoothness::cinf);
  auto g = make_convex_fn1([](double x) { return 1.0 - x; }, dom, Smoothness::cinf);
  auto m = smooth_max2_fn(compact_params(0.1), f, g);
  for (int i = 0; i <= 600; ++i) {
    const double x = -3.0 + i / 100.0;
    const double fv = x * x, gv = 1.0 - x;
    const double v = m.value(std::span<const double>(&x, 1));
    CHECK(v >= std::max(fv, gv));
    CHECK(v <= std::max(fv, gv) + 0.05 + 1e-14);
  }
}

TEST_CASE("smooth_max_n") {
  auto dom = DomainDesc::all_of_rd(1);
  CHECK_THROWS_AS(smooth_max_n(0.1, {}), EmptyList);

  // m = 1: unchanged (same underlying object)
  auto f = make_convex_fn1([](double x) { return x * x; }, dom);
  auto one = smooth_max_n(0.4, {f});
  CHECK(one.fn.get() == f.fn.get());

  // m = 2 with a gap >= eps' reduces to the exact max
  auto f1 = make_convex_fn1([](double x) { return x; }, dom, Smoothness::cinf);
  auto f2 = make_convex_fn1([](double x) { return -x; }, dom, Smoothness::cinf);
  auto m2 = smooth_max_n(0.4, {f1, f2});
  double x = 3.0;
  CHECK(m2.value(std::span<const double>(&x, 1)) == 3.0);  // |f1-f2| = 6 >= eps' = 0.1

  // m = 3, affine tangents of x^2 - 0.1: fold stays below x^2 - 0.05
  std::vector<ConvexFn> tangents;
  for (double p : {-1.0, 0.0, 1.0}) {
    tangents.push_back(make_convex_fn1(
        [p](double x) { return p * p - 0.1 + 2.0 * p * (x - p); }, dom, Smoothness::cinf));
  }
  auto m3 = smooth_max_n(0.1, tangents);
  double worst_gap = 1e9;
  for (int i = 0; i <= 400; ++i) {
    const double t = -1.0 + i / 200.0;
    const double v = m3.value(std::span<const double>(&t, 1));
    double maxt = -1e300;
    for (auto& tf : tangents) maxt = std::max(maxt, tf.value(std::span<const double>(&t, 1)));
    CHECK(v >= maxt);
    CHECK(v <= maxt + 0.05 + 1e-14);  // m * eps' = eps/2
    CHECK(v <= t * t - 0.05 + 1e-14);
    worst_gap = std::min(worst_gap, t * t - 0.05 - v);
  }
  CHECK(worst_gap >= -1e-14);
}

TEST_CASE("strong-convexity propagation through the heat variant") {
  // second difference of M~(f, g) along lines >= min(f'', g'')/2 - tol
  auto dom = DomainDesc::all_of_rd(1);
  auto f = make_convex_fn1([](double x) { return x * x; }, dom, Smoothness::cinf);
  auto g = make_convex_fn1([](double x) { return 0.75 * x * x - x; }, dom, Smoothness::cinf);
  SmoothMaxParams heat{make_theta_heat(0.3)};
  auto m = smooth_max2_fn(heat, f, g);
  const double h = 1e-4;
  double v = 1.0;
  Rng rng(kDefaultSeed ^ 0xabc);
  for (int k = 0; k < 300; ++k) {
    const double x = rng.uniform(-2.0, 2.0);
    const double sd = fd_second_difference(*m.fn, std::span<const double>(&x, 1),
                                           std::span<const double>(&v, 1), h);
    CHECK(sd >= 0.5 * std::min(2.0, 1.5) - 1e-3);  // half the weaker curvature
  }
}
