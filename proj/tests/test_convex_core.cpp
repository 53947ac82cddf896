#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "convex_smooth/corner.hpp"
#include "convex_smooth/errors.hpp"
#include "convex_smooth/exhaustion.hpp"
#include "convex_smooth/fn.hpp"
#include "convex_smooth/grid.hpp"
#include "convex_smooth/rng.hpp"

using namespace convex_smooth;

TEST_CASE("eval_corner on the spec fixtures") {
  // |x| as max{x, -x}
  CornerFn abs_corner({{{1.0}, 0.0}, {{-1.0}, 0.0}}, 1);
  double x = 3.0;
  CHECK(eval_corner(abs_corner, std::span<const double>(&x, 1)) == 3.0);
  CHECK(abs_corner.rank_certificate());

  // max{x, 0}
  CornerFn relu({{{0.0}, 0.0}, {{1.0}, 0.0}}, 1);
  x = -2.0;
  CHECK(eval_corner(relu, std::span<const double>(&x, 1)) == 0.0);

  // max{x, y, 0} at (0.5, -1)
  CornerFn c2({{{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}, {{0.0, 0.0}, 0.0}}, 2);
  Point p{0.5, -1.0};
  CHECK(eval_corner(c2, p) == 0.5);
  CHECK(c2.rank_certificate());  // three pieces, rank 3 in R^3
}

TEST_CASE("corner positive homogeneity with zero offsets") {
  CornerFn c({{{1.0, 0.5}, 0.0}, {{-0.3, 1.0}, 0.0}, {{0.0, 0.0}, 0.0}}, 2);
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 200; ++k) {
    Point x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const double lambda = rng.uniform(0.0, 3.0);
    Point lx{lambda * x[0], lambda * x[1]};
    CHECK(eval_corner(c, lx) == doctest::Approx(lambda * eval_corner(c, x)).epsilon(1e-12));
  }
}

TEST_CASE("corner rank certificate fails for dependent pieces") {
  // three pieces in R^1: augmented vectors live in R^2
  CornerFn c({{{1.0}, 0.0}, {{-1.0}, 0.0}, {{0.5}, 0.2}}, 1);
  CHECK(c.augmented_rank() == 2);
  CHECK_FALSE(c.rank_certificate());
}

TEST_CASE("corner gradient picks the active piece") {
  CornerFn abs_corner({{{1.0}, 0.0}, {{-1.0}, 0.0}}, 1);
  double x = 2.0;
  Point g(1);
  abs_corner.gradient(std::span<const double>(&x, 1), g);
  CHECK(g[0] == 1.0);
  x = -2.0;
  abs_corner.gradient(std::span<const double>(&x, 1), g);
  CHECK(g[0] == -1.0);
}

TEST_CASE("build_exhaustion on R^1 gives balls (-m, m)") {
  auto ex = build_exhaustion(DomainDesc::all_of_rd(1), 3);
  REQUIRE(ex.stages() == 3);
  for (int m = 1; m <= 3; ++m) {
    const auto& s = ex.sets[m - 1];
    CHECK(s.kind() == DomainDesc::Kind::ball);
    CHECK(s.radius() == doctest::Approx(m));
    CHECK(ex.dist_gaps[m - 1] == doctest::Approx(m));  // +inf surrogate
  }
  Rng rng(kDefaultSeed);
  CHECK(ex.check_nesting(rng));
}

TEST_CASE("build_exhaustion drops empty leading sets for the unit box") {
  Point lo{-1.0, -1.0}, hi{1.0, 1.0};
  auto ex = build_exhaustion(DomainDesc::box(lo, hi), 2);
  // B_1 requires dist > 1, impossible in a box with inradius 1: dropped.
  REQUIRE(ex.stages() == 1);
  Point origin{0.0, 0.0};
  CHECK(ex.sets[0].contains(origin));
  Point near_edge{0.45, 0.0};
  CHECK(ex.sets[0].contains(near_edge));
  Point outside{0.6, 0.0};  // dist to box boundary = 0.4 < 1/2
  CHECK_FALSE(ex.sets[0].contains(outside));
  CHECK(ex.dist_gaps[0] == doctest::Approx(0.5));
}

TEST_CASE("build_exhaustion m_max=1 on R^2 is the unit ball") {
  auto ex = build_exhaustion(DomainDesc::all_of_rd(2), 1);
  REQUIRE(ex.stages() == 1);
  CHECK(ex.sets[0].kind() == DomainDesc::Kind::ball);
  CHECK(ex.sets[0].radius() == doctest::Approx(1.0));
}

TEST_CASE("build_exhaustion rejects bad input") {
  Point lo{-0.01}, hi{0.01};
  // Every B_m with m = 1 needs dist > 1; a tiny box stays empty.
  CHECK_THROWS_AS(build_exhaustion(DomainDesc::box(lo, hi), 1), EmptyDomain);
}

TEST_CASE("sample_grid on [-1,1] resolution 5") {
  auto g = sample_grid1(DomainDesc::all_of_rd(1), -1.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.points[0][0] == doctest::Approx(-1.0));
  CHECK(g.points[1][0] == doctest::Approx(-0.5));
  CHECK(g.points[4][0] == doctest::Approx(1.0));
  CHECK(g.spacing[0] == doctest::Approx(0.5));
}

TEST_CASE("sample_grid clips to the domain") {
  Point lo{-1.0, -1.0}, hi{1.0, 1.0};
  auto domain = DomainDesc::box(lo, hi);
  auto g = sample_grid(domain, {-2.0, -2.0}, {2.0, 2.0}, {5, 5});
  for (const auto& p : g.points) {
    CHECK(std::abs(p[0]) < 1.0);
    CHECK(std::abs(p[1]) < 1.0);
  }
  CHECK(g.size() == 1);  // only the origin of the 5x5 lattice on [-2,2]^2 is interior
}

TEST_CASE("sample_grid on a sublevel domain keeps strict interior points") {
  auto f = make_convex_fn1([](double x) { return x * x; }, DomainDesc::all_of_rd(1));
  auto domain = DomainDesc::sublevel(f.fn, 1.0);
  auto g = sample_grid1(domain, -2.0, 2.0, 9);
  REQUIRE(g.size() == 3);  // -0.5, 0, 0.5; the boundary points x = +-1 are excluded
  CHECK(g.points[0][0] == doctest::Approx(-0.5));
  CHECK(g.points[2][0] == doctest::Approx(0.5));
}

TEST_CASE("sample_grid error cases") {
  Point lo{10.0}, hi{11.0};
  auto domain = DomainDesc::box({-1.0}, {1.0});
  CHECK_THROWS_AS(sample_grid(domain, lo, hi, {5}), EmptyGrid);
  CHECK_THROWS(sample_grid(domain, {-1.0}, {1.0}, {1}));
}

TEST_CASE("domain membership and boundary distance") {
  auto ball = DomainDesc::ball({1.0, 0.0}, 2.0);
  Point p{1.0, 1.0};
  CHECK(ball.contains(p));
  CHECK(ball.dist_to_boundary(p) == doctest::Approx(1.0));

  auto box = DomainDesc::box({0.0, 0.0}, {4.0, 2.0});
  Point q{1.0, 0.5};
  CHECK(box.dist_to_boundary(q) == doctest::Approx(0.5));

  std::vector<DomainDesc::Halfspace> hs{{{1.0, 0.0}, 1.0}, {{-1.0, 0.0}, 1.0}};
  auto poly = DomainDesc::polytope(hs, 2);
  Point r{0.25, 5.0};
  CHECK(poly.contains(r));
  CHECK(poly.dist_to_boundary(r) == doctest::Approx(0.75));
  CHECK_FALSE(poly.is_bounded());
}

TEST_CASE("fd gradient fallback matches analytic gradients") {
  auto f = make_convex_fn(2, [](std::span<const double> x) { return x[0] * x[0] + 3.0 * x[1]; },
                          DomainDesc::all_of_rd(2));
  Point x{0.7, -0.2};
  auto g = f.grad(x);
  CHECK(g[0] == doctest::Approx(1.4).epsilon(1e-8));
  CHECK(g[1] == doctest::Approx(3.0).epsilon(1e-8));
}
