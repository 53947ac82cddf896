#ifndef CONVEX_SMOOTH_LINALG_HPP
#define CONVEX_SMOOTH_LINALG_HPP

#include <span>
#include <vector>

namespace convex_smooth {

using Point = std::vector<double>;

// Relative singular-value threshold used everywhere a numerical rank decision
// is made. Single tie-breaking constant for "linearly independent".
inline constexpr double kRankRelTol = 1e-8;

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
Point axpy(double alpha, std::span<const double> x, std::span<const double> y);  // alpha*x + y
Point scaled(double alpha, std::span<const double> x);
Point sub(std::span<const double> a, std::span<const double> b);

// Row-major dense matrix, sized for small problems (d <= a few, rows up to a
// few thousand).
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}
  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::span<const double> row(int r) const { return {&data[static_cast<std::size_t>(r) * cols], static_cast<std::size_t>(cols)}; }
};

struct SvdResult {
  std::vector<double> singular_values;  // descending
  Matrix right_vectors;                 // cols x cols, columns are right singular vectors
  int rank(double rel_tol = kRankRelTol) const;
};

// One-sided Jacobi SVD; accurate for the small matrices used here.
SvdResult svd(const Matrix& a);

// Solves a*x = b in place via Gaussian elimination with partial pivoting.
// Returns false if the pivot falls below rel_tol times the largest entry.
bool solve_linear(Matrix a, Point b, Point& x, double rel_tol = 1e-13);

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_LINALG_HPP
