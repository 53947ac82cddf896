#include "convex_smooth/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace convex_smooth {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Point axpy(double alpha, std::span<const double> x, std::span<const double> y) {
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] + y[i];
  return out;
}

Point scaled(double alpha, std::span<const double> x) {
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i];
  return out;
}

Point sub(std::span<const double> a, std::span<const double> b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

int SvdResult::rank(double rel_tol) const {
  if (singular_values.empty()) return 0;
  const double cutoff = rel_tol * singular_values.front();
  int r = 0;
  for (double s : singular_values)
    if (s > cutoff) ++r;
  return r;
}

SvdResult svd(const Matrix& a) {
  const int m = a.rows, n = a.cols;
  // Work on a copy; rotate column pairs until A^T A is diagonal.
  Matrix u = a;
  Matrix v(n, n);
  for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (int i = 0; i < m; ++i) {
          app += u.at(i, p) * u.at(i, p);
          aqq += u.at(i, q) * u.at(i, q);
          apq += u.at(i, p) * u.at(i, q);
        }
        off = std::max(off, std::abs(apq) / (std::sqrt(app * aqq) + 1e-300));
        if (std::abs(apq) < 1e-300) continue;
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < m; ++i) {
          const double up = u.at(i, p), uq = u.at(i, q);
          u.at(i, p) = c * up - s * uq;
          u.at(i, q) = s * up + c * uq;
        }
        for (int i = 0; i < n; ++i) {
          const double vp = v.at(i, p), vq = v.at(i, q);
          v.at(i, p) = c * vp - s * vq;
          v.at(i, q) = s * vp + c * vq;
        }
      }
    }
    if (off < 1e-15) break;
  }

  std::vector<double> sv(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += u.at(i, j) * u.at(i, j);
    sv[j] = std::sqrt(s);
  }
  // Sort descending, permuting V accordingly.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return sv[i] > sv[j]; });
  SvdResult out;
  out.singular_values.resize(n);
  out.right_vectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.singular_values[j] = sv[order[j]];
    for (int i = 0; i < n; ++i) out.right_vectors.at(i, j) = v.at(i, order[j]);
  }
  return out;
}

bool solve_linear(Matrix a, Point b, Point& x, double rel_tol) {
  const int n = a.rows;
  double amax = 0.0;
  for (double v : a.data) amax = std::max(amax, std::abs(v));
  if (amax == 0.0) return false;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a.at(i, k)) > std::abs(a.at(piv, k))) piv = i;
    if (std::abs(a.at(piv, k)) < rel_tol * amax) return false;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      std::swap(b[piv], b[k]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = a.at(i, k) / a.at(k, k);
      a.at(i, k) = 0.0;
      for (int j = k + 1; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      b[i] -= f * b[k];
    }
  }
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
    x[i] = s / a.at(i, i);
  }
  return true;
}

}  // namespace convex_smooth
