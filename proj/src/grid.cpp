#include "convex_smooth/grid.hpp"

#include <stdexcept>

#include "convex_smooth/errors.hpp"

namespace convex_smooth {

Grid sample_grid(const DomainDesc& domain, const Point& box_lo, const Point& box_hi,
                 const std::vector<int>& resolution) {
  const int d = domain.dimension();
  if (static_cast<int>(box_lo.size()) != d || static_cast<int>(resolution.size()) != d)
    throw std::invalid_argument("sample_grid: dimension mismatch");
  for (int r : resolution)
    if (r < 2) throw std::invalid_argument("sample_grid: resolution must be >= 2 per axis");

  Grid g;
  g.box_lo = box_lo;
  g.box_hi = box_hi;
  g.spacing.resize(d);
  for (int i = 0; i < d; ++i) g.spacing[i] = (box_hi[i] - box_lo[i]) / (resolution[i] - 1);

  std::size_t total = 1;
  for (int r : resolution) total *= static_cast<std::size_t>(r);

  Point p(d);
  std::vector<int> idx(d, 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rem = k;
    for (int i = d - 1; i >= 0; --i) {
      idx[i] = static_cast<int>(rem % resolution[i]);
      rem /= resolution[i];
    }
    for (int i = 0; i < d; ++i) p[i] = box_lo[i] + idx[i] * g.spacing[i];
    if (domain.contains(p)) g.points.push_back(p);
  }
  if (g.points.empty()) throw EmptyGrid("no lattice point lies in the domain");
  return g;
}

Grid sample_grid1(const DomainDesc& domain, double lo, double hi, int resolution) {
  return sample_grid(domain, {lo}, {hi}, {resolution});
}

}  // namespace convex_smooth
