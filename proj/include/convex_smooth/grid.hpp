#ifndef CONVEX_SMOOTH_GRID_HPP
#define CONVEX_SMOOTH_GRID_HPP

#include <vector>

#include "convex_smooth/domain.hpp"
#include "convex_smooth/linalg.hpp"

namespace convex_smooth {

// Uniform lattice clipped to a domain. Spacing is uniform per axis.
struct Grid {
  std::vector<Point> points;
  Point spacing;
  Point box_lo, box_hi;

  std::size_t size() const { return points.size(); }
};

// Lattice over `box` with `resolution` points per axis, keeping only points
// inside `domain`. Throws EmptyGrid when nothing survives.
Grid sample_grid(const DomainDesc& domain, const Point& box_lo, const Point& box_hi,
                 const std::vector<int>& resolution);

// 1-d convenience.
Grid sample_grid1(const DomainDesc& domain, double lo, double hi, int resolution);

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_GRID_HPP
