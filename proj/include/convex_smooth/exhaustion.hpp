#ifndef CONVEX_SMOOTH_EXHAUSTION_HPP
#define CONVEX_SMOOTH_EXHAUSTION_HPP

#include <vector>

#include "convex_smooth/domain.hpp"
#include "convex_smooth/rng.hpp"

namespace convex_smooth {

// Nested bounded open convex sets B_n with closure(B_n) contained in B_{n+1}.
// Finite and truncated: pipelines rely on stage stabilization, so truncation
// is exact on the region the last set covers.
struct Exhaustion {
  std::vector<DomainDesc> sets;
  std::vector<double> dist_gaps;  // dist(B_n, boundary of U); m for unbounded U

  int stages() const { return static_cast<int>(sets.size()); }

  // Sampled containment closure(B_n) in B_{n+1} with strictly positive margin.
  bool check_nesting(Rng& rng, int samples_per_stage = 256) const;
  bool covers(const std::vector<Point>& points) const;
};

// B_m = {x in U : dist(x, boundary U) > 1/m, |x| < m} for m = 1..m_max; for
// U = R^d the distance clause is dropped. Empty leading sets are dropped with
// reindexing. Throws EmptyDomain if every set is empty.
Exhaustion build_exhaustion(const DomainDesc& domain, int m_max);

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_EXHAUSTION_HPP
