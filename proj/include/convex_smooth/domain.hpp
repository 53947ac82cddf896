#ifndef CONVEX_SMOOTH_DOMAIN_HPP
#define CONVEX_SMOOTH_DOMAIN_HPP

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "convex_smooth/linalg.hpp"

namespace convex_smooth {

class Fn;
using FnPtr = std::shared_ptr<const Fn>;

// Open convex subset of R^d. Membership and distance-to-boundary queries are
// exact for box/ball/polytope and tolerance-based for sublevel sets
// (strict inequality with tolerance 1e-12).
class DomainDesc {
 public:
  enum class Kind { all, box, ball, polytope, sublevel, intersection };

  struct Halfspace {
    Point normal;  // <normal, x> < offset
    double offset;
  };

  static DomainDesc all_of_rd(int dim);
  static DomainDesc box(Point lo, Point hi);
  static DomainDesc ball(Point center, double radius);
  static DomainDesc polytope(std::vector<Halfspace> halfspaces, int dim);
  static DomainDesc sublevel(FnPtr fn, double level);
  static DomainDesc intersection(std::vector<DomainDesc> parts);

  Kind kind() const { return kind_; }
  int dimension() const { return dim_; }

  bool contains(std::span<const double> x) const;
  // Distance from an interior point to the boundary; 0 for points outside.
  // For kind all the result is +infinity.
  double dist_to_boundary(std::span<const double> x) const;
  bool is_bounded() const;

  // Enclosing axis box for bounded sets; nullopt for unbounded ones.
  std::optional<std::pair<Point, Point>> bounding_box() const;

  const Point& box_lo() const { return lo_; }
  const Point& box_hi() const { return hi_; }
  const Point& center() const { return center_; }
  double radius() const { return radius_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const FnPtr& level_fn() const { return fn_; }
  double level() const { return level_; }
  const std::vector<DomainDesc>& parts() const { return parts_; }

  static constexpr double kSublevelTol = 1e-12;

 private:
  Kind kind_ = Kind::all;
  int dim_ = 0;
  Point lo_, hi_;           // box
  Point center_;            // ball
  double radius_ = 0.0;     // ball
  std::vector<Halfspace> halfspaces_;
  FnPtr fn_;                // sublevel
  double level_ = 0.0;      // sublevel
  std::vector<DomainDesc> parts_;  // intersection
};

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_DOMAIN_HPP
