#include "convex_smooth/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "convex_smooth/fn.hpp"

namespace convex_smooth {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DomainDesc DomainDesc::all_of_rd(int dim) {
  DomainDesc d;
  d.kind_ = Kind::all;
  d.dim_ = dim;
  return d;
}

DomainDesc DomainDesc::box(Point lo, Point hi) {
  DomainDesc d;
  d.kind_ = Kind::box;
  d.dim_ = static_cast<int>(lo.size());
  d.lo_ = std::move(lo);
  d.hi_ = std::move(hi);
  return d;
}

DomainDesc DomainDesc::ball(Point center, double radius) {
  DomainDesc d;
  d.kind_ = Kind::ball;
  d.dim_ = static_cast<int>(center.size());
  d.center_ = std::move(center);
  d.radius_ = radius;
  return d;
}

DomainDesc DomainDesc::polytope(std::vector<Halfspace> halfspaces, int dim) {
  DomainDesc d;
  d.kind_ = Kind::polytope;
  d.dim_ = dim;
  d.halfspaces_ = std::move(halfspaces);
  return d;
}

DomainDesc DomainDesc::sublevel(FnPtr fn, double level) {
  DomainDesc d;
  d.kind_ = Kind::sublevel;
  d.dim_ = fn->dimension();
  d.fn_ = std::move(fn);
  d.level_ = level;
  return d;
}

DomainDesc DomainDesc::intersection(std::vector<DomainDesc> parts) {
  if (parts.empty()) throw std::invalid_argument("intersection of no parts");
  DomainDesc d;
  d.kind_ = Kind::intersection;
  d.dim_ = parts.front().dimension();
  d.parts_ = std::move(parts);
  return d;
}

bool DomainDesc::contains(std::span<const double> x) const {
  switch (kind_) {
    case Kind::all:
      return true;
    case Kind::box:
      for (int i = 0; i < dim_; ++i)
        if (!(x[i] > lo_[i] && x[i] < hi_[i])) return false;
      return true;
    case Kind::ball: {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) {
        const double d = x[i] - center_[i];
        s += d * d;
      }
      return s < radius_ * radius_;
    }
    case Kind::polytope:
      for (const auto& h : halfspaces_)
        if (!(dot(h.normal, x) < h.offset)) return false;
      return true;
    case Kind::sublevel: {
      const double v = fn_->value(x);
      const double scale = 1.0 + std::abs(level_);
      return v < level_ - kSublevelTol * scale;
    }
    case Kind::intersection:
      for (const auto& p : parts_)
        if (!p.contains(x)) return false;
      return true;
  }
  return false;
}

double DomainDesc::dist_to_boundary(std::span<const double> x) const {
  if (!contains(x)) return 0.0;
  switch (kind_) {
    case Kind::all:
      return kInf;
    case Kind::box: {
      double d = kInf;
      for (int i = 0; i < dim_; ++i) d = std::min(d, std::min(x[i] - lo_[i], hi_[i] - x[i]));
      return d;
    }
    case Kind::ball: {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) {
        const double di = x[i] - center_[i];
        s += di * di;
      }
      return radius_ - std::sqrt(s);
    }
    case Kind::polytope: {
      double d = kInf;
      for (const auto& h : halfspaces_) {
        const double nn = norm2(h.normal);
        if (nn > 0.0) d = std::min(d, (h.offset - dot(h.normal, x)) / nn);
      }
      return d;
    }
    case Kind::sublevel: {
      // Bisection along sampled rays; an upper bound on the true distance,
      // tolerance-based by construction.
      const int dim = dim_;
      double best = kInf;
      Point dir(dim, 0.0), probe(x.begin(), x.end());
      for (int axis = 0; axis < 2 * dim; ++axis) {
        std::fill(dir.begin(), dir.end(), 0.0);
        dir[axis / 2] = (axis % 2 == 0) ? 1.0 : -1.0;
        // Expand until outside, then bisect.
        double t_lo = 0.0, t_hi = 1.0;
        bool escaped = false;
        for (int it = 0; it < 80; ++it) {
          for (int i = 0; i < dim; ++i) probe[i] = x[i] + t_hi * dir[i];
          if (!contains(probe)) {
            escaped = true;
            break;
          }
          t_lo = t_hi;
          t_hi *= 2.0;
        }
        if (!escaped) continue;
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (t_lo + t_hi);
          for (int i = 0; i < dim; ++i) probe[i] = x[i] + mid * dir[i];
          (contains(probe) ? t_lo : t_hi) = mid;
        }
        best = std::min(best, t_hi);
      }
      return best;
    }
    case Kind::intersection: {
      double d = kInf;
      for (const auto& p : parts_) d = std::min(d, p.dist_to_boundary(x));
      return d;
    }
  }
  return 0.0;
}

bool DomainDesc::is_bounded() const {
  switch (kind_) {
    case Kind::all:
      return false;
    case Kind::box:
    case Kind::ball:
      return true;
    case Kind::polytope:
      return static_cast<bool>(bounding_box());
    case Kind::sublevel:
      return static_cast<bool>(bounding_box());
    case Kind::intersection:
      for (const auto& p : parts_)
        if (p.is_bounded()) return true;
      return false;
  }
  return false;
}

std::optional<std::pair<Point, Point>> DomainDesc::bounding_box() const {
  switch (kind_) {
    case Kind::all:
      return std::nullopt;
    case Kind::box:
      return std::make_pair(lo_, hi_);
    case Kind::ball: {
      Point lo(dim_), hi(dim_);
      for (int i = 0; i < dim_; ++i) {
        lo[i] = center_[i] - radius_;
        hi[i] = center_[i] + radius_;
      }
      return std::make_pair(lo, hi);
    }
    case Kind::polytope: {
      // Axis-aligned bound only when each coordinate is pinched by a pair of
      // axis halfspaces; otherwise treated as unbounded.
      Point lo(dim_, -kInf), hi(dim_, kInf);
      for (const auto& h : halfspaces_) {
        int nz = -1;
        bool axis_aligned = true;
        for (int i = 0; i < dim_; ++i) {
          if (h.normal[i] != 0.0) {
            if (nz >= 0) {
              axis_aligned = false;
              break;
            }
            nz = i;
          }
        }
        if (!axis_aligned || nz < 0) continue;
        const double bound = h.offset / h.normal[nz];
        if (h.normal[nz] > 0)
          hi[nz] = std::min(hi[nz], bound);
        else
          lo[nz] = std::max(lo[nz], bound);
      }
      for (int i = 0; i < dim_; ++i)
        if (!std::isfinite(lo[i]) || !std::isfinite(hi[i])) return std::nullopt;
      return std::make_pair(lo, hi);
    }
    case Kind::sublevel:
      return std::nullopt;  // callers probe sublevel extent by rays
    case Kind::intersection: {
      Point lo(dim_, -kInf), hi(dim_, kInf);
      bool any = false;
      for (const auto& p : parts_) {
        if (auto bb = p.bounding_box()) {
          any = true;
          for (int i = 0; i < dim_; ++i) {
            lo[i] = std::max(lo[i], bb->first[i]);
            hi[i] = std::min(hi[i], bb->second[i]);
          }
        }
      }
      if (!any) return std::nullopt;
      for (int i = 0; i < dim_; ++i)
        if (!std::isfinite(lo[i]) || !std::isfinite(hi[i])) return std::nullopt;
      return std::make_pair(lo, hi);
    }
  }
  return std::nullopt;
}

}  // namespace convex_smooth
