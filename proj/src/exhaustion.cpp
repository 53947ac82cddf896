#include "convex_smooth/exhaustion.hpp"

#include <algorithm>
#include <cmath>

#include "convex_smooth/errors.hpp"
#include "convex_smooth/fn.hpp"

namespace convex_smooth {

namespace {

// Deterministic nonemptiness probe: obvious anchors plus Monte Carlo in the
// enclosing box |x|_inf <= m.
bool probably_nonempty(const DomainDesc& set, int dim, double m) {
  Point origin(dim, 0.0);
  if (set.contains(origin)) return true;
  if (auto bb = set.bounding_box()) {
    Point mid(dim);
    for (int i = 0; i < dim; ++i) mid[i] = 0.5 * (bb->first[i] + bb->second[i]);
    if (set.contains(mid)) return true;
  }
  Rng rng(kDefaultSeed ^ 0x9e37ULL);
  Point p(dim);
  for (int k = 0; k < 4096; ++k) {
    for (int i = 0; i < dim; ++i) p[i] = rng.uniform(-m, m);
    if (set.contains(p)) return true;
  }
  return false;
}

DomainDesc shrink_by(const DomainDesc& u, double margin) {
  switch (u.kind()) {
    case DomainDesc::Kind::box: {
      Point lo = u.box_lo(), hi = u.box_hi();
      for (std::size_t i = 0; i < lo.size(); ++i) {
        lo[i] += margin;
        hi[i] -= margin;
      }
      return DomainDesc::box(std::move(lo), std::move(hi));
    }
    case DomainDesc::Kind::ball:
      return DomainDesc::ball(u.center(), u.radius() - margin);
    case DomainDesc::Kind::polytope: {
      auto hs = u.halfspaces();
      for (auto& h : hs) h.offset -= margin * norm2(h.normal);
      return DomainDesc::polytope(std::move(hs), u.dimension());
    }
    case DomainDesc::Kind::sublevel:
      // Distance-like clause in function units; tolerance-based as sublevel
      // membership itself is.
      return DomainDesc::sublevel(u.level_fn(), u.level() - margin);
    default:
      return u;
  }
}

}  // namespace

Exhaustion build_exhaustion(const DomainDesc& domain, int m_max) {
  if (m_max < 1) throw std::invalid_argument("build_exhaustion: m_max >= 1 required");
  const int d = domain.dimension();
  Exhaustion ex;
  bool seen_nonempty = false;
  for (int m = 1; m <= m_max; ++m) {
    Point center(d, 0.0);
    DomainDesc ball_m = DomainDesc::ball(center, static_cast<double>(m));
    DomainDesc set = (domain.kind() == DomainDesc::Kind::all)
                         ? ball_m
                         : DomainDesc::intersection({shrink_by(domain, 1.0 / m), ball_m});
    if (!seen_nonempty) {
      if (!probably_nonempty(set, d, static_cast<double>(m))) continue;  // dropped from the front
      seen_nonempty = true;
    }
    ex.sets.push_back(std::move(set));
    ex.dist_gaps.push_back(domain.kind() == DomainDesc::Kind::all ? static_cast<double>(m)
                                                                  : 1.0 / m);
  }
  if (ex.sets.empty()) throw EmptyDomain("no exhaustion set is nonempty for m <= m_max");
  return ex;
}

bool Exhaustion::check_nesting(Rng& rng, int samples_per_stage) const {
  for (std::size_t n = 0; n + 1 < sets.size(); ++n) {
    const auto& inner = sets[n];
    const auto& outer = sets[n + 1];
    auto bb = inner.bounding_box();
    if (!bb) continue;
    const int d = inner.dimension();
    Point anchor(d, 0.0);
    if (!inner.contains(anchor)) {
      for (int i = 0; i < d; ++i) anchor[i] = 0.5 * (bb->first[i] + bb->second[i]);
      if (!inner.contains(anchor)) continue;
    }
    for (int s = 0; s < samples_per_stage; ++s) {
      Point x = rng.point_in_box(bb->first, bb->second);
      if (!inner.contains(x)) continue;
      // Push toward the boundary of the inner set along anchor->x.
      double t_lo = 1.0, t_hi = 2.0;
      Point probe(d);
      bool escaped = false;
      for (int it = 0; it < 40; ++it) {
        for (int i = 0; i < d; ++i) probe[i] = anchor[i] + t_hi * (x[i] - anchor[i]);
        if (!inner.contains(probe)) {
          escaped = true;
          break;
        }
        t_lo = t_hi;
        t_hi *= 2.0;
      }
      if (escaped) {
        for (int it = 0; it < 50; ++it) {
          const double mid = 0.5 * (t_lo + t_hi);
          for (int i = 0; i < d; ++i) probe[i] = anchor[i] + mid * (x[i] - anchor[i]);
          (inner.contains(probe) ? t_lo : t_hi) = mid;
        }
        // probe now sits just outside inner; it must still be well inside outer.
        for (int i = 0; i < d; ++i) probe[i] = anchor[i] + t_hi * (x[i] - anchor[i]);
        if (!outer.contains(probe) || !(outer.dist_to_boundary(probe) > 0.0)) return false;
      }
      if (!outer.contains(x)) return false;
    }
  }
  return true;
}

bool Exhaustion::covers(const std::vector<Point>& points) const {
  for (const auto& p : points) {
    bool in_any = false;
    for (const auto& s : sets)
      if (s.contains(p)) {
        in_any = true;
        break;
      }
    if (!in_any) return false;
  }
  return true;
}

}  // namespace convex_smooth
