#ifndef CONVEX_SMOOTH_CORNER_HPP
#define CONVEX_SMOOTH_CORNER_HPP

#include <utility>
#include <vector>

#include "convex_smooth/fn.hpp"
#include "convex_smooth/linalg.hpp"

namespace convex_smooth {

// Max of finitely many affine pieces <l_j, x> + b_j. A corner function in the
// strict sense additionally carries a rank certificate: the augmented vectors
// (-l_j, 1) in R^{d+1} are linearly independent, so the piece count is at most
// d+1. Max-affine under-approximants reuse this container with more pieces and
// no rank requirement.
class CornerFn final : public Fn {
 public:
  struct Piece {
    Point slope;
    double offset;
  };

  CornerFn(std::vector<Piece> pieces, int dim);

  int dimension() const override { return dim_; }
  double value(std::span<const double> x) const override;
  bool has_gradient() const override { return true; }
  // Gradient of the active piece (first max index on ties); valid a.e.
  void gradient(std::span<const double> x, std::span<double> out) const override;

  int piece_count() const { return static_cast<int>(pieces_.size()); }
  const std::vector<Piece>& pieces() const { return pieces_; }

  // Numerical rank of the stacked augmented vectors (-l_j, 1), SVD threshold
  // kRankRelTol relative to the top singular value.
  int augmented_rank() const;
  // True when the rank equals the piece count (<= d+1 pieces).
  bool rank_certificate() const { return augmented_rank() == piece_count(); }

 private:
  std::vector<Piece> pieces_;
  int dim_;
};

// max_j <l_j, x> + b_j. Total on R^d.
double eval_corner(const CornerFn& corner, std::span<const double> x);

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_CORNER_HPP
