#include "convex_smooth/corner.hpp"

#include <stdexcept>

#include "convex_smooth/errors.hpp"

namespace convex_smooth {

CornerFn::CornerFn(std::vector<Piece> pieces, int dim) : pieces_(std::move(pieces)), dim_(dim) {
  if (pieces_.empty()) throw EmptyList("corner function needs at least one piece");
  for (const auto& p : pieces_)
    if (static_cast<int>(p.slope.size()) != dim)
      throw std::invalid_argument("corner piece dimension mismatch");
}

double CornerFn::value(std::span<const double> x) const {
  double best = dot(pieces_[0].slope, x) + pieces_[0].offset;
  for (std::size_t j = 1; j < pieces_.size(); ++j) {
    const double v = dot(pieces_[j].slope, x) + pieces_[j].offset;
    if (v > best) best = v;
  }
  return best;
}

void CornerFn::gradient(std::span<const double> x, std::span<double> out) const {
  std::size_t arg = 0;
  double best = dot(pieces_[0].slope, x) + pieces_[0].offset;
  for (std::size_t j = 1; j < pieces_.size(); ++j) {
    const double v = dot(pieces_[j].slope, x) + pieces_[j].offset;
    if (v > best) {
      best = v;
      arg = j;
    }
  }
  for (int i = 0; i < dim_; ++i) out[i] = pieces_[arg].slope[i];
}

int CornerFn::augmented_rank() const {
  Matrix a(piece_count(), dim_ + 1);
  for (int j = 0; j < piece_count(); ++j) {
    for (int i = 0; i < dim_; ++i) a.at(j, i) = -pieces_[j].slope[i];
    a.at(j, dim_) = 1.0;
  }
  // svd() expects rows >= cols; transpose when there are few pieces.
  if (a.rows < a.cols) {
    Matrix t(a.cols, a.rows);
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.cols; ++c) t.at(c, r) = a.at(r, c);
    return svd(t).rank();
  }
  return svd(a).rank();
}

double eval_corner(const CornerFn& corner, std::span<const double> x) { return corner.value(x); }

}  // namespace convex_smooth
