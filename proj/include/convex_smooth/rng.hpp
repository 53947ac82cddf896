#ifndef CONVEX_SMOOTH_RNG_HPP
#define CONVEX_SMOOTH_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace convex_smooth {

// xoshiro256** seeded through splitmix64. Self-contained so that streams are
// reproducible independently of the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      s = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::vector<double> point_in_box(const std::vector<double>& lo, const std::vector<double>& hi) {
    std::vector<double> p(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) p[i] = uniform(lo[i], hi[i]);
    return p;
  }

  // Uniform direction on the unit sphere (via normalized Gaussian sample).
  std::vector<double> unit_vector(int dim) {
    std::vector<double> v(dim);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int i = 0; i < dim; ++i) {
        v[i] = gaussian();
        norm2 += v[i] * v[i];
      }
    } while (norm2 < 1e-30);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : v) c *= inv;
    return v;
  }

  double gaussian() {
    // Box-Muller on the deterministic uniform stream.
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(6.283185307179586476925286766559 * u2);
    have_spare_ = true;
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed0c0ffeeULL;

}  // namespace convex_smooth

#endif  // CONVEX_SMOOTH_RNG_HPP
