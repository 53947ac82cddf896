#include "convex_smooth/smooth_abs.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>

#include "convex_smooth/errors.hpp"

namespace convex_smooth {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Degree of the Chebyshev table for the unit profile. 50 leaves ~1e-7
// interpolation error for this bump; 220 meets the 1e-10*eps contract.
constexpr int kProfileDegree = 220;

double bump_raw(double u) {
  const double w = 1.0 - u * u;
  if (w <= 0.0) return 0.0;
  return std::exp(-1.0 / w);
}

}  // namespace

namespace detail {

double bump_normalization() {
  static const double z = integrate_cc([](double u) { return bump_raw(u); }, -1.0, 1.0);
  return z;
}

int theta_profile_degree() { return kProfileDegree; }

const ChebyshevInterpolant& theta_profile() {
  static const ChebyshevInterpolant table = [] {
    const double z = bump_normalization();
    auto t_of = [z](double s) {
      // T(s) = int |s-u| delta(u) du, split at the kink.
      auto integrand = [z, s](double u) { return std::abs(s - u) * bump_raw(u) / z; };
      return integrate_cc(integrand, -1.0, 1.0, {s});
    };
    ChebyshevInterpolant fit = ChebyshevInterpolant::fit(t_of, -1.0, 1.0, kProfileDegree);
    fit.symmetrize_even();  // T is even
    return fit;
  }();
  return table;
}

const ChebyshevInterpolant& theta_profile_deriv() {
  static const ChebyshevInterpolant table = theta_profile().derivative();
  return table;
}

}  // namespace detail

SmoothAbs make_theta(double eps) {
  if (!(eps > 0.0)) throw InvalidEpsilon("make_theta requires eps > 0");
  detail::theta_profile();  // build the shared table eagerly
  SmoothAbs s;
  s.variant_ = SmoothAbs::Variant::compact;
  s.eps_ = eps;
  return s;
}

SmoothAbs make_theta_heat(double eps) {
  if (!(eps > 0.0)) throw InvalidEpsilon("make_theta_heat requires eps > 0");
  SmoothAbs s;
  s.variant_ = SmoothAbs::Variant::heat;
  s.eps_ = eps;
  s.r_ = kPi * eps * eps / 16.0;  // makes |t| <= theta~ <= |t| + eps tight
  return s;
}

double SmoothAbs::value(double t) const {
  if (variant_ == Variant::compact) {
    const double a = std::abs(t);
    if (a >= eps_) return a;
    return eps_ * detail::theta_profile()(a / eps_);
  }
  const double z = t / (2.0 * std::sqrt(r_));
  return t * std::erf(z) + 2.0 * std::sqrt(r_ / kPi) * std::exp(-t * t / (4.0 * r_)) +
         0.5 * eps_;
}

double SmoothAbs::deriv(double t) const {
  if (variant_ == Variant::compact) {
    if (t >= eps_) return 1.0;
    if (t <= -eps_) return -1.0;
    const double d = detail::theta_profile_deriv()(std::abs(t) / eps_);
    const double clamped = std::min(1.0, std::max(-1.0, d));
    return t >= 0.0 ? clamped : -clamped;
  }
  return std::erf(t / (2.0 * std::sqrt(r_)));
}

double SmoothAbs::log_second_deriv(double t) const {
  if (variant_ == Variant::compact) {
    // theta'' = 2 delta_eps exactly.
    const double u = t / eps_;
    const double w = 1.0 - u * u;
    if (w <= 0.0) return kNegInf;
    return std::log(2.0 / (detail::bump_normalization() * eps_)) - 1.0 / w;
  }
  return -t * t / (4.0 * r_) - 0.5 * std::log(kPi * r_);
}

double SmoothAbs::second_deriv(double t) const {
  const double l = log_second_deriv(t);
  return l == kNegInf ? 0.0 : std::exp(l);
}

double log_erfc(double w) {
  if (w < 20.0) return std::log(std::erfc(w));
  const double w2 = w * w;
  return -w2 - std::log(w * std::sqrt(kPi)) + std::log1p(-0.5 / w2 + 0.75 / (w2 * w2));
}

namespace {
constexpr std::uint32_t kCacheMagic = 0x42545343u;  // "CSTB"
constexpr std::uint32_t kCacheVersion = 1u;
constexpr std::uint16_t kByteOrderMark = 0x0102u;

template <typename T>
void write_raw(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <typename T>
T read_raw(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}
}  // namespace

void SmoothAbs::save(std::ostream& os) const {
  write_raw(os, kCacheMagic);
  write_raw(os, kCacheVersion);
  write_raw(os, kByteOrderMark);
  write_raw(os, static_cast<std::uint8_t>(variant_));
  write_raw(os, eps_);
  write_raw(os, r_);
  if (variant_ == Variant::compact) {
    const auto& coeffs = detail::theta_profile().coefficients();
    write_raw(os, static_cast<std::uint32_t>(coeffs.size()));
    for (double c : coeffs) write_raw(os, c);
  } else {
    write_raw(os, static_cast<std::uint32_t>(0));
  }
}

SmoothAbs SmoothAbs::load(std::istream& is) {
  if (read_raw<std::uint32_t>(is) != kCacheMagic) throw IoError("theta cache: bad magic");
  if (read_raw<std::uint32_t>(is) != kCacheVersion) throw IoError("theta cache: bad version");
  if (read_raw<std::uint16_t>(is) != kByteOrderMark) throw IoError("theta cache: byte order");
  const auto variant = static_cast<Variant>(read_raw<std::uint8_t>(is));
  const double eps = read_raw<double>(is);
  const double r = read_raw<double>(is);
  const auto count = read_raw<std::uint32_t>(is);
  std::vector<double> coeffs(count);
  for (std::uint32_t i = 0; i < count; ++i) coeffs[i] = read_raw<double>(is);
  if (!is) throw IoError("theta cache: truncated");
  if (variant == Variant::heat) {
    SmoothAbs s = make_theta_heat(eps);
    s.r_ = r;
    return s;
  }
  SmoothAbs s = make_theta(eps);
  // The table is deterministic per build; a stored table that disagrees came
  // from an incompatible producer.
  if (coeffs != detail::theta_profile().coefficients())
    throw IoError("theta cache: coefficient table mismatch");
  return s;
}

}  // namespace convex_smooth
