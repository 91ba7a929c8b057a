#include "heis/geodesic.hpp"

#include <cmath>

namespace heis {

namespace {

constexpr double kPoleBandS = 1e-6;  // |s| band flagged as ill-conditioned

}  // namespace

double phi_height(double s) {
  if (s < -1e-12 || s > kTwoPi + 1e-12)
    throw std::invalid_argument("phi_height: s outside [0, 2*pi]");
  s = std::clamp(s, 0.0, kTwoPi);
  return 2.0 * (s - std::sin(s));
}

double phi_height_inverse(double z) {
  if (z < -1e-12 || z > kFourPi + 1e-12)
    throw std::invalid_argument("phi_height_inverse: z outside [0, 4*pi]");
  if (z <= 0.0) return 0.0;
  if (z >= kFourPi) return kTwoPi;
  double lo = 0.0, hi = kTwoPi;
  // 2*pi / 2^200 underflows long before the loop cap; in practice the
  // bracket stops shrinking after ~55 rounds.
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (phi_height(mid) < z ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SphereParam::SphereParam(VectorXd a_in, VectorXd b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {
  if (a.size() != b.size() || a.size() < 1)
    throw std::invalid_argument("SphereParam: a and b must have equal positive length");
  const double norm2 = a.squaredNorm() + b.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("SphereParam: |a|^2 + |b|^2 must be 1");
}

SphereParam SphereParam::normalized(VectorXd a_in, VectorXd b_in) {
  const double norm = std::sqrt(a_in.squaredNorm() + b_in.squaredNorm());
  if (norm <= 0.0)
    throw std::invalid_argument("SphereParam::normalized: zero vector");
  return SphereParam(a_in / norm, b_in / norm);
}

Point geodesic_point(const GeodesicParam& g) {
  if (g.s < -1e-12 || g.s > kTwoPi + 1e-12)
    throw std::invalid_argument("geodesic_point: s outside [0, 2*pi]");
  const double c = std::sin(g.s);
  const double d = 1.0 - std::cos(g.s);
  return Point(c * g.sphere.a + d * g.sphere.b, -d * g.sphere.a + c * g.sphere.b,
               phi_height(g.s));
}

double slice_radius(double s) {
  if (s < -1e-12 || s > kTwoPi + 1e-12)
    throw std::invalid_argument("slice_radius: s outside [0, 2*pi]");
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::cos(s)));
}

namespace {

struct MeridianGap {
  double s;             // recovered arc parameter
  double signed_radial; // r - slice_radius(s_t), sign distinguishes in/out
  double distance;      // gap along the well-conditioned meridian coordinate
};

// The meridian of the hypersurface in the (r, t) half-plane is the curve
// (slice_radius(s), phi_height(s)). Near the poles t varies only cubically
// in s, so inverting t there amplifies rounding by 1/phi'; the radius is
// the well-conditioned coordinate instead (and vice versa around s = pi).
// The returned distance measures the gap along whichever coordinate is
// well conditioned at the recovered parameter.
MeridianGap meridian_gap(const Point& p) {
  const double t = std::clamp(p.t(), 0.0, kFourPi);
  const double r = std::sqrt(p.x().squaredNorm() + p.y().squaredNorm());
  const double s_t = phi_height_inverse(t);
  MeridianGap gap{s_t, r - slice_radius(s_t), 0.0};
  if (slice_radius(s_t) < std::numbers::sqrt2) {
    // radius branch: s from r = 2 sin(s/2), side of pi from t
    const double half = std::asin(std::min(1.0, 0.5 * r));
    gap.s = s_t <= kPi ? 2.0 * half : kTwoPi - 2.0 * half;
    gap.distance = std::abs(p.t() - phi_height(gap.s));
  } else {
    gap.distance = std::abs(gap.signed_radial);
  }
  return gap;
}

}  // namespace

Region omega_contains(const Point& p, double band) {
  if (p.t() < -band || p.t() > kFourPi + band) return Region::outside;
  const MeridianGap gap = meridian_gap(p);
  if (gap.distance <= band) return Region::boundary;
  if (gap.signed_radial > 0.0) return Region::outside;
  if (p.t() > 0.0 && p.t() < kFourPi) return Region::inside;
  return Region::outside;  // beyond a pole height and not within the band
}

GeodesicInverse geodesic_invert(const Point& p, double on_h_tol) {
  if (p.t() < -on_h_tol || p.t() > kFourPi + on_h_tol)
    throw DomainError("geodesic_invert: height outside [0, 4*pi]");
  const int n = p.n();
  const MeridianGap gap = meridian_gap(p);
  if (gap.distance > on_h_tol)
    throw DomainError("geodesic_invert: point off the hypersurface");
  const double s = gap.s;
  const double r = std::sqrt(p.x().squaredNorm() + p.y().squaredNorm());

  VectorXd e1 = VectorXd::Zero(n);
  e1[0] = 1.0;
  if (r <= on_h_tol && (s <= kPoleBandS || s >= kTwoPi - kPoleBandS)) {
    const double s_pole = s <= kPoleBandS ? 0.0 : kTwoPi;
    return GeodesicInverse{GeodesicParam{SphereParam(e1, VectorXd::Zero(n)), s_pole},
                           true, true};
  }

  // blockwise 2x2 solve of  [ sin s   1-cos s ] (a_i)   (x_i)
  //                         [-(1-cos s) sin s ] (b_i) = (y_i)
  const double c = std::sin(s);
  const double d = 1.0 - std::cos(s);
  const double det = c * c + d * d;  // = 2 - 2 cos s
  VectorXd a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = (c * p.x()[i] - d * p.y()[i]) / det;
    b[i] = (d * p.x()[i] + c * p.y()[i]) / det;
  }
  const bool near_pole = s < kPoleBandS || s > kTwoPi - kPoleBandS;
  return GeodesicInverse{GeodesicParam{SphereParam::normalized(a, b), s}, false,
                         near_pole};
}

double cc_distance_from_origin_on_H(const GeodesicParam& g) {
  if (g.s < 0.0 || g.s > kTwoPi)
    throw std::invalid_argument("cc_distance_from_origin_on_H: s outside [0, 2*pi]");
  return g.s;
}

SphereParam sample_sphere(rng::Stream& stream, int n) {
  VectorXd v = stream.gaussian(2 * n);
  while (v.norm() <= 1e-12) v = stream.gaussian(2 * n);
  return SphereParam::normalized(v.head(n), v.tail(n));
}

std::vector<GeodesicParam> sample_H(std::uint64_t seed, int count, int n,
                                    double s_lo, double s_hi) {
  if (count < 1) throw std::invalid_argument("sample_H: count must be >= 1");
  if (!(s_lo < s_hi) || s_lo < 0.0 || s_hi > kTwoPi)
    throw std::invalid_argument("sample_H: empty or invalid s range");
  rng::Stream stream(seed, "geodesic.sample_H");
  std::vector<GeodesicParam> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    SphereParam sphere = sample_sphere(stream, n);
    out.push_back(GeodesicParam{std::move(sphere), stream.uniform(s_lo, s_hi)});
  }
  return out;
}

Point sample_omega_interior(rng::Stream& stream, int n, double radial_lo,
                            double radial_hi, double s_lo, double s_hi) {
  const double s = stream.uniform(s_lo, s_hi);
  const double frac = stream.uniform(radial_lo, radial_hi);
  const SphereParam dir = sample_sphere(stream, n);
  const double r = frac * slice_radius(s);
  return Point(r * dir.a, r * dir.b, phi_height(s));
}

}  // namespace heis
