#pragma once

#include <numbers>

#include "heis/core.hpp"
#include "heis/rng.hpp"

namespace heis {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

// Height profile 2(s - sin s): strictly increasing from 0 to 4*pi
// on [0, 2*pi].
double phi_height(double s);

// Inverse of phi_height by bisection (the derivative vanishes at both
// endpoints, so Newton would stall there); exact at the endpoints and
// otherwise resolved to the last representable bit of s.
double phi_height_inverse(double z);

// Unit vector (a, b) in R^n x R^n: |a|^2 + |b|^2 = 1 within 1e-12.
struct SphereParam {
  // placeholder (1, 0) in n = 1, so report structs are default-constructible
  SphereParam() : a(VectorXd::Ones(1)), b(VectorXd::Zero(1)) {}
  SphereParam(VectorXd a_in, VectorXd b_in);
  static SphereParam normalized(VectorXd a_in, VectorXd b_in);

  int n() const { return static_cast<int>(a.size()); }

  VectorXd a, b;
};

// ((a,b), s): arc-length position s along the unit-speed geodesic
// labelled by (a,b). s ranges over [0, 2*pi].
struct GeodesicParam {
  SphereParam sphere;
  double s = 0.0;
};

// Chart of the hypersurface:
//   Phi((a,b), s) = ( sin(s) a + (1-cos(s)) b,
//                    -(1-cos(s)) a + sin(s) b,
//                     2(s - sin(s)) ).
// Every geodesic starts at the origin (s = 0) and ends at (0,0,4*pi)
// (s = 2*pi).
Point geodesic_point(const GeodesicParam& g);

// Radius sqrt(2 - 2 cos s) of the horizontal slice of the hypersurface at
// arc parameter s.
double slice_radius(double s);

enum class Region { inside, boundary, outside };

// Classifies p against the closed region bounded by the hypersurface:
// compares |(x,y)| with the slice radius at the height of p; a gap of at
// most `band` counts as boundary. t outside [0, 4*pi] is outside.
Region omega_contains(const Point& p, double band = 1e-9);

struct GeodesicInverse {
  GeodesicParam param;
  // p is one of the two poles; the sphere part of param is arbitrary.
  bool pole = false;
  // s within 1e-6 of a pole: the 2x2 slice system degenerates and the
  // recovered sphere part loses accuracy.
  bool ill_conditioned = false;
};

// Inverts geodesic_point. Throws DomainError if p is farther than
// on_h_tol from the hypersurface.
GeodesicInverse geodesic_invert(const Point& p, double on_h_tol = 1e-9);

// Arc length from the origin to Phi(g) along the geodesic labelled by
// g.sphere; equals g.s, and 2*pi at the far pole.
double cc_distance_from_origin_on_H(const GeodesicParam& g);

// Deterministic sampler: (a,b) from normalized Gaussian vectors, s uniform
// on [s_lo, s_hi]. Identical output for identical arguments.
std::vector<GeodesicParam> sample_H(std::uint64_t seed, int count, int n,
                                    double s_lo = 0.0, double s_hi = kTwoPi);

SphereParam sample_sphere(rng::Stream& stream, int n);

// Generic interior point of the bounded region: radial fraction of the
// slice radius in [radial_lo, radial_hi], arc parameter in [s_lo, s_hi],
// direction uniform on the slice sphere. Stays away from the vertical axis
// and from the hypersurface, where several interior diagnostics degenerate.
Point sample_omega_interior(rng::Stream& stream, int n,
                            double radial_lo = 0.25, double radial_hi = 0.75,
                            double s_lo = 0.7, double s_hi = kTwoPi - 0.7);

}  // namespace heis
