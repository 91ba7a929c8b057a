#pragma once

#include <utility>
#include <vector>

#include "heis/core.hpp"
#include "heis/hom.hpp"
#include "heis/maps.hpp"

namespace heis {

// Rescaled group difference quotient
//   delta_{1/s}( (m(p))^{-1} * m(p * delta_s q) ).
// Exactly q for left translations, delta_r(q) for dilations, and A(q) for
// homomorphisms A, independently of s.
Point pansu_quotient(const MapHandle& m, const Point& p, const Point& q,
                     double s);

struct PansuEstimate {
  HomogeneousHom hom;  // least-squares fit at the smallest scale
  std::vector<double> scales;
  // Per-scale max-abs coordinate deviation of the quotients from the
  // fitted hom (the gauge distance would amplify ulp-level vertical
  // rounding by a square root and is unusable at these tolerances).
  std::vector<double> residuals;
  bool converged = false;
  double hom_defect = 0.0;  // product-law violation of the fitted hom
  std::string diagnostics;
};

// Fits (M, lambda) to the quotients of `probes` at the smallest scale and
// measures the per-scale deviations. converged requires non-increasing
// residuals and a final residual below tol. Divergence (the blow-up of the
// quotients when no homomorphic limit exists) is reported through
// converged = false, never thrown.
PansuEstimate pansu_estimate(const MapHandle& m, const Point& p,
                             std::vector<double> scales,
                             const std::vector<Point>& probes,
                             double tol = 1e-6);

// Default scale ladder {1e-1, 3e-2, 1e-2}: small enough to expose
// divergence, large enough that the 1/s^2 rescaling of the vertical
// coordinate does not amplify rounding above the convergence tolerance.
std::vector<double> default_pansu_scales();

struct ContactReport {
  double lambda = 0.0;    // fitted multiplier theta(Df T)
  double residual = 0.0;  // max |theta(Df v)| over the horizontal frame
  double jac_det = 0.0;
  double det_identity_gap = 0.0;  // |jac_det - lambda^{n+1}|
};

// Pushes the frame at p forward by central finite differences with step h
// and evaluates the contact form on the images.
ContactReport contact_report(const MapHandle& m, const Point& p,
                             double h = 1e-5);

// Full (2n+1)x(2n+1) Jacobian in flat coordinates by central differences.
MatrixXd fd_jacobian(const MapHandle& m, const Point& p, double h = 1e-5);
MatrixXd fd_jacobian(const std::function<Point(const Point&)>& m,
                     const Point& p, double h = 1e-5);

struct ScalingTable {
  std::vector<std::pair<double, double>> rows;  // (s, ratio)
  bool truncated = false;  // a sample left the domain of the map
};

// Metric difference quotient table: for each s,
//   ratio(s) = d_K(m(p), m(p * delta_s q)) / d_K(p, p * delta_s q).
// Bounded for maps with a homomorphic derivative; grows like s^{-1/2} when
// the horizontal bundle is not preserved at p.
ScalingTable scaling_diagnostic(const MapHandle& m, const Point& p,
                                const Point& q_horizontal,
                                const std::vector<double>& scales);

// Least-squares slope of log(ratio) against log(s).
double loglog_slope(const std::vector<std::pair<double, double>>& rows);

// Log-spaced scale ladder [lo, hi] with `count` entries, descending.
std::vector<double> log_spaced_scales(double lo, double hi, int count);

// Random points of gauge norm 1 (Gaussian direction, gauge-normalized by a
// dilation).
std::vector<Point> gauge_sphere_probes(rng::Stream& stream, int n, int count);

}  // namespace heis
