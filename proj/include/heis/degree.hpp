#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heis/core.hpp"
#include "heis/geodesic.hpp"
#include "heis/hom.hpp"
#include "heis/maps.hpp"

namespace heis {

// Search domain for preimages and degree: either the region bounded by the
// geodesic-foliated hypersurface, or a gauge ball.
class DegreeDomain {
 public:
  static DegreeDomain omega(int n);
  static DegreeDomain gauge_ball(Point center, double radius);

  int n() const { return n_; }
  Region contains(const Point& p, double band = 1e-9) const;
  Point sample_boundary(rng::Stream& stream) const;
  // Seed grid for the Newton search. per_dim applies to each flat
  // coordinate; points outside `fraction` of the domain radius are dropped.
  std::vector<Point> seeds(int per_dim, double fraction = 0.9) const;
  // per_dim default scaled by dimension: 9 for n=1, 4 for n=2, 3 beyond.
  int default_per_dim() const;

 private:
  DegreeDomain(int n, std::optional<Point> center, double radius);

  int n_;
  std::optional<Point> center_;  // empty: omega
  double radius_ = 0.0;
};

struct DegreeOptions {
  int per_dim = 0;               // 0: default for the domain dimension
  double seed_fraction = 0.9;
  double root_tol = 1e-9;        // Euclidean residual bound for roots
  double dedupe_radius = 1e-6;   // Euclidean
  double boundary_margin = 1e-3; // min Euclidean distance of target to m(boundary)
  int boundary_samples = 10000;
  double jacobian_min_det = 1e-8;
  double fd_step = 1e-6;
  int max_newton_iter = 60;
  std::uint64_t seed = 42;
};

// All converged, deduplicated Newton roots of m(q) = target inside the
// domain. Throws std::invalid_argument when the target is within
// boundary_margin of the image of the domain boundary.
std::vector<Point> preimages(const MapHandle& m, const Point& target,
                             const DegreeDomain& domain,
                             const DegreeOptions& opts = {});

struct DegreeResult {
  int value = 0;
  bool regular = false;
  std::vector<Point> preimage_points;
  std::vector<int> jacobian_signs;
  std::vector<std::string> diagnostics;
};

// Degree of a smooth catalog map at a regular value: the sum of Jacobian
// determinant signs over the preimages. regular = false (value unset) when
// a preimage Jacobian is near-singular.
DegreeResult degree_smooth(const MapHandle& m, const Point& target,
                           const DegreeDomain& domain,
                           const DegreeOptions& opts = {});

// Straight-line homotopy in the group sense:
//   H(s, q) = A(q) * delta_s[ (A(q))^{-1} * m(q) ],
// with H(0,.) = A and H(1,.) = m.
Point homotopy_eval(const HomogeneousHom& a, const MapHandle& m, double s,
                    const Point& q);

// Min over sampled (s, q) in [0,1] x (gauge sphere of radius r) of the
// gauge distance of H(s,q) from the origin. Positive when m stays closer
// to A than A's injectivity gap on the sphere.
double boundary_gap(const HomogeneousHom& a, const MapHandle& m, double r,
                    int n_samples, std::uint64_t seed = 42);

// Min over sampled gauge-unit q of d_K(A(q), 0); scale-invariant by
// homogeneity. Throws std::invalid_argument for non-injective A; an
// estimate below 1e-10 is reported as 0 to flag likely non-injectivity.
double min_injectivity_constant(const HomogeneousHom& a, int n_samples,
                                std::uint64_t seed = 42);

}  // namespace heis
