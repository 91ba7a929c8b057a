#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heis/geodesic.hpp"
#include "heis/maps.hpp"

namespace heis {

// Closed form of the gauge distance between two points of the hypersurface
// at the same arc parameter s:
//   (2 - 2 cos s)^{1/2} ((|a-a'|^2 + |b-b'|^2)^2 + 4 |a.b' - b.a'|^2)^{1/4}.
// Invariant under (a, a') -> (-a, -a'), which is what makes the geodesic
// interchange a same-height isometry.
double closed_form_same_height(double s, const SphereParam& u,
                               const SphereParam& v);

struct ScanReport {
  std::int64_t n_pairs = 0;
  double max_ratio = 0.0;
  double p95_ratio = 0.0;
  GeodesicParam argmax_a, argmax_b;
  std::uint64_t seed = 0;
  std::string metric;
  std::string notes;
};

// One sampled pair of a ratio scan, for CSV dumps.
struct PairSample {
  GeodesicParam a, b;
  double d_source = 0.0;
  double d_image = 0.0;
  double ratio = 0.0;
};

// Max relative gap |d_K(f p, f q) - d_K(p, q)| / (1 + d_K(p, q)) over
// seeded same-height pairs of the geodesic interchange.
ScanReport same_height_isometry_check(int n, int n_pairs, std::uint64_t seed,
                                      double s_lo = 1e-3,
                                      double s_hi = kTwoPi - 1e-3);

// Ratio scan d_K(m(p), m(p')) / d_K(p, p') over seeded pairs on the
// hypersurface. The geodesic interchange is evaluated in chart coordinates
// (exact at the poles); other maps are evaluated on the ambient points.
// Pairs default to s away from the poles where the chart inversion is
// ill-conditioned. Coincident pairs are resampled (noted in the report).
ScanReport lipschitz_scan(const MapHandle& m, int n_pairs, std::uint64_t seed,
                          double s_lo = 1e-3, double s_hi = kTwoPi - 1e-3,
                          std::vector<PairSample>* dump = nullptr);

struct TriangleBounds {
  GeodesicParam q;       // same geodesic as p', same height as p
  double lhs = 0.0;      // d_K(f p, f p')
  double d_fp_fq = 0.0;  // same-height leg, equals d_K(p, q)
  double d_fq_fpp = 0.0; // along-geodesic leg
  double d_p_q = 0.0;
  double d_p_pp = 0.0;
};

// Evaluates the legs p -> q -> p' of the same-height-plus-geodesic
// decomposition for the geodesic interchange in the gauge metric.
TriangleBounds triangle_decomposition(const GeodesicParam& p,
                                      const GeodesicParam& p_prime);

}  // namespace heis
