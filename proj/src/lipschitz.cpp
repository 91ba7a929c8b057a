#include "heis/lipschitz.hpp"

#include <algorithm>
#include <cmath>

namespace heis {

double closed_form_same_height(double s, const SphereParam& u,
                               const SphereParam& v) {
  if (s < -1e-12 || s > kTwoPi + 1e-12)
    throw std::invalid_argument("closed_form_same_height: s outside [0, 2*pi]");
  if (u.n() != v.n())
    throw std::invalid_argument("closed_form_same_height: dimension mismatch");
  const double da = (u.a - v.a).squaredNorm() + (u.b - v.b).squaredNorm();
  const double cross = u.a.dot(v.b) - u.b.dot(v.a);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::cos(s))) *
         std::pow(da * da + 4.0 * cross * cross, 0.25);
}

namespace {

GeodesicParam sample_param(rng::Stream& stream, int n, double s_lo,
                           double s_hi) {
  return GeodesicParam{sample_sphere(stream, n), stream.uniform(s_lo, s_hi)};
}

double percentile(std::vector<double>& values, double q) {
  if (values.empty()) return 0.0;
  const auto k = static_cast<std::size_t>(q * (values.size() - 1));
  std::nth_element(values.begin(), values.begin() + k, values.end());
  return values[k];
}

}  // namespace

ScanReport same_height_isometry_check(int n, int n_pairs, std::uint64_t seed,
                                      double s_lo, double s_hi) {
  if (n_pairs < 1)
    throw std::invalid_argument("same_height_isometry_check: n_pairs >= 1");
  rng::Stream stream(seed, "lipschitz.same_height");
  ScanReport report;
  report.seed = seed;
  report.metric = "koranyi";
  report.notes = "max relative gap |d_K(f p, f q) - d_K(p, q)| / (1 + d_K(p, q))";
  report.argmax_a = report.argmax_b = sample_param(stream, n, s_lo, s_hi);
  for (int i = 0; i < n_pairs; ++i) {
    const double s = stream.uniform(s_lo, s_hi);
    const GeodesicParam pa{sample_sphere(stream, n), s};
    const GeodesicParam pb{sample_sphere(stream, n), s};
    const double before = koranyi_distance(geodesic_point(pa), geodesic_point(pb));
    const double after =
        koranyi_distance(geodesic_point(boundary_f_param(pa)),
                         geodesic_point(boundary_f_param(pb)));
    const double gap = std::abs(after - before) / (1.0 + before);
    if (gap > report.max_ratio) {
      report.max_ratio = gap;
      report.argmax_a = pa;
      report.argmax_b = pb;
    }
    ++report.n_pairs;
  }
  report.p95_ratio = report.max_ratio;  // gaps are rounding noise; max suffices
  return report;
}

ScanReport lipschitz_scan(const MapHandle& m, int n_pairs, std::uint64_t seed,
                          double s_lo, double s_hi,
                          std::vector<PairSample>* dump) {
  if (n_pairs < 1) throw std::invalid_argument("lipschitz_scan: n_pairs >= 1");
  const int n = m.n();
  const bool parametric = m.kind() == MapHandle::Kind::boundary_f;
  rng::Stream stream(seed, "lipschitz.scan");

  ScanReport report;
  report.seed = seed;
  report.metric = "koranyi";
  report.argmax_a = report.argmax_b = sample_param(stream, n, s_lo, s_hi);
  std::vector<double> ratios;
  ratios.reserve(n_pairs);
  if (dump) dump->reserve(n_pairs);

  int resampled = 0;
  while (report.n_pairs < n_pairs) {
    const GeodesicParam pa = sample_param(stream, n, s_lo, s_hi);
    const GeodesicParam pb = sample_param(stream, n, s_lo, s_hi);
    const Point a = geodesic_point(pa);
    const Point b = geodesic_point(pb);
    const double d_source = koranyi_distance(a, b);
    if (d_source <= 1e-14) {
      ++resampled;
      continue;
    }
    const double d_image =
        parametric
            ? koranyi_distance(geodesic_point(boundary_f_param(pa)),
                               geodesic_point(boundary_f_param(pb)))
            : koranyi_distance(m(a), m(b));
    const double ratio = d_image / d_source;
    ratios.push_back(ratio);
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax_a = pa;
      report.argmax_b = pb;
    }
    if (dump) dump->push_back(PairSample{pa, pb, d_source, d_image, ratio});
    ++report.n_pairs;
  }
  report.p95_ratio = percentile(ratios, 0.95);
  if (resampled > 0)
    report.notes = std::to_string(resampled) + " coincident pairs resampled";
  return report;
}

TriangleBounds triangle_decomposition(const GeodesicParam& p,
                                      const GeodesicParam& p_prime) {
  constexpr double pole_band = 1e-3;
  if (p.s < pole_band || p.s > kTwoPi - pole_band || p_prime.s < pole_band ||
      p_prime.s > kTwoPi - pole_band)
    throw DomainError("triangle_decomposition: pole-adjacent input");

  TriangleBounds bounds{GeodesicParam{p_prime.sphere, p.s}, 0, 0, 0, 0, 0};
  const Point pp = geodesic_point(p);
  const Point ppp = geodesic_point(p_prime);
  const Point q = geodesic_point(bounds.q);
  const Point fp = geodesic_point(boundary_f_param(p));
  const Point fpp = geodesic_point(boundary_f_param(p_prime));
  const Point fq = geodesic_point(boundary_f_param(bounds.q));
  bounds.lhs = koranyi_distance(fp, fpp);
  bounds.d_fp_fq = koranyi_distance(fp, fq);
  bounds.d_fq_fpp = koranyi_distance(fq, fpp);
  bounds.d_p_q = koranyi_distance(pp, q);
  bounds.d_p_pp = koranyi_distance(pp, ppp);
  return bounds;
}

}  // namespace heis
