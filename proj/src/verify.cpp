#include "heis/verify.hpp"

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <sstream>

namespace heis::verify {

namespace {

double rel_gap(double observed, double reference) {
  return std::abs(observed - reference) / (1.0 + std::abs(reference));
}

Point pinned_scaling_point(int n) {
  VectorXd x = VectorXd::Zero(n), y = VectorXd::Zero(n);
  x[0] = 0.6;
  y[0] = 0.8;
  return Point(std::move(x), std::move(y), kTwoPi);
}

Point horizontal_probe(int n) {
  VectorXd x = VectorXd::Zero(n);
  x[0] = 1.0;
  return Point(std::move(x), VectorXd::Zero(n), 0.0);
}

MapHandle vertical_shear(int n) {
  // linear but not contact: theta is displaced by dx_1 everywhere
  return MapHandle::custom(n, "vertical_shear", [](const Point& p) {
    return Point(p.x(), p.y(), p.t() + p.x()[0]);
  });
}

}  // namespace

HomogeneousHom random_test_hom(int n, rng::Stream& stream, double r) {
  while (true) {
    MatrixXd a = MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) += 0.25 * stream.normal();
    if (std::abs(a.determinant()) < 0.3) continue;
    MatrixXd m = MatrixXd::Zero(2 * n, 2 * n);
    m.topLeftCorner(n, n) = r * a;
    m.bottomRightCorner(n, n) = r * a.transpose().inverse();
    return HomogeneousHom::checked(std::move(m), r * r);
  }
}

CheckResult metric_triangle(int n, int samples, std::uint64_t seed, double tol) {
  rng::Stream stream(seed, "verify.metric_triangle");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Point p = random_point(stream, n), q = random_point(stream, n),
                r = random_point(stream, n);
    const double lhs = koranyi_distance(p, r);
    const double rhs = koranyi_distance(p, q) + koranyi_distance(q, r);
    worst = std::max(worst, (lhs - rhs) / (1.0 + lhs));
  }
  return check_upper("metric.triangle", worst, tol,
                     "max relative triangle violation");
}

CheckResult metric_left_invariance(int n, int samples, std::uint64_t seed,
                                   double tol) {
  rng::Stream stream(seed, "verify.metric_left_invariance");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Point g = random_point(stream, n), p = random_point(stream, n),
                q = random_point(stream, n);
    worst = std::max(worst,
                     rel_gap(koranyi_distance(group_mul(g, p), group_mul(g, q)),
                             koranyi_distance(p, q)));
  }
  return check_upper("metric.left_invariance", worst, tol,
                     "max relative gap d_K(g p, g q) vs d_K(p, q)");
}

CheckResult metric_dilation_homogeneity(int n, int samples, std::uint64_t seed,
                                        double tol) {
  rng::Stream stream(seed, "verify.metric_dilation");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Point p = random_point(stream, n), q = random_point(stream, n);
    const double s = stream.uniform(0.1, 3.0);
    worst = std::max(worst, rel_gap(koranyi_distance(dilate(s, p), dilate(s, q)),
                                    s * koranyi_distance(p, q)));
  }
  return check_upper("metric.dilation_homogeneity", worst, tol,
                     "max relative gap d_K(delta_s p, delta_s q) vs s d_K(p, q)");
}

CheckResult group_associativity(int n, int samples, std::uint64_t seed,
                                double tol) {
  rng::Stream stream(seed, "verify.associativity");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Point p = random_point(stream, n), q = random_point(stream, n),
                r = random_point(stream, n);
    const Point lhs = group_mul(group_mul(p, q), r);
    const Point rhs = group_mul(p, group_mul(q, r));
    const double scale = 1.0 + lhs.flat().cwiseAbs().maxCoeff();
    worst = std::max(worst,
                     (lhs.flat() - rhs.flat()).cwiseAbs().maxCoeff() / scale);
  }
  return check_upper("group.associativity", worst, tol,
                     "max relative coordinate gap (p q) r vs p (q r)");
}

CheckResult frame_kernel(int n, int samples, std::uint64_t seed, double tol) {
  rng::Stream stream(seed, "verify.frame_kernel");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Point p = random_point(stream, n);
    const auto frame = frame_vectors(p);
    for (int k = 0; k < 2 * n; ++k)
      worst = std::max(worst, std::abs(contact_form(frame[k])));
    worst = std::max(worst, std::abs(contact_form(frame[2 * n]) - 1.0));
  }
  return check_upper("contact.frame_kernel", worst, tol,
                     "max |theta(X_i)|, |theta(Y_i)| and |theta(T) - 1|");
}

CheckResult phi_roundtrip(int samples, std::uint64_t seed, double tol) {
  rng::Stream stream(seed, "verify.phi_roundtrip");
  double worst = 0.0;
  // The derivative 2(1 - cos s) vanishes quadratically at the endpoints, so
  // the forward evaluation's rounding (~1e-15 in z) is amplified by 1/phi'
  // there; the s-space roundtrip is measured on a guarded range, the
  // z-residual on the full range.
  for (int i = 0; i < samples; ++i) {
    const double s = stream.uniform(0.05, kTwoPi - 0.05);
    worst = std::max(worst, std::abs(phi_height_inverse(phi_height(s)) - s));
  }
  double worst_residual =
      std::max(phi_height_inverse(0.0), kTwoPi - phi_height_inverse(kFourPi));
  for (int i = 0; i < samples; ++i) {
    const double z = stream.uniform(0.0, kFourPi);
    worst_residual = std::max(worst_residual,
                              std::abs(phi_height(phi_height_inverse(z)) - z));
  }
  if (worst_residual > 1e-12)
    return check_upper("geodesic.phi_roundtrip", worst_residual, 1e-12,
                       "FULL-RANGE z-residual exceeded its bound");
  return check_upper("geodesic.phi_roundtrip", worst, tol,
                     "max |phi^{-1}(phi(s)) - s|, plus full-range z-residual <= 1e-12");
}

CheckResult chart_roundtrip(int n, int samples, std::uint64_t seed, double tol) {
  rng::Stream stream(seed, "verify.chart_roundtrip");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const GeodesicParam g{sample_sphere(stream, n), stream.uniform(0.1, kTwoPi - 0.1)};
    const Point p = geodesic_point(g);
    const Point back = geodesic_point(geodesic_invert(p).param);
    worst = std::max(worst, euclidean_distance(p, back));
  }
  return check_upper("geodesic.chart_roundtrip", worst, tol,
                     "max Euclidean roundtrip error of the chart inversion");
}

CheckResult slice_radius_identity(int n, int samples, std::uint64_t seed,
                                  double tol) {
  rng::Stream stream(seed, "verify.slice_radius");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const GeodesicParam g{sample_sphere(stream, n), stream.uniform(0.0, kTwoPi)};
    const Point p = geodesic_point(g);
    const double r = std::sqrt(p.x().squaredNorm() + p.y().squaredNorm());
    worst = std::max(worst, std::abs(r - slice_radius(g.s)));
  }
  return check_upper("geodesic.slice_radius", worst, tol,
                     "max | |(x,y)| - sqrt(2 - 2 cos s) | on the chart");
}

CheckResult cc_endpoint(int n) {
  rng::Stream stream(1, "verify.cc_endpoint");
  const GeodesicParam far{sample_sphere(stream, n), kTwoPi};
  return check_value("geodesic.cc_pole_distance",
                     cc_distance_from_origin_on_H(far), kTwoPi, 0.0,
                     "arc length to the far pole, exact");
}

CheckResult extension_restriction(int n, int samples, std::uint64_t seed,
                                  double tol) {
  rng::Stream stream(seed, "verify.extension_restriction");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const GeodesicParam g{sample_sphere(stream, n),
                          stream.uniform(1e-3, kTwoPi - 1e-3)};
    const Point p = geodesic_point(g);
    const Point via_chart = geodesic_point(boundary_f_param(g));
    worst = std::max(worst, euclidean_distance(extension_F(p), via_chart));
  }
  return check_upper("maps.extension_restriction", worst, tol,
                     "max Euclidean gap of the extension against the boundary map");
}

CheckResult boundary_involution(int n, int samples, std::uint64_t seed,
                                double tol) {
  rng::Stream stream(seed, "verify.involution");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const GeodesicParam g{sample_sphere(stream, n),
                          stream.uniform(1e-3, kTwoPi - 1e-3)};
    const Point p = geodesic_point(g);
    worst = std::max(worst, euclidean_distance(boundary_f(boundary_f(p)), p));
  }
  return check_upper("maps.involution", worst, tol,
                     "max Euclidean gap of f(f(p)) vs p on the hypersurface");
}

CheckResult slice_orthogonality(int n, int samples, std::uint64_t seed,
                                double tol) {
  rng::Stream stream(seed, "verify.slice_orthogonality");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Point p = sample_omega_interior(stream, n, 0.05, 0.95, 0.05,
                                          kTwoPi - 0.05);
    for (const Point& image : {extension_F(p), extension_F_alt(p)}) {
      const double before = p.xy().norm(), after = image.xy().norm();
      worst = std::max(worst, std::abs(after - before));
    }
  }
  return check_upper("maps.slice_orthogonality", worst, tol,
                     "max | |(x,y)| change | under both slice reflections");
}

CheckResult same_height_isometry(int n, int samples, std::uint64_t seed,
                                 double tol) {
  const ScanReport report = same_height_isometry_check(n, samples, seed);
  return check_upper("lipschitz.same_height_isometry", report.max_ratio, tol,
                     report.notes);
}

CheckResult closed_form_identity(int n, int samples, std::uint64_t seed,
                                 double tol) {
  rng::Stream stream(seed, "verify.closed_form");
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double s = stream.uniform(1e-3, kTwoPi - 1e-3);
    const SphereParam u = sample_sphere(stream, n), v = sample_sphere(stream, n);
    const double direct = koranyi_distance(geodesic_point(GeodesicParam{u, s}),
                                           geodesic_point(GeodesicParam{v, s}));
    worst = std::max(worst, rel_gap(closed_form_same_height(s, u, v), direct));
  }
  return check_upper("lipschitz.closed_form_identity", worst, tol,
                     "max relative gap closed form vs direct gauge distance");
}

std::vector<CheckResult> lipschitz_stability(int n, int small_pairs,
                                             int large_pairs,
                                             std::uint64_t seed, double factor) {
  const MapHandle f = MapHandle::boundary_reflection(n);
  // identical seed: the small scan samples a prefix of the large one
  const ScanReport small = lipschitz_scan(f, small_pairs, seed);
  const ScanReport large = lipschitz_scan(f, large_pairs, seed);
  std::vector<CheckResult> out;
  out.push_back(check_upper("lipschitz.stability_factor",
                            large.max_ratio / small.max_ratio, factor,
                            "max ratio growth from " +
                                std::to_string(small_pairs) + " to " +
                                std::to_string(large_pairs) + " pairs"));
  out.push_back(info_value("lipschitz.max_ratio", large.max_ratio,
                           "empirical gauge-metric expansion bound, reported only"));
  out.push_back(info_value("lipschitz.p95_ratio", large.p95_ratio));
  return out;
}

std::vector<CheckResult> degree_extension(int n, std::uint64_t seed) {
  DegreeOptions opts;
  opts.seed = seed;
  const Point target(VectorXd::Zero(n), VectorXd::Zero(n), kTwoPi);
  const DegreeDomain domain = DegreeDomain::omega(n);
  const DegreeResult main =
      degree_smooth(MapHandle::extension(n), target, domain, opts);
  const DegreeResult alt =
      degree_smooth(MapHandle::extension_alt(n), target, domain, opts);
  const double expected = n % 2 == 0 ? 1.0 : -1.0;

  std::vector<CheckResult> out;
  out.push_back(check_value("degree.extension_F", main.value, expected, 0.0,
                            main.regular ? "regular value, Jacobian sign sum"
                                         : "NOT regular"));
  out.push_back(check_value("degree.extension_F_alt", alt.value, expected, 0.0,
                            "alternative slice-reflection convention"));
  out.push_back(check_value("degree.preimage_count",
                            static_cast<double>(main.preimage_points.size()),
                            1.0, 0.0, "axis point is the unique preimage"));
  return out;
}

CheckResult degree_hom_ball(int n, std::uint64_t seed) {
  rng::Stream stream(seed, "verify.degree_hom");
  const HomogeneousHom hom = random_test_hom(n, stream);
  DegreeOptions opts;
  opts.seed = seed;
  const DegreeResult result =
      degree_smooth(MapHandle::homomorphism(hom), Point::origin(n),
                    DegreeDomain::gauge_ball(Point::origin(n), 1.0), opts);
  return check_value("degree.hom_unit_ball", result.value, 1.0, 0.0,
                     "injective homogeneous homomorphism at the origin");
}

CheckResult homotopy_endpoints(int n, int samples, std::uint64_t seed) {
  rng::Stream stream(seed, "verify.homotopy_endpoints");
  const HomogeneousHom hom = random_test_hom(n, stream);
  VectorXd cx = VectorXd::Zero(n);
  cx[0] = 1e-4;
  const MapHandle perturbed = MapHandle::composite(
      {MapHandle::homomorphism(hom),
       MapHandle::left_translation(Point(cx, VectorXd::Zero(n), 0.0))});
  double worst0 = 0.0, worst1 = 0.0;
  for (const Point& q : gauge_sphere_probes(stream, n, samples)) {
    worst0 = std::max(worst0, koranyi_distance(homotopy_eval(hom, perturbed, 0.0, q),
                                               hom.apply(q)));
    worst1 = std::max(
        worst1, (homotopy_eval(hom, perturbed, 1.0, q).flat() - perturbed(q).flat())
                    .cwiseAbs()
                    .maxCoeff());
  }
  // the s=0 endpoint is exact in floating point; s=1 reassembles the map
  // through two group operations, so rounding-level gaps remain
  const bool ok = worst0 == 0.0 && worst1 <= 1e-12;
  return CheckResult{"homotopy.endpoints",
                     ok ? CheckStatus::pass : CheckStatus::fail,
                     std::max(worst0, worst1), 0.0, 1e-12,
                     "H(0,.) = A exactly; H(1,.) = m to rounding"};
}

CheckResult boundary_gap_positive(int n, int samples, std::uint64_t seed) {
  rng::Stream stream(seed, "verify.boundary_gap");
  const HomogeneousHom hom = random_test_hom(n, stream);
  const double a = min_injectivity_constant(hom, 2000, seed);
  VectorXd cx = VectorXd::Zero(n);
  cx[0] = 1e-3 * a;
  const MapHandle perturbed = MapHandle::composite(
      {MapHandle::homomorphism(hom),
       MapHandle::left_translation(Point(cx, VectorXd::Zero(n), 0.0))});
  const double gap = boundary_gap(hom, perturbed, 1.0, samples, seed);
  std::ostringstream note;
  note << "perturbation below the injectivity constant a = " << a
       << " keeps the homotopy away from the target";
  return check_lower("degree.boundary_gap", gap, 1e-6, note.str());
}

CheckResult injectivity_scale_invariance(int n, int samples,
                                         std::uint64_t seed, double tol) {
  rng::Stream stream(seed, "verify.injectivity_scale");
  const HomogeneousHom hom = random_test_hom(n, stream);
  const Point origin = Point::origin(n);
  const double s = 0.37;
  double worst = 0.0;
  for (const Point& q : gauge_sphere_probes(stream, n, samples)) {
    const double unit = koranyi_distance(hom.apply(q), origin);
    const double scaled = koranyi_distance(hom.apply(dilate(s, q)), origin);
    worst = std::max(worst, rel_gap(scaled, s * unit));
  }
  return check_upper("degree.injectivity_scale_invariance", worst, tol,
                     "d_K(A(delta_s q), 0) vs s d_K(A(q), 0) on the unit sphere");
}

std::vector<CheckResult> contact_even_reflection(int n, std::uint64_t seed) {
  rng::Stream stream(seed, "verify.contact_even_reflection");
  const MapHandle m = MapHandle::even_reflection_map(n);
  double worst_lambda = 0.0, worst_det = 0.0, worst_res = 0.0;
  const double expected_det = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  for (int i = 0; i < 8; ++i) {
    const ContactReport report = contact_report(m, random_point(stream, n));
    worst_lambda = std::max(worst_lambda, std::abs(report.lambda + 1.0));
    worst_det = std::max(worst_det, std::abs(report.jac_det - expected_det));
    worst_res = std::max(worst_res, report.residual);
  }
  return {check_upper("contact.even_reflection_lambda_gap", worst_lambda, 1e-8,
                      "fitted multiplier vs -1"),
          check_upper("contact.even_reflection_det_gap", worst_det, 1e-6,
                      "Jacobian determinant vs (-1)^{n+1}"),
          check_upper("contact.even_reflection_residual", worst_res, 1e-8,
                      "contact residual of the reflection")};
}

std::vector<CheckResult> contact_dilation(int n, double r, std::uint64_t seed) {
  rng::Stream stream(seed, "verify.contact_dilation");
  const MapHandle m = MapHandle::dilation(n, r);
  double worst_lambda = 0.0, worst_gap = 0.0;
  for (int i = 0; i < 8; ++i) {
    const ContactReport report = contact_report(m, random_point(stream, n));
    worst_lambda = std::max(worst_lambda, std::abs(report.lambda - r * r));
    worst_gap = std::max(worst_gap, report.det_identity_gap);
  }
  return {check_upper("contact.dilation_lambda_gap", worst_lambda, 1e-8,
                      "fitted multiplier vs r^2"),
          check_upper("contact.dilation_det_identity_gap", worst_gap, 1e-6,
                      "|det Df - lambda^{n+1}|")};
}

std::vector<CheckResult> contact_model_maps(int n, int samples,
                                            std::uint64_t seed) {
  rng::Stream stream(seed, "verify.contact_model_maps");
  std::vector<MapHandle> maps;
  maps.push_back(MapHandle::left_translation(random_point(stream, n)));
  maps.push_back(MapHandle::dilation(n, 1.7));
  maps.push_back(MapHandle::homomorphism(random_test_hom(n, stream)));
  maps.push_back(MapHandle::even_reflection_map(n));
  double worst_res = 0.0, worst_gap = 0.0;
  for (const MapHandle& m : maps)
    for (int i = 0; i < samples; ++i) {
      const ContactReport report = contact_report(m, random_point(stream, n));
      worst_res = std::max(worst_res, report.residual);
      worst_gap = std::max(worst_gap, report.det_identity_gap);
    }
  return {check_upper("contact.model_maps_residual", worst_res, 1e-8,
                      "translations, dilations, homomorphisms, reflection"),
          check_upper("contact.model_maps_det_identity_gap", worst_gap, 1e-6,
                      "|det Df - lambda^{n+1}| over the model maps")};
}

CheckResult contact_extension_noncontact(int n, int samples,
                                         std::uint64_t seed) {
  rng::Stream stream(seed, "verify.contact_extension");
  const MapHandle m = MapHandle::extension(n);
  double least = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const ContactReport report =
        contact_report(m, sample_omega_interior(stream, n));
    least = std::min(least, report.residual);
  }
  return check_lower("contact.extension_residual_min", least, 0.1,
                     "horizontal bundle is not preserved at interior points");
}

CheckResult pansu_scale_independence(int n, int samples, std::uint64_t seed,
                                     double tol) {
  rng::Stream stream(seed, "verify.pansu_scale");
  std::vector<MapHandle> maps;
  maps.push_back(MapHandle::dilation(n, 2.0));
  maps.push_back(MapHandle::left_translation(random_point(stream, n, 0.5)));
  maps.push_back(MapHandle::homomorphism(random_test_hom(n, stream)));
  double worst = 0.0;
  for (const MapHandle& m : maps)
    for (int i = 0; i < samples; ++i) {
      const Point p = random_point(stream, n, 0.5);
      const Point q = random_point(stream, n, 0.5);
      const Point coarse = pansu_quotient(m, p, q, 0.5);
      const Point fine = pansu_quotient(m, p, q, 0.05);
      worst = std::max(worst,
                       (coarse.flat() - fine.flat()).cwiseAbs().maxCoeff());
    }
  return check_upper("pansu.scale_independence", worst, tol,
                     "max coordinate gap of quotients at s = 0.5 vs 0.05");
}

CheckResult pansu_hom_convergence(int n, std::uint64_t seed) {
  rng::Stream stream(seed, "verify.pansu_hom");
  std::vector<HomogeneousHom> homs;
  homs.push_back(HomogeneousHom::identity(n));
  homs.push_back(HomogeneousHom::dilation_hom(n, 2.0));
  homs.push_back(HomogeneousHom::reflection_hom(n));
  homs.push_back(random_test_hom(n, stream));
  int converged = 0;
  double worst_fit = 0.0;
  for (const HomogeneousHom& hom : homs) {
    const Point p = random_point(stream, n);
    const auto probes = gauge_sphere_probes(stream, n, 4 * n + 8);
    const PansuEstimate est =
        pansu_estimate(MapHandle::homomorphism(hom), p,
                       default_pansu_scales(), probes);
    if (est.converged) ++converged;
    worst_fit = std::max(
        worst_fit, (est.hom.linear() - hom.linear()).cwiseAbs().maxCoeff());
    worst_fit = std::max(worst_fit, std::abs(est.hom.vertical() - hom.vertical()));
  }
  const bool ok = converged == static_cast<int>(homs.size()) && worst_fit <= 1e-8;
  return CheckResult{"pansu.hom_convergence",
                     ok ? CheckStatus::pass : CheckStatus::fail,
                     static_cast<double>(converged),
                     static_cast<double>(homs.size()), 0.0,
                     "difference quotients recover (M, lambda); max fit gap " +
                         format_double(worst_fit)};
}

CheckResult pansu_extension_divergence(int n, int samples, std::uint64_t seed,
                                       double min_fraction) {
  rng::Stream stream(seed, "verify.pansu_extension");
  const MapHandle m = MapHandle::extension(n);
  int diverged = 0;
  for (int i = 0; i < samples; ++i) {
    const Point p = sample_omega_interior(stream, n);
    const auto probes = gauge_sphere_probes(stream, n, 4 * n + 8);
    // probes scaled down so p * delta_s q stays inside the region
    std::vector<Point> local;
    local.reserve(probes.size());
    for (const Point& q : probes) local.push_back(dilate(0.5, q));
    const PansuEstimate est =
        pansu_estimate(m, p, default_pansu_scales(), local);
    if (!est.converged) ++diverged;
  }
  const double fraction = static_cast<double>(diverged) / samples;
  return check_lower("pansu.extension_divergence_fraction", fraction,
                     min_fraction,
                     "no homomorphic limit at generic interior points");
}

CheckResult scaling_slope_oracle(int n) {
  const auto table = scaling_diagnostic(vertical_shear(n), pinned_scaling_point(n),
                                        horizontal_probe(n),
                                        log_spaced_scales(1e-4, 1e-1, 13));
  return check_value("scaling.oracle_slope", loglog_slope(table.rows), -0.5,
                     0.05, "hand-built vertical shear calibrates the -1/2 law");
}

CheckResult scaling_slope_extension(int n) {
  const auto table = scaling_diagnostic(
      MapHandle::extension(n), pinned_scaling_point(n), horizontal_probe(n),
      log_spaced_scales(1e-4, 1e-1, 13));
  return check_value("scaling.extension_slope", loglog_slope(table.rows), -0.5,
                     0.1, "gauge-metric blow-up rate of the extension map");
}

Report run_verify_all(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const int n = config.n;
  const std::uint64_t seed = config.seed;
  const double tol = config.tol;
  const int scan = config.samples > 0 ? static_cast<int>(config.samples) : 10000;
  const int walk = std::max(100, scan / 10);  // roundtrip-style sample count
  const int points = std::max(20, scan / 100);  // per-point diagnostics

  Report report;
  report.command = "verify-all";
  report.config = config;

  report.add(metric_triangle(n, scan, seed, tol));
  report.add(metric_left_invariance(n, scan, seed, tol));
  report.add(metric_dilation_homogeneity(n, scan, seed, tol));
  report.add(group_associativity(n, scan, seed, std::min(tol, 1e-12)));
  report.add(frame_kernel(n, walk, seed, tol));

  report.add(phi_roundtrip(walk, seed, tol));
  report.add(chart_roundtrip(n, walk, seed, 1e-9));
  report.add(slice_radius_identity(n, walk, seed, 1e-12));
  report.add(cc_endpoint(n));

  report.add(extension_restriction(n, scan, seed, 1e-9));
  report.add(boundary_involution(n, scan, seed, tol));
  report.add(slice_orthogonality(n, walk, seed, 1e-12));

  report.add(same_height_isometry(n, scan, seed, tol));
  report.add(closed_form_identity(n, scan, seed, tol));
  for (auto& r : lipschitz_stability(n, scan, 10 * scan, seed))
    report.add(std::move(r));

  for (auto& r : degree_extension(n, seed)) report.add(std::move(r));
  report.add(degree_hom_ball(n, seed));
  report.add(homotopy_endpoints(n, points, seed));
  report.add(boundary_gap_positive(n, 1000, seed));
  report.add(injectivity_scale_invariance(n, 1000, seed, tol));

  for (auto& r : contact_even_reflection(n, seed)) report.add(std::move(r));
  for (auto& r : contact_dilation(n, 2.0, seed)) report.add(std::move(r));
  for (auto& r : contact_model_maps(n, 4, seed)) report.add(std::move(r));
  report.add(contact_extension_noncontact(n, points, seed));

  report.add(pansu_scale_independence(n, points, seed, 1e-12));
  report.add(pansu_hom_convergence(n, seed));
  report.add(pansu_extension_divergence(n, points, seed));

  report.add(scaling_slope_oracle(n));
  report.add(scaling_slope_extension(n));

  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace heis::verify
