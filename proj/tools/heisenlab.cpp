// heisenlab: numerical checks for Heisenberg-group geometry.
//
// Subcommands: verify-all, degree, scan-lipschitz, pansu, contact, geodesic.
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 usage or configuration error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "heis/degree.hpp"
#include "heis/differential.hpp"
#include "heis/lipschitz.hpp"
#include "heis/report.hpp"
#include "heis/verify.hpp"

namespace {

using namespace heis;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Point parse_point(const std::string& text, int n) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(std::stod(item));
  if (static_cast<int>(coords.size()) != 2 * n + 1)
    throw std::invalid_argument("target needs 2n+1 comma-separated coordinates");
  return Point::from_flat(Eigen::Map<const VectorXd>(coords.data(), coords.size()));
}

int run_degree(RunConfig config) {
  Timer timer;
  Report report;
  report.command = "degree";
  if (config.map.empty()) config.map = "extension_F";
  if (config.target.empty())
    config.target = "0,0," + format_double(kTwoPi);  // n=1 vertical midpoint
  report.config = config;

  const MapHandle m = MapHandle::parse(config.map, config.n);
  const Point target = parse_point(config.target, config.n);
  DegreeOptions opts;
  opts.seed = config.seed;
  const DegreeDomain domain = DegreeDomain::omega(config.n);

  const DegreeResult result = degree_smooth(m, target, domain, opts);
  report.add(info_value("degree.value", result.value,
                        result.regular ? "Jacobian sign sum over preimages"
                                       : "NOT regular, value unreliable"));
  report.add(info_value("degree.preimage_count",
                        static_cast<double>(result.preimage_points.size())));
  report.add(check_value("degree.regular", result.regular ? 1.0 : 0.0, 1.0, 0.0,
                         "all preimage Jacobians nonsingular"));
  for (std::size_t i = 0; i < result.preimage_points.size(); ++i) {
    std::ostringstream name, note;
    name << "degree.preimage_" << i << "_sign";
    note << "at (" << result.preimage_points[i].flat().transpose() << ")";
    report.add(info_value(name.str(),
                          i < result.jacobian_signs.size()
                              ? result.jacobian_signs[i]
                              : 0.0,
                          note.str()));
  }
  for (const std::string& diag : result.diagnostics)
    report.add(info_value("degree.diagnostic", 0.0, diag));

  // both slice-reflection conventions must agree on the degree
  if (m.kind() == MapHandle::Kind::extension_F) {
    const DegreeResult alt = degree_smooth(MapHandle::extension_alt(config.n),
                                           target, domain, opts);
    report.add(check_value("degree.alt_convention_agrees", alt.value,
                           result.value, 0.0,
                           "alternative slice-reflection convention"));
  }

  report.wall_time = timer.seconds();
  return emit_report(report);
}

int run_scan(RunConfig config) {
  Timer timer;
  Report report;
  report.command = "scan-lipschitz";
  if (config.map.empty()) config.map = "boundary_f";
  report.config = config;
  const int pairs = config.samples > 0 ? static_cast<int>(config.samples) : 10000;

  const MapHandle m = MapHandle::parse(config.map, config.n);
  std::vector<PairSample> dump;
  const bool want_pairs_csv = config.format == "csv";
  const ScanReport scan = lipschitz_scan(m, pairs, config.seed, 1e-3,
                                         kTwoPi - 1e-3,
                                         want_pairs_csv ? &dump : nullptr);
  if (want_pairs_csv) {
    const std::string rendered = pairs_to_csv(dump, config.n);
    if (config.out.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream file(config.out);
      if (!file) throw std::invalid_argument("cannot open " + config.out);
      file << rendered;
    }
    return 0;
  }

  report.add(info_value("scan.max_ratio", scan.max_ratio, scan.notes));
  report.add(info_value("scan.p95_ratio", scan.p95_ratio));
  report.add(info_value("scan.n_pairs", static_cast<double>(scan.n_pairs)));
  // re-evaluating the argmax pair must reproduce the max ratio
  const Point a = geodesic_point(scan.argmax_a), b = geodesic_point(scan.argmax_b);
  const double reproduced =
      m.kind() == MapHandle::Kind::boundary_f
          ? koranyi_distance(geodesic_point(boundary_f_param(scan.argmax_a)),
                             geodesic_point(boundary_f_param(scan.argmax_b)))
                / koranyi_distance(a, b)
          : koranyi_distance(m(a), m(b)) / koranyi_distance(a, b);
  report.add(check_value("scan.argmax_reproduces", reproduced, scan.max_ratio,
                         1e-12 * (1.0 + scan.max_ratio)));

  const ScanReport same = same_height_isometry_check(config.n, pairs, config.seed);
  report.add(check_upper("scan.same_height_isometry_gap", same.max_ratio,
                         config.tol, same.notes));

  report.wall_time = timer.seconds();
  return emit_report(report);
}

int run_pansu(RunConfig config) {
  Timer timer;
  Report report;
  report.command = "pansu";
  if (config.map.empty()) config.map = "dilation(2)";
  report.config = config;

  const MapHandle m = MapHandle::parse(config.map, config.n);
  rng::Stream stream(config.seed, "cli.pansu");
  const bool interior_only = m.kind() == MapHandle::Kind::extension_F ||
                             m.kind() == MapHandle::Kind::extension_F_alt;
  const Point p = config.target.empty()
                      ? (interior_only ? sample_omega_interior(stream, config.n)
                                       : random_point(stream, config.n))
                      : parse_point(config.target, config.n);
  auto probes = gauge_sphere_probes(stream, config.n, 4 * config.n + 8);
  if (interior_only)
    for (Point& q : probes) q = dilate(0.5, q);

  const PansuEstimate est =
      pansu_estimate(m, p, default_pansu_scales(), probes, config.tol * 1e4);
  report.add(info_value("pansu.converged", est.converged ? 1.0 : 0.0,
                        est.diagnostics));
  for (std::size_t k = 0; k < est.scales.size(); ++k)
    report.add(info_value("pansu.residual_s" + format_double(est.scales[k]),
                          est.residuals[k]));
  report.add(info_value("pansu.fitted_lambda", est.hom.vertical()));
  report.add(info_value("pansu.hom_defect", est.hom_defect,
                        "product-law violation of the fitted map"));
  report.wall_time = timer.seconds();
  return emit_report(report);
}

int run_contact(RunConfig config) {
  Timer timer;
  Report report;
  report.command = "contact";
  if (config.map.empty()) config.map = "even_reflection";
  report.config = config;

  const MapHandle m = MapHandle::parse(config.map, config.n);
  rng::Stream stream(config.seed, "cli.contact");
  const bool interior_only = m.kind() == MapHandle::Kind::extension_F ||
                             m.kind() == MapHandle::Kind::extension_F_alt;
  const Point p = config.target.empty()
                      ? (interior_only ? sample_omega_interior(stream, config.n)
                                       : random_point(stream, config.n))
                      : parse_point(config.target, config.n);
  const ContactReport cr = contact_report(m, p);
  report.add(info_value("contact.lambda", cr.lambda));
  report.add(info_value("contact.residual", cr.residual));
  report.add(info_value("contact.jac_det", cr.jac_det));
  report.add(info_value("contact.det_identity_gap", cr.det_identity_gap));

  if (m.kind() == MapHandle::Kind::even_reflection) {
    report.add(check_value("contact.lambda_expected", cr.lambda, -1.0, 1e-8));
    const double expected_det = config.n % 2 == 0 ? -1.0 : 1.0;
    report.add(check_value("contact.det_expected", cr.jac_det, expected_det, 1e-6));
  }
  report.wall_time = timer.seconds();
  return emit_report(report);
}

int run_geodesic(RunConfig config) {
  Timer timer;
  Report report;
  report.command = "geodesic";
  report.config = config;
  const int samples = config.samples > 0 ? static_cast<int>(config.samples) : 1000;
  report.add(verify::phi_roundtrip(samples, config.seed, config.tol));
  report.add(verify::chart_roundtrip(config.n, samples, config.seed, 1e-9));
  report.add(verify::slice_radius_identity(config.n, samples, config.seed, 1e-12));
  report.add(verify::cc_endpoint(config.n));
  report.wall_time = timer.seconds();
  return emit_report(report);
}

int run_verify(RunConfig config) {
  Report report = verify::run_verify_all(config);
  return emit_report(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heisenlab: numerical Heisenberg-group geometry checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_option("--n", config.n, "Heisenberg index n (dimension 2n+1)");
  app.add_option("--seed", config.seed, "root seed for all named random streams");
  app.add_option("--samples", config.samples, "sample count override");
  app.add_option("--tol", config.tol, "relative tolerance for metric checks");
  app.add_option("--format", config.format, "output format: json, csv or text");
  app.add_option("--out", config.out, "write the report to this path");

  auto* verify_cmd = app.add_subcommand("verify-all", "run the full check suite");
  auto* degree_cmd =
      app.add_subcommand("degree", "mapping degree of a catalog map");
  degree_cmd->add_option("--map", config.map, "catalog map name");
  degree_cmd->add_option("--target", config.target,
                         "target point, 2n+1 comma-separated flat coordinates");
  auto* scan_cmd =
      app.add_subcommand("scan-lipschitz", "metric ratio scan on the hypersurface");
  scan_cmd->add_option("--map", config.map, "catalog map name");
  auto* pansu_cmd =
      app.add_subcommand("pansu", "rescaled difference quotient estimate");
  pansu_cmd->add_option("--map", config.map, "catalog map name");
  pansu_cmd->add_option("--point", config.target, "base point (flat coordinates)");
  auto* contact_cmd =
      app.add_subcommand("contact", "contact-form report of a catalog map");
  contact_cmd->add_option("--map", config.map, "catalog map name");
  contact_cmd->add_option("--point", config.target, "base point (flat coordinates)");
  auto* geodesic_cmd =
      app.add_subcommand("geodesic", "chart roundtrip and arc-length checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    config.validate();
    if (verify_cmd->parsed()) return run_verify(config);
    if (degree_cmd->parsed()) return run_degree(config);
    if (scan_cmd->parsed()) return run_scan(config);
    if (pansu_cmd->parsed()) return run_pansu(config);
    if (contact_cmd->parsed()) return run_contact(config);
    if (geodesic_cmd->parsed()) return run_geodesic(config);
    std::cerr << "no subcommand given\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
