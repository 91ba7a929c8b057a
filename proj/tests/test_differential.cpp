#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>

#include "heis/differential.hpp"
#include "heis/verify.hpp"

using namespace heis;

TEST_SUITE("differential") {

TEST_CASE("difference quotients collapse for model maps") {
  rng::Stream stream(2, "test.quotient");
  const Point p = random_point(stream, 2, 0.5);
  const Point q = random_point(stream, 2, 0.5);

  // dilation: quotient is delta_r(q) for every scale
  const MapHandle dil = MapHandle::dilation(2, 2.0);
  for (double s : {1.0, 0.1, 0.01}) {
    const Point quot = pansu_quotient(dil, p, q, s);
    CHECK((quot.flat() - dilate(2.0, q).flat()).cwiseAbs().maxCoeff() <= 1e-11);
  }

  // left translation: quotient is q itself
  const MapHandle trans = MapHandle::left_translation(random_point(stream, 2));
  for (double s : {1.0, 0.1, 0.01}) {
    const Point quot = pansu_quotient(trans, p, q, s);
    CHECK((quot.flat() - q.flat()).cwiseAbs().maxCoeff() <= 1e-11);
  }

  // homomorphism: quotient is A(q)
  const HomogeneousHom hom = verify::random_test_hom(2, stream);
  const MapHandle hm = MapHandle::homomorphism(hom);
  for (double s : {1.0, 0.1, 0.01}) {
    const Point quot = pansu_quotient(hm, p, q, s);
    CHECK((quot.flat() - hom.apply(q).flat()).cwiseAbs().maxCoeff() <= 1e-11);
  }

  CHECK_THROWS_AS(pansu_quotient(dil, p, q, 0.0), std::invalid_argument);
  CHECK(verify::pansu_scale_independence(1, 30, 3, 1e-12).status ==
        CheckStatus::pass);
}

TEST_CASE("estimate recovers homomorphisms") {
  rng::Stream stream(5, "test.estimate");
  const HomogeneousHom hom = verify::random_test_hom(2, stream);
  const Point p = random_point(stream, 2);
  const auto probes = gauge_sphere_probes(stream, 2, 16);
  const PansuEstimate est = pansu_estimate(MapHandle::homomorphism(hom), p,
                                           default_pansu_scales(), probes);
  CHECK(est.converged);
  CHECK(est.residuals.back() <= 1e-10);
  CHECK((est.hom.linear() - hom.linear()).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(est.hom.vertical() == doctest::Approx(hom.vertical()).epsilon(1e-10));
  CHECK(est.hom_defect <= 1e-10);

  // dilation handle fits M = rI, lambda = r^2
  const PansuEstimate dil_est = pansu_estimate(
      MapHandle::dilation(2, 1.5), p, default_pansu_scales(), probes);
  CHECK(dil_est.converged);
  CHECK((dil_est.hom.linear() - 1.5 * MatrixXd::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() <= 1e-10);
  CHECK(dil_est.hom.vertical() == doctest::Approx(2.25).epsilon(1e-10));

  CHECK(verify::pansu_hom_convergence(1, 42).status == CheckStatus::pass);
}

TEST_CASE("estimate reports divergence for the extension map") {
  rng::Stream stream(7, "test.divergence");
  const MapHandle m = MapHandle::extension(1);
  const Point p = sample_omega_interior(stream, 1);
  auto probes = gauge_sphere_probes(stream, 1, 12);
  for (Point& q : probes) q = dilate(0.5, q);
  const PansuEstimate est = pansu_estimate(m, p, default_pansu_scales(), probes);
  CHECK_FALSE(est.converged);
  CHECK(est.residuals.back() > est.residuals.front());
  CHECK_FALSE(est.diagnostics.empty());
  CHECK(verify::pansu_extension_divergence(1, 50, 11).status ==
        CheckStatus::pass);
}

TEST_CASE("estimate input validation") {
  rng::Stream stream(9, "test.est_validation");
  const auto probes = gauge_sphere_probes(stream, 1, 8);
  const MapHandle m = MapHandle::identity(1);
  const Point p = Point::origin(1);
  CHECK_THROWS_AS(pansu_estimate(m, p, {}, probes), std::invalid_argument);
  CHECK_THROWS_AS(pansu_estimate(m, p, {0.1, 0.2}, probes),
                  std::invalid_argument);
  CHECK_THROWS_AS(pansu_estimate(m, p, {0.1, 0.01}, {probes[0]}),
                  std::invalid_argument);
}

TEST_CASE("finite-difference jacobian") {
  rng::Stream stream(11, "test.fdjac");
  // exact for maps that are affine in flat coordinates
  const Point g = random_point(stream, 2);
  const MapHandle trans = MapHandle::left_translation(g);
  const Point p = random_point(stream, 2);
  const MatrixXd j = fd_jacobian(trans, p, 1e-5);
  CHECK(j.determinant() == doctest::Approx(1.0).epsilon(1e-9));
  // translation tilts only the t row
  CHECK(std::abs(j(0, 1)) <= 1e-10);
  CHECK(j(4, 0) == doctest::Approx(2.0 * g.y()[0]).epsilon(1e-9));
  CHECK(j(4, 2) == doctest::Approx(-2.0 * g.x()[0]).epsilon(1e-9));

  // Richardson consistency: halving the step changes the result at
  // rounding level for smooth maps, quadratically for the extension
  const MapHandle ext = MapHandle::extension(1);
  const Point q = sample_omega_interior(stream, 1);
  const MatrixXd coarse = fd_jacobian(ext, q, 2e-4);
  const MatrixXd fine = fd_jacobian(ext, q, 1e-4);
  const MatrixXd finest = fd_jacobian(ext, q, 5e-5);
  const double gap1 = (coarse - fine).cwiseAbs().maxCoeff();
  const double gap2 = (fine - finest).cwiseAbs().maxCoeff();
  CHECK(gap2 <= 0.5 * gap1);  // second-order stencil

  CHECK_THROWS_AS(fd_jacobian(trans, p, 0.0), NumericalError);
}

TEST_CASE("contact reports for model maps") {
  rng::Stream stream(13, "test.contact");

  // reflection on n = 2: lambda = -1, det = -1
  const ContactReport refl =
      contact_report(MapHandle::even_reflection_map(2), random_point(stream, 2));
  CHECK(refl.lambda == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(refl.jac_det == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(refl.residual <= 1e-8);
  CHECK(refl.det_identity_gap <= 1e-6);

  // dilation: lambda = r^2, det = r^{2n+2}
  for (int n : {1, 2}) {
    const double r = 1.5;
    const ContactReport dil =
        contact_report(MapHandle::dilation(n, r), random_point(stream, n));
    CHECK(dil.lambda == doctest::Approx(r * r).epsilon(1e-9));
    CHECK(dil.jac_det ==
          doctest::Approx(std::pow(r, 2 * n + 2)).epsilon(1e-8));
    CHECK(dil.det_identity_gap <= 1e-6);
  }

  // translations are contact with lambda = 1
  const ContactReport trans = contact_report(
      MapHandle::left_translation(random_point(stream, 1)),
      random_point(stream, 1));
  CHECK(trans.lambda == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(trans.residual <= 1e-8);

  CHECK(verify::contact_model_maps(2, 3, 5)[0].status == CheckStatus::pass);
  CHECK(verify::contact_even_reflection(2, 5)[0].status == CheckStatus::pass);
}

TEST_CASE("extension map is not contact at generic interior points") {
  rng::Stream stream(17, "test.noncontact");
  for (int n : {1, 2, 3}) {
    const MapHandle m = MapHandle::extension(n);
    double least = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 30; ++i) {
      const ContactReport report =
          contact_report(m, sample_omega_interior(stream, n));
      least = std::min(least, report.residual);
      if (n % 2 == 1) {
        CHECK(report.jac_det == doctest::Approx(-1.0).epsilon(1e-6));
        CHECK(report.det_identity_gap > 0.1);
      }
    }
    CHECK(least > 0.1);
  }
  // the residual formula: 4 max(|x_i|,|y_i|) |1 - phi'(t) |z|^2| at the
  // pinned generic point equals 4 * 0.8 * (1 - 1/4) = 2.4
  VectorXd x(1), y(1);
  x << 0.6;
  y << 0.8;
  const ContactReport pinned =
      contact_report(MapHandle::extension(1), Point(x, y, kTwoPi));
  CHECK(pinned.residual == doctest::Approx(2.4).epsilon(1e-6));
}

TEST_CASE("scaling diagnostic") {
  rng::Stream stream(19, "test.scaling");

  // dilation: ratio is exactly r at every scale
  VectorXd ex(1), ey(1);
  ex << 1.0;
  ey << 0.0;
  const Point q_h(ex, ey, 0.0);
  const auto dil_table =
      scaling_diagnostic(MapHandle::dilation(1, 3.0), random_point(stream, 1),
                         q_h, log_spaced_scales(1e-4, 1e-1, 7));
  for (const auto& [s, ratio] : dil_table.rows)
    CHECK(ratio == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_FALSE(dil_table.truncated);

  // injective homomorphism: exactly constant ratio per direction, inside
  // the min/max envelope over the probe sphere
  const HomogeneousHom hom = verify::random_test_hom(1, stream);
  const MapHandle hm = MapHandle::homomorphism(hom);
  const double a = min_injectivity_constant(hom, 3000, 19);
  double upper = 0.0;
  {
    rng::Stream probe_stream(21, "test.scaling_envelope");
    for (const Point& q : gauge_sphere_probes(probe_stream, 1, 3000))
      upper = std::max(upper,
                       koranyi_distance(hom.apply(q), Point::origin(1)));
  }
  for (int i = 0; i < 10; ++i) {
    const Point p = random_point(stream, 1);
    const Point dir = gauge_sphere_probes(stream, 1, 1)[0];
    const auto table = scaling_diagnostic(hm, p, dir,
                                          log_spaced_scales(1e-3, 1e-1, 5));
    for (const auto& [s, ratio] : table.rows) {
      CHECK(ratio >= 0.99 * a);
      CHECK(ratio <= 1.01 * upper);
    }
    const double spread = std::abs(table.rows.front().second -
                                   table.rows.back().second);
    CHECK(spread <= 1e-9);
  }

  // oracle validation on the hand-built shear, then the extension slope
  CHECK(verify::scaling_slope_oracle(1).status == CheckStatus::pass);
  CHECK(verify::scaling_slope_oracle(2).status == CheckStatus::pass);
  CHECK(verify::scaling_slope_extension(1).status == CheckStatus::pass);
  CHECK(verify::scaling_slope_extension(3).status == CheckStatus::pass);

  // domain violations truncate with a flag: big probe leaves the region
  VectorXd zx = VectorXd::Zero(1), zy = VectorXd::Zero(1);
  const Point inside(zx, zy, 0.05);
  const auto truncated = scaling_diagnostic(MapHandle::extension(1), inside,
                                            q_h, {1.0, 0.5, 1e-4});
  CHECK(truncated.truncated);
}

TEST_CASE("loglog slope helper") {
  std::vector<std::pair<double, double>> rows;
  for (double s : log_spaced_scales(1e-3, 1.0, 9))
    rows.emplace_back(s, 2.0 * std::pow(s, -0.5));
  CHECK(loglog_slope(rows) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK_THROWS_AS(loglog_slope({{1.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("gauge sphere probes have unit gauge norm") {
  rng::Stream stream(23, "test.probes");
  for (const Point& q : gauge_sphere_probes(stream, 2, 200))
    CHECK(gauge_norm(q) == doctest::Approx(1.0).epsilon(1e-12));
}

}  // TEST_SUITE
