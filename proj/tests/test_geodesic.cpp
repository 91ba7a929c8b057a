#include <doctest.h>

#include <cmath>

#include "heis/geodesic.hpp"
#include "heis/verify.hpp"

using namespace heis;

namespace {

GeodesicParam gp1(double a, double b, double s) {
  VectorXd va(1), vb(1);
  va << a;
  vb << b;
  return GeodesicParam{SphereParam(va, vb), s};
}

}  // namespace

TEST_SUITE("geodesic") {

TEST_CASE("height profile values") {
  CHECK(phi_height(0.0) == 0.0);
  CHECK(phi_height(kPi) == doctest::Approx(kTwoPi).epsilon(1e-15));
  CHECK(phi_height(kTwoPi) == doctest::Approx(kFourPi).epsilon(1e-15));
  CHECK_THROWS_AS(phi_height(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(phi_height(kTwoPi + 0.1), std::invalid_argument);

  // strictly increasing on a dense grid
  double prev = phi_height(0.0);
  for (int k = 1; k <= 2000; ++k) {
    const double cur = phi_height(kTwoPi * k / 2000);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("height inverse") {
  CHECK(phi_height_inverse(0.0) == 0.0);
  CHECK(phi_height_inverse(kFourPi) == kTwoPi);
  CHECK(phi_height_inverse(kTwoPi) == doctest::Approx(kPi).epsilon(1e-13));
  CHECK_THROWS_AS(phi_height_inverse(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(phi_height_inverse(kFourPi + 0.1), std::invalid_argument);

  // full-range residual in z stays at rounding level
  rng::Stream stream(2, "test.phi_inv");
  for (int i = 0; i < 2000; ++i) {
    const double z = stream.uniform(0.0, kFourPi);
    CHECK(std::abs(phi_height(phi_height_inverse(z)) - z) <= 1e-12);
  }
  CHECK(verify::phi_roundtrip(1000, 42, 1e-10).status == CheckStatus::pass);
}

TEST_CASE("chart values") {
  // s = 0 and s = 2*pi collapse to the poles for every direction
  rng::Stream stream(4, "test.chart");
  for (int i = 0; i < 20; ++i) {
    const SphereParam dir = sample_sphere(stream, 2);
    CHECK(gauge_norm(geodesic_point({dir, 0.0})) == 0.0);
    const Point far = geodesic_point({dir, kTwoPi});
    CHECK(far.xy().norm() <= 1e-15);
    CHECK(far.t() == doctest::Approx(kFourPi).epsilon(1e-15));
  }
  // hand value: sin(pi) = 0, 1 - cos(pi) = 2
  const Point p = geodesic_point(gp1(1, 0, kPi));
  CHECK(p.x()[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(p.x()[0]) < 1e-15);
  CHECK(p.y()[0] == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(p.t() == doctest::Approx(kTwoPi).epsilon(1e-15));
}

TEST_CASE("slice radius matches the chart by brute force") {
  CHECK(slice_radius(0.0) == 0.0);
  CHECK(slice_radius(kPi) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(verify::slice_radius_identity(2, 1000, 13, 1e-12).status ==
        CheckStatus::pass);
}

TEST_CASE("chart inversion") {
  // hand value: the inverse of Phi((1,0), pi) = (0, -2, 2*pi)
  VectorXd x(1), y(1);
  x << 0.0;
  y << -2.0;
  const auto inv = geodesic_invert(Point(x, y, kTwoPi));
  CHECK_FALSE(inv.pole);
  CHECK_FALSE(inv.ill_conditioned);
  CHECK(inv.param.s == doctest::Approx(kPi).epsilon(1e-13));
  CHECK(inv.param.sphere.a[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(inv.param.sphere.b[0]) <= 1e-13);

  // roundtrip over random parameters
  CHECK(verify::chart_roundtrip(1, 1000, 21, 1e-9).status == CheckStatus::pass);
  CHECK(verify::chart_roundtrip(3, 500, 21, 1e-9).status == CheckStatus::pass);

  // poles are flagged with the sphere part left arbitrary
  CHECK(geodesic_invert(Point::origin(2)).pole);
  VectorXd zx = VectorXd::Zero(2), zy = VectorXd::Zero(2);
  CHECK(geodesic_invert(Point(zx, zy, kFourPi)).pole);

  // pole-adjacent points still invert but are flagged
  const GeodesicParam near = {sample_sphere(*new rng::Stream(1, "t"), 1), 1e-7};
  const auto near_inv = geodesic_invert(geodesic_point(near));
  CHECK_FALSE(near_inv.pole);
  CHECK(near_inv.ill_conditioned);
  CHECK(near_inv.param.s == doctest::Approx(1e-7).epsilon(1e-6));

  // off-surface points are rejected
  VectorXd bx(1), by(1);
  bx << 1.0;
  by << 0.0;
  CHECK_THROWS_AS(geodesic_invert(Point(bx, by, 0.0)), DomainError);
  CHECK_THROWS_AS(geodesic_invert(Point(bx, by, -5.0)), DomainError);
}

TEST_CASE("region classification") {
  VectorXd zx(1), zy(1);
  zx << 0.0;
  zy << 0.0;
  CHECK(omega_contains(Point(zx, zy, kTwoPi)) == Region::inside);
  CHECK(omega_contains(Point(zx, zy, -1.0)) == Region::outside);
  CHECK(omega_contains(Point(zx, zy, kFourPi + 1.0)) == Region::outside);
  CHECK(omega_contains(Point::origin(1)) == Region::boundary);  // pole
  CHECK(omega_contains(Point(zx, zy, kFourPi)) == Region::boundary);

  VectorXd bx(1), by(1);
  bx << 5.0;
  by << 0.0;
  CHECK(omega_contains(Point(bx, by, kTwoPi)) == Region::outside);

  // chart points classify as boundary, for any s including near the poles
  rng::Stream stream(17, "test.region");
  for (int i = 0; i < 500; ++i) {
    const GeodesicParam g{sample_sphere(stream, 2),
                          stream.uniform(0.0, kTwoPi)};
    CHECK(omega_contains(geodesic_point(g)) == Region::boundary);
  }
  // interior sampler lands inside
  for (int i = 0; i < 200; ++i)
    CHECK(omega_contains(sample_omega_interior(stream, 1)) == Region::inside);
}

TEST_CASE("arc length along the foliation") {
  CHECK(cc_distance_from_origin_on_H(gp1(1, 0, 0.0)) == 0.0);
  CHECK(cc_distance_from_origin_on_H(gp1(0, 1, kTwoPi)) == kTwoPi);
  // monotone in s
  double prev = -1.0;
  for (int k = 0; k <= 100; ++k) {
    const double d = cc_distance_from_origin_on_H(gp1(1, 0, kTwoPi * k / 100));
    CHECK(d > prev);
    prev = d;
  }
}

TEST_CASE("unit speed along geodesics") {
  // the finite-difference velocity, expressed in the left-invariant frame,
  // has norm 1 in the limit; the gauge difference quotient stays bounded
  rng::Stream stream(19, "test.unit_speed");
  for (int i = 0; i < 50; ++i) {
    const SphereParam dir = sample_sphere(stream, 2);
    const double s = stream.uniform(0.3, kTwoPi - 0.3);
    const double h = 1e-5;
    const Point a = geodesic_point({dir, s});
    const Point b = geodesic_point({dir, s + h});
    const VectorXd vel = (b.flat() - a.flat()) / h;
    const double frame_norm = vel.head(4).norm();
    CHECK(frame_norm == doctest::Approx(1.0).epsilon(1e-4));
    const double gauge_ratio = koranyi_distance(a, b) / h;
    CHECK(gauge_ratio > 0.3);
    CHECK(gauge_ratio < 3.0);
    // the velocity is horizontal: theta vanishes on it in the limit
    const TangentVector v{a, vel.head(2), vel.segment(2, 2), vel[4]};
    CHECK(std::abs(contact_form(v)) <= 1e-4);
  }
}

TEST_CASE("surface sampler determinism and statistics") {
  const auto first = sample_H(99, 1000, 2, 0.5, 5.0);
  const auto second = sample_H(99, 1000, 2, 0.5, 5.0);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].s == second[i].s);
    CHECK((first[i].sphere.a - second[i].sphere.a).norm() == 0.0);
    CHECK((first[i].sphere.b - second[i].sphere.b).norm() == 0.0);
  }
  for (const auto& g : first) {
    CHECK(g.s >= 0.5);
    CHECK(g.s <= 5.0);
    CHECK(std::abs(g.sphere.a.squaredNorm() + g.sphere.b.squaredNorm() - 1.0) <=
          1e-12);
  }
  CHECK_THROWS_AS(sample_H(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_H(1, 10, 1, 2.0, 1.0), std::invalid_argument);

  // the sphere sampler is centered: per-coordinate mean within 3 sigma
  const int n = 2, count = 100000;
  const auto big = sample_H(1234, count, n);
  VectorXd mean = VectorXd::Zero(2 * n);
  for (const auto& g : big) {
    mean.head(n) += g.sphere.a;
    mean.tail(n) += g.sphere.b;
  }
  mean /= count;
  const double sigma = 1.0 / std::sqrt(2.0 * n * count);
  for (int k = 0; k < 2 * n; ++k) CHECK(std::abs(mean[k]) <= 3.0 * sigma);
}

TEST_CASE("sphere param validation") {
  VectorXd a(1), b(1);
  a << 0.6;
  b << 0.8;
  CHECK_NOTHROW(SphereParam(a, b));
  a << 0.7;
  CHECK_THROWS_AS(SphereParam(a, b), std::invalid_argument);
  const SphereParam normalized = SphereParam::normalized(a, b);
  CHECK(std::abs(normalized.a.squaredNorm() + normalized.b.squaredNorm() - 1.0) <=
        1e-15);
}

}  // TEST_SUITE
