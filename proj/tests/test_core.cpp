#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>

#include "heis/core.hpp"
#include "heis/hom.hpp"
#include "heis/verify.hpp"

using namespace heis;

namespace {

Point p1(double x, double y, double t) {
  VectorXd vx(1), vy(1);
  vx << x;
  vy << y;
  return Point(std::move(vx), std::move(vy), t);
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("group law on hand values") {
  // (1,0,0) * (0,1,0): t'' = 2(y.x' - x.y') = 2(0 - 1) = -2
  const Point r = group_mul(p1(1, 0, 0), p1(0, 1, 0));
  CHECK(r.x()[0] == 1.0);
  CHECK(r.y()[0] == 1.0);
  CHECK(r.t() == -2.0);

  // identity element
  const Point p = p1(0.3, -1.2, 0.7);
  CHECK(euclidean_distance(group_mul(p, Point::origin(1)), p) == 0.0);
  CHECK(euclidean_distance(group_mul(Point::origin(1), p), p) == 0.0);
}

TEST_CASE("inverse and involution") {
  const Point p = p1(1, 2, 3);
  const Point inv = group_inv(p);
  CHECK(inv.x()[0] == -1.0);
  CHECK(inv.y()[0] == -2.0);
  CHECK(inv.t() == -3.0);
  CHECK(gauge_norm(group_mul(p, inv)) == 0.0);
  CHECK(gauge_norm(group_mul(inv, p)) == 0.0);
  CHECK(euclidean_distance(group_inv(group_inv(p)), p) == 0.0);
  CHECK(euclidean_distance(group_inv(Point::origin(1)), Point::origin(1)) == 0.0);
}

TEST_CASE("associativity on random triples") {
  const CheckResult r = verify::group_associativity(2, 500, 7, 1e-12);
  CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("dilation") {
  const Point p = p1(1, 0, 1);
  const Point d = dilate(2.0, p);
  CHECK(d.x()[0] == 2.0);
  CHECK(d.y()[0] == 0.0);
  CHECK(d.t() == 4.0);
  CHECK(euclidean_distance(dilate(1.0, p), p) == 0.0);
  CHECK(gauge_norm(dilate(0.0, p)) == 0.0);
  CHECK_THROWS_AS(dilate(-1.0, p), std::invalid_argument);
}

TEST_CASE("gauge distance hand values") {
  CHECK(koranyi_distance(Point::origin(1), p1(3, 4, 0)) ==
        doctest::Approx(5.0).epsilon(1e-14));
  CHECK(koranyi_distance(Point::origin(1), p1(0, 0, 4 * std::numbers::pi)) ==
        doctest::Approx(std::sqrt(4 * std::numbers::pi)).epsilon(1e-14));
  const Point p = p1(0.1, -2.0, 0.4);
  CHECK(koranyi_distance(p, p) == 0.0);
  // agrees with the gauge norm of the group difference by construction
  rng::Stream stream(3, "test.koranyi");
  for (int i = 0; i < 100; ++i) {
    const Point a = random_point(stream, 3), b = random_point(stream, 3);
    CHECK(koranyi_distance(a, b) ==
          doctest::Approx(gauge_norm(group_mul(group_inv(a), b))).epsilon(1e-14));
    CHECK(koranyi_distance(a, b) ==
          doctest::Approx(koranyi_distance(b, a)).epsilon(1e-13));
  }
}

TEST_CASE("metric axioms") {
  CHECK(verify::metric_triangle(1, 2000, 11, 1e-10).status == CheckStatus::pass);
  CHECK(verify::metric_left_invariance(2, 2000, 11, 1e-10).status ==
        CheckStatus::pass);
  CHECK(verify::metric_dilation_homogeneity(1, 2000, 11, 1e-10).status ==
        CheckStatus::pass);
}

TEST_CASE("dimension mismatch is a usage error") {
  const Point a = p1(0, 0, 0);
  const Point b = Point::origin(2);
  CHECK_THROWS_AS(group_mul(a, b), std::invalid_argument);
  CHECK_THROWS_AS(koranyi_distance(a, b), std::invalid_argument);
}

TEST_CASE("contact form and frame") {
  // at the origin the position terms vanish
  TangentVector v{Point::origin(2), VectorXd::Ones(2), VectorXd::Ones(2), 0.7};
  CHECK(contact_form(v) == 0.7);
  // vertical vector
  TangentVector w{p1(0.4, -0.3, 2.0), VectorXd::Zero(1), VectorXd::Zero(1), 1.0};
  CHECK(contact_form(w) == 1.0);

  const auto frame = frame_vectors(p1(1, 1, 0));
  REQUIRE(frame.size() == 3);
  CHECK(frame[0].dt == 2.0);   // X_1 = d/dx + 2y d/dt at y=1
  CHECK(frame[1].dt == -2.0);  // Y_1 = d/dy - 2x d/dt at x=1
  CHECK(frame[2].dt == 1.0);

  // the horizontal frame lies in the kernel at random points
  rng::Stream stream(5, "test.frame");
  for (int i = 0; i < 200; ++i) {
    const Point p = random_point(stream, 3);
    const auto fr = frame_vectors(p);
    for (int k = 0; k < 6; ++k) CHECK(contact_form(fr[k]) == 0.0);
    CHECK(contact_form(fr[6]) == 1.0);
  }

  // standard basis at the origin
  const auto origin_frame = frame_vectors(Point::origin(1));
  CHECK(origin_frame[0].dx[0] == 1.0);
  CHECK(origin_frame[0].dt == 0.0);
  CHECK(origin_frame[1].dy[0] == 1.0);
  CHECK(origin_frame[1].dt == 0.0);
}

TEST_CASE("homogeneous homomorphism basics") {
  rng::Stream stream(1, "test.hom");
  const auto id = HomogeneousHom::identity(2);
  const Point p = random_point(stream, 2);
  CHECK(euclidean_distance(id.apply(p), p) == 0.0);

  const auto dil = HomogeneousHom::dilation_hom(1, 2.0);
  const Point q = p1(1, 0, 1);
  CHECK(euclidean_distance(dil.apply(q), dilate(2.0, q)) == 0.0);

  const auto refl = HomogeneousHom::reflection_hom(1);
  const Point r = refl.apply(p1(1, 2, 3));
  CHECK(r.x()[0] == -1.0);
  CHECK(r.y()[0] == 2.0);
  CHECK(r.t() == -3.0);

  CHECK_THROWS_AS(id.apply(p1(0, 0, 0)), std::invalid_argument);
}

TEST_CASE("homomorphism commutes with dilations and products") {
  rng::Stream stream(9, "test.hom_props");
  const HomogeneousHom hom = verify::random_test_hom(2, stream);
  for (int i = 0; i < 1000; ++i) {
    const Point p = random_point(stream, 2), q = random_point(stream, 2);
    const double s = stream.uniform(0.0, 2.0);
    CHECK(euclidean_distance(hom.apply(dilate(s, p)), dilate(s, hom.apply(p))) <=
          1e-12 * (1.0 + hom.apply(p).flat().cwiseAbs().maxCoeff()));
    const Point lhs = hom.apply(group_mul(p, q));
    const Point rhs = group_mul(hom.apply(p), hom.apply(q));
    CHECK(euclidean_distance(lhs, rhs) <= 1e-10 * (1.0 + lhs.flat().norm()));
  }
}

TEST_CASE("matrix identity is equivalent to the product law, by brute force") {
  rng::Stream stream(23, "test.hom_equivalence");
  // exact homomorphisms of several shapes: both defects vanish
  std::vector<HomogeneousHom> good;
  good.push_back(HomogeneousHom::identity(2));
  good.push_back(HomogeneousHom::dilation_hom(2, 0.7));
  good.push_back(HomogeneousHom::reflection_hom(2));
  for (int i = 0; i < 8; ++i)
    good.push_back(verify::random_test_hom(2, stream, stream.uniform(0.5, 2.0)));
  for (int i = 0; i < 4; ++i) {
    // lambda < 0 family: reflection composed with a symplectic-type map
    const HomogeneousHom s = verify::random_test_hom(2, stream);
    const MatrixXd m = HomogeneousHom::reflection_hom(2).linear() * s.linear();
    good.push_back(HomogeneousHom::unchecked(m, -1.0));
  }
  for (const auto& hom : good) {
    CHECK(hom.structure_defect() <= 1e-12);
    CHECK(hom.homomorphism_defect(200, 77) <= 1e-12);
  }

  // perturbations break the identity and the product law together
  for (const auto& hom : good) {
    MatrixXd m = hom.linear();
    m(0, 1) += 0.01;
    const auto bad = HomogeneousHom::unchecked(m, hom.vertical());
    CHECK(bad.structure_defect() > 1e-4);
    CHECK(bad.homomorphism_defect(200, 78) > 1e-5);
    CHECK_THROWS_AS(HomogeneousHom::checked(m, hom.vertical()),
                    std::invalid_argument);
  }

  // agreement of the two predicates on arbitrary random matrices
  for (int i = 0; i < 50; ++i) {
    MatrixXd m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = stream.normal();
    const double lambda = stream.normal();
    const auto cand = HomogeneousHom::unchecked(m, lambda);
    const bool by_matrix = cand.structure_defect() <= 1e-8;
    const bool by_products = cand.homomorphism_defect(200, 79) <= 1e-8;
    CHECK(by_matrix == by_products);
  }
}

TEST_CASE("hom jacobian is block diagonal with det lambda^{n+1}") {
  rng::Stream stream(31, "test.hom_jac");
  for (int n : {1, 2, 3}) {
    const HomogeneousHom hom = verify::random_test_hom(n, stream, 1.3);
    const MatrixXd j = hom.jacobian();
    CHECK(j.rows() == 2 * n + 1);
    CHECK(j.determinant() ==
          doctest::Approx(std::pow(hom.vertical(), n + 1)).epsilon(1e-10));
  }
}

TEST_CASE("checked factory accepts valid homs and rejects bad lambda") {
  CHECK_NOTHROW(HomogeneousHom::checked(2.0 * MatrixXd::Identity(4, 4), 4.0));
  CHECK_THROWS_AS(HomogeneousHom::checked(2.0 * MatrixXd::Identity(4, 4), 2.0),
                  std::invalid_argument);
}

TEST_CASE("deterministic streams") {
  rng::Stream a(42, "stream.name");
  rng::Stream b(42, "stream.name");
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  rng::Stream c(42, "stream.other");
  bool differs = false;
  for (int i = 0; i < 10; ++i)
    if (rng::Stream(42, "stream.name").substream(1).next_u64() !=
        rng::Stream(42, "stream.name").substream(2).next_u64())
      differs = true;
  CHECK(differs);
  CHECK(c.next_u64() != rng::Stream(42, "stream.name").next_u64());
  // uniform01 stays in [0, 1)
  rng::Stream d(7, "stream.range");
  for (int i = 0; i < 1000; ++i) {
    const double u = d.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

}  // TEST_SUITE
