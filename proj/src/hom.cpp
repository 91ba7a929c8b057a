#include "heis/hom.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace heis {

HomogeneousHom::HomogeneousHom(MatrixXd m, double lambda)
    : m_(std::move(m)), lambda_(lambda) {
  if (m_.rows() != m_.cols() || m_.rows() < 2 || m_.rows() % 2 != 0)
    throw std::invalid_argument("HomogeneousHom: M must be 2n x 2n");
  if (!m_.allFinite() || !std::isfinite(lambda_))
    throw std::invalid_argument("HomogeneousHom: entries must be finite");
}

HomogeneousHom HomogeneousHom::unchecked(MatrixXd m, double lambda) {
  return HomogeneousHom(std::move(m), lambda);
}

HomogeneousHom HomogeneousHom::checked(MatrixXd m, double lambda, double tol,
                                       int trials, std::uint64_t seed) {
  HomogeneousHom hom(std::move(m), lambda);
  const double defect = hom.homomorphism_defect(trials, seed);
  if (defect > tol)
    throw std::invalid_argument(
        "HomogeneousHom::checked: product law violated, defect " +
        std::to_string(defect));
  return hom;
}

HomogeneousHom HomogeneousHom::identity(int n) {
  return HomogeneousHom(MatrixXd::Identity(2 * n, 2 * n), 1.0);
}

HomogeneousHom HomogeneousHom::dilation_hom(int n, double r) {
  return HomogeneousHom(r * MatrixXd::Identity(2 * n, 2 * n), r * r);
}

HomogeneousHom HomogeneousHom::reflection_hom(int n) {
  MatrixXd m = MatrixXd::Identity(2 * n, 2 * n);
  m.topLeftCorner(n, n) *= -1.0;
  return HomogeneousHom(std::move(m), -1.0);
}

Point HomogeneousHom::apply(const Point& p) const {
  if (p.n() != n())
    throw std::invalid_argument("HomogeneousHom::apply: dimension mismatch");
  const VectorXd z = m_ * p.xy();
  return Point(z.head(n()), z.tail(n()), lambda_ * p.t());
}

MatrixXd HomogeneousHom::jacobian() const {
  const int d = 2 * n() + 1;
  MatrixXd j = MatrixXd::Zero(d, d);
  j.topLeftCorner(2 * n(), 2 * n()) = m_;
  j(d - 1, d - 1) = lambda_;
  return j;
}

MatrixXd HomogeneousHom::skew_form(int n) {
  MatrixXd k = MatrixXd::Zero(2 * n, 2 * n);
  k.topRightCorner(n, n) = -MatrixXd::Identity(n, n);
  k.bottomLeftCorner(n, n) = MatrixXd::Identity(n, n);
  return k;
}

double HomogeneousHom::structure_defect() const {
  const MatrixXd k = skew_form(n());
  return (m_.transpose() * k * m_ - lambda_ * k).cwiseAbs().maxCoeff();
}

double HomogeneousHom::min_singular_value() const {
  Eigen::JacobiSVD<MatrixXd> svd(m_);
  return svd.singularValues().minCoeff();
}

bool HomogeneousHom::injective(double tol) const {
  return min_singular_value() > tol && std::abs(lambda_) > tol;
}

double HomogeneousHom::homomorphism_defect(int trials,
                                           std::uint64_t seed) const {
  rng::Stream stream(seed, "hom.product_check");
  double worst = 0.0;
  for (int k = 0; k < trials; ++k) {
    const Point p = random_point(stream, n());
    const Point q = random_point(stream, n());
    const Point lhs = apply(group_mul(p, q));
    const Point rhs = group_mul(apply(p), apply(q));
    const double scale = 1.0 + lhs.flat().cwiseAbs().maxCoeff();
    const double gap = (lhs.flat() - rhs.flat()).cwiseAbs().maxCoeff();
    worst = std::max(worst, gap / scale);
  }
  return worst;
}

}  // namespace heis
