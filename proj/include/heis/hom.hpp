#pragma once

#include <cstdint>

#include "heis/core.hpp"

namespace heis {

// Homogeneous group homomorphism (x,y,t) -> (M(x,y), lambda t). Such a map
// commutes with dilations by construction; compatibility with the group
// operation is equivalent to the matrix identity M^T K M = lambda K for the
// skew form K(z,z') = y.x' - x.y' (the equivalence is established by
// brute-force testing in the unit suite). The checked factory validates the
// product law on random pairs before accepting (M, lambda).
class HomogeneousHom {
 public:
  static HomogeneousHom checked(MatrixXd m, double lambda, double tol = 1e-8,
                                int trials = 64,
                                std::uint64_t seed = 0x68656973ULL);
  // Skips validation; for storing fitted candidates that may violate the
  // homomorphism property (exposed through structure_defect()).
  static HomogeneousHom unchecked(MatrixXd m, double lambda);

  static HomogeneousHom identity(int n);
  static HomogeneousHom dilation_hom(int n, double r);  // M = rI, lambda = r^2
  static HomogeneousHom reflection_hom(int n);          // (x,y,t) -> (-x,y,-t)

  int n() const { return static_cast<int>(m_.rows()) / 2; }
  const MatrixXd& linear() const { return m_; }
  double vertical() const { return lambda_; }

  Point apply(const Point& p) const;

  // Constant (2n+1)x(2n+1) Jacobian blockdiag(M, lambda).
  MatrixXd jacobian() const;

  // Max-abs entry of M^T K M - lambda K; zero for exact homomorphisms.
  double structure_defect() const;

  double min_singular_value() const;
  bool injective(double tol = 1e-12) const;

  // Worst relative product-law violation over `trials` random pairs.
  double homomorphism_defect(int trials, std::uint64_t seed) const;

  // Skew form K with z^T K z' = y.x' - x.y' for z = (x, y).
  static MatrixXd skew_form(int n);

 private:
  HomogeneousHom(MatrixXd m, double lambda);

  MatrixXd m_;
  double lambda_;
};

}  // namespace heis
