#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

#include "heis/rng.hpp"

namespace heis {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Argument outside the domain of a map (off the hypersurface, outside the
// closed bounded region, ...). Usage errors such as dimension mismatches
// throw std::invalid_argument instead.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite-difference stencil or solver produced non-finite values.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Point (x, y, t) of the n-th Heisenberg group: x, y in R^n, t in R.
class Point {
 public:
  Point(VectorXd x, VectorXd y, double t);
  static Point origin(int n);
  // Unpacks the flat coordinate vector (x_1..x_n, y_1..y_n, t).
  static Point from_flat(const VectorXd& flat);

  int n() const { return static_cast<int>(x_.size()); }
  const VectorXd& x() const { return x_; }
  const VectorXd& y() const { return y_; }
  double t() const { return t_; }

  VectorXd xy() const;    // stacked (x, y) in R^{2n}
  VectorXd flat() const;  // (x, y, t) in R^{2n+1}

 private:
  VectorXd x_, y_;
  double t_;
};

// Group operation (x,y,t)*(x',y',t') = (x+x', y+y', t+t'+2(y.x'-x.y')).
Point group_mul(const Point& p, const Point& q);

// Group inverse (-x, -y, -t).
Point group_inv(const Point& p);

// Homogeneous dilation (sx, sy, s^2 t). s = 0 is the constant-to-origin
// map; negative s is a usage error.
Point dilate(double s, const Point& p);

// Gauge norm ((|x|^2 + |y|^2)^2 + t^2)^{1/4}.
double gauge_norm(const Point& p);

// Koranyi gauge distance d_K(p,q) = gauge_norm(p^{-1} * q). The vertical
// cross term carries the same sign as in the group operation, which is
// exactly what makes left translations d_K-isometries.
double koranyi_distance(const Point& p, const Point& q);

// Euclidean distance of the coordinate vectors; used for point-agreement
// checks where ulp-level vertical differences would be amplified by the
// quartic root of the gauge.
double euclidean_distance(const Point& p, const Point& q);

// Tangent vector (dx, dy, dt) attached at a base point.
struct TangentVector {
  Point base;
  VectorXd dx, dy;
  double dt;
};

// Contact form theta = dt - 2 sum_i (y_i dx_i - x_i dy_i), evaluated at
// v.base.
double contact_form(const TangentVector& v);

// Left-invariant frame (X_1..X_n, Y_1..Y_n, T) at p:
//   X_i = d/dx_i + 2 y_i d/dt,  Y_i = d/dy_i - 2 x_i d/dt,  T = d/dt.
// The first 2n vectors span the kernel of the contact form.
std::vector<TangentVector> frame_vectors(const Point& p);

// Gaussian point with coordinates ~ N(0, scale^2); generic test input.
Point random_point(rng::Stream& stream, int n, double scale = 1.0);

}  // namespace heis
