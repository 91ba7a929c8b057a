#include "heis/core.hpp"

#include <cmath>

namespace heis {

namespace {

void require_same_n(const Point& p, const Point& q, const char* op) {
  if (p.n() != q.n())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

Point::Point(VectorXd x, VectorXd y, double t)
    : x_(std::move(x)), y_(std::move(y)), t_(t) {
  if (x_.size() != y_.size() || x_.size() < 1)
    throw std::invalid_argument("Point: x and y must have equal positive length");
  if (!x_.allFinite() || !y_.allFinite() || !std::isfinite(t_))
    throw std::invalid_argument("Point: coordinates must be finite");
}

Point Point::origin(int n) {
  return Point(VectorXd::Zero(n), VectorXd::Zero(n), 0.0);
}

Point Point::from_flat(const VectorXd& flat) {
  const auto len = flat.size();
  if (len < 3 || len % 2 == 0)
    throw std::invalid_argument("Point::from_flat: length must be 2n+1");
  const auto n = (len - 1) / 2;
  return Point(flat.head(n), flat.segment(n, n), flat[len - 1]);
}

VectorXd Point::xy() const {
  VectorXd z(2 * n());
  z << x_, y_;
  return z;
}

VectorXd Point::flat() const {
  VectorXd z(2 * n() + 1);
  z << x_, y_, t_;
  return z;
}

Point group_mul(const Point& p, const Point& q) {
  require_same_n(p, q, "group_mul");
  const double cross = p.y().dot(q.x()) - p.x().dot(q.y());
  return Point(p.x() + q.x(), p.y() + q.y(), p.t() + q.t() + 2.0 * cross);
}

Point group_inv(const Point& p) { return Point(-p.x(), -p.y(), -p.t()); }

Point dilate(double s, const Point& p) {
  if (s < 0.0) throw std::invalid_argument("dilate: scale must be nonnegative");
  return Point(s * p.x(), s * p.y(), s * s * p.t());
}

double gauge_norm(const Point& p) {
  const double h = p.x().squaredNorm() + p.y().squaredNorm();
  return std::pow(h * h + p.t() * p.t(), 0.25);
}

double koranyi_distance(const Point& p, const Point& q) {
  require_same_n(p, q, "koranyi_distance");
  // inlined gauge_norm(group_mul(group_inv(p), q))
  double h = 0.0, cross = 0.0;
  for (int i = 0; i < p.n(); ++i) {
    const double dx = q.x()[i] - p.x()[i];
    const double dy = q.y()[i] - p.y()[i];
    h += dx * dx + dy * dy;
    cross += p.x()[i] * q.y()[i] - p.y()[i] * q.x()[i];
  }
  const double v = q.t() - p.t() + 2.0 * cross;
  return std::pow(h * h + v * v, 0.25);
}

double euclidean_distance(const Point& p, const Point& q) {
  require_same_n(p, q, "euclidean_distance");
  return (p.flat() - q.flat()).norm();
}

double contact_form(const TangentVector& v) {
  if (v.dx.size() != v.base.n() || v.dy.size() != v.base.n())
    throw std::invalid_argument("contact_form: dimension mismatch");
  return v.dt - 2.0 * (v.base.y().dot(v.dx) - v.base.x().dot(v.dy));
}

std::vector<TangentVector> frame_vectors(const Point& p) {
  const int n = p.n();
  std::vector<TangentVector> frame;
  frame.reserve(2 * n + 1);
  for (int i = 0; i < n; ++i) {
    TangentVector xi{p, VectorXd::Zero(n), VectorXd::Zero(n), 2.0 * p.y()[i]};
    xi.dx[i] = 1.0;
    frame.push_back(std::move(xi));
  }
  for (int i = 0; i < n; ++i) {
    TangentVector yi{p, VectorXd::Zero(n), VectorXd::Zero(n), -2.0 * p.x()[i]};
    yi.dy[i] = 1.0;
    frame.push_back(std::move(yi));
  }
  frame.push_back(TangentVector{p, VectorXd::Zero(n), VectorXd::Zero(n), 1.0});
  return frame;
}

Point random_point(rng::Stream& stream, int n, double scale) {
  return Point(scale * stream.gaussian(n), scale * stream.gaussian(n),
               scale * stream.normal());
}

}  // namespace heis
