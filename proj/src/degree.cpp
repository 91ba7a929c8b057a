#include "heis/degree.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "heis/differential.hpp"

namespace heis {

DegreeDomain::DegreeDomain(int n, std::optional<Point> center, double radius)
    : n_(n), center_(std::move(center)), radius_(radius) {}

DegreeDomain DegreeDomain::omega(int n) {
  return DegreeDomain(n, std::nullopt, 0.0);
}

DegreeDomain DegreeDomain::gauge_ball(Point center, double radius) {
  if (radius <= 0.0)
    throw std::invalid_argument("DegreeDomain::gauge_ball: radius must be positive");
  const int n = center.n();
  return DegreeDomain(n, std::move(center), radius);
}

Region DegreeDomain::contains(const Point& p, double band) const {
  if (!center_) return omega_contains(p, band);
  const double d = koranyi_distance(*center_, p);
  if (d > radius_ + band) return Region::outside;
  if (d < radius_ - band) return Region::inside;
  return Region::boundary;
}

Point DegreeDomain::sample_boundary(rng::Stream& stream) const {
  if (!center_) {
    const SphereParam sphere = sample_sphere(stream, n_);
    return geodesic_point(GeodesicParam{sphere, stream.uniform(0.0, kTwoPi)});
  }
  while (true) {
    const Point w = random_point(stream, n_);
    const double norm = gauge_norm(w);
    if (norm > 1e-12) return group_mul(*center_, dilate(radius_ / norm, w));
  }
}

int DegreeDomain::default_per_dim() const {
  const int d = 2 * n_ + 1;
  if (d <= 3) return 9;
  if (d <= 5) return 4;
  return 3;
}

std::vector<Point> DegreeDomain::seeds(int per_dim, double fraction) const {
  if (per_dim < 1) per_dim = default_per_dim();
  const int d = 2 * n_ + 1;
  std::vector<Point> out;
  const auto grid_value = [per_dim](int idx) {
    return per_dim == 1 ? 0.0 : -1.0 + 2.0 * idx / (per_dim - 1);
  };

  std::vector<int> idx(d, 0);
  while (true) {
    VectorXd unit(d);
    for (int k = 0; k < d; ++k) unit[k] = grid_value(idx[k]);

    if (!center_) {
      // cylinder coordinates: t on a grid in (0, 4*pi), (x, y) on a grid
      // scaled to the slice radius at that height
      const double t = kFourPi * (1.0 + unit[d - 1]) / 2.0;
      if (t > 1e-3 && t < kFourPi - 1e-3) {
        const double rho = slice_radius(phi_height_inverse(t)) * fraction;
        VectorXd xy = rho / std::sqrt(2.0 * n_) * unit.head(2 * n_);
        Point p(xy.head(n_), xy.tail(n_), t);
        if (omega_contains(p) == Region::inside) out.push_back(std::move(p));
      }
    } else {
      VectorXd flat(d);
      flat.head(2 * n_) = radius_ * unit.head(2 * n_);
      flat[d - 1] = radius_ * radius_ * unit[d - 1];
      const Point p = group_mul(*center_, Point::from_flat(flat));
      if (koranyi_distance(*center_, p) <= fraction * radius_)
        out.push_back(p);
    }

    int k = 0;
    while (k < d && ++idx[k] == per_dim) idx[k++] = 0;
    if (k == d) break;
  }
  return out;
}

namespace {

// Damped Newton iteration on the flat coordinates; steps that leave the
// domain of the map or fail to reduce the residual are halved.
std::optional<Point> newton_root(const MapHandle& m, const Point& target,
                                 const DegreeDomain& domain, const Point& seed,
                                 const DegreeOptions& opts) {
  const VectorXd target_flat = target.flat();
  Point current = seed;

  const auto residual = [&](const Point& p) -> std::optional<VectorXd> {
    if (domain.contains(p) == Region::outside) return std::nullopt;
    try {
      return VectorXd(m(p).flat() - target_flat);
    } catch (const DomainError&) {
      return std::nullopt;
    } catch (const NumericalError&) {
      return std::nullopt;
    }
  };

  auto res = residual(current);
  if (!res) return std::nullopt;

  for (int iter = 0; iter < opts.max_newton_iter; ++iter) {
    if (res->norm() <= opts.root_tol) return current;
    MatrixXd jac;
    try {
      jac = fd_jacobian(m, current, opts.fd_step);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    Eigen::PartialPivLU<MatrixXd> lu(jac);
    const VectorXd step = lu.solve(*res);
    if (!step.allFinite()) return std::nullopt;

    double damping = 1.0;
    bool advanced = false;
    for (int back = 0; back < 30; ++back) {
      const VectorXd candidate_flat = current.flat() - damping * step;
      Point candidate = Point::from_flat(candidate_flat);
      const auto cand_res = residual(candidate);
      if (cand_res && cand_res->norm() < res->norm()) {
        current = std::move(candidate);
        res = cand_res;
        advanced = true;
        break;
      }
      damping *= 0.5;
    }
    if (!advanced) return std::nullopt;
  }
  return res->norm() <= opts.root_tol ? std::optional<Point>(current)
                                      : std::nullopt;
}

void check_boundary_margin(const MapHandle& m, const Point& target,
                           const DegreeDomain& domain,
                           const DegreeOptions& opts) {
  rng::Stream stream(opts.seed, "degree.boundary_margin");
  double min_dist = std::numeric_limits<double>::infinity();
  for (int i = 0; i < opts.boundary_samples; ++i) {
    const Point bp = domain.sample_boundary(stream);
    try {
      min_dist = std::min(min_dist, euclidean_distance(m(bp), target));
    } catch (const DomainError&) {
      // boundary sample fell just outside the map's domain band; skip
    }
  }
  if (min_dist <= opts.boundary_margin) {
    std::ostringstream msg;
    msg << "degree: target within " << min_dist
        << " of the boundary image (margin " << opts.boundary_margin << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

std::vector<Point> preimages(const MapHandle& m, const Point& target,
                             const DegreeDomain& domain,
                             const DegreeOptions& opts) {
  if (m.n() != domain.n() || target.n() != domain.n())
    throw std::invalid_argument("preimages: dimension mismatch");
  check_boundary_margin(m, target, domain, opts);

  std::vector<Point> roots;
  for (const Point& seed : domain.seeds(opts.per_dim, opts.seed_fraction)) {
    const auto root = newton_root(m, target, domain, seed, opts);
    if (!root) continue;
    if (domain.contains(*root) != Region::inside) continue;
    if (euclidean_distance(m(*root), target) > opts.root_tol) continue;
    bool duplicate = false;
    for (const Point& known : roots)
      if (euclidean_distance(known, *root) <= opts.dedupe_radius) {
        duplicate = true;
        break;
      }
    if (!duplicate) roots.push_back(*root);
  }
  return roots;
}

DegreeResult degree_smooth(const MapHandle& m, const Point& target,
                           const DegreeDomain& domain,
                           const DegreeOptions& opts) {
  DegreeResult result;
  result.preimage_points = preimages(m, target, domain, opts);
  result.regular = true;
  for (const Point& root : result.preimage_points) {
    const double det = fd_jacobian(m, root, opts.fd_step).determinant();
    if (std::abs(det) <= opts.jacobian_min_det) {
      result.regular = false;
      std::ostringstream msg;
      msg << "near-singular Jacobian (det " << det << ") at preimage ("
          << root.flat().transpose() << ")";
      result.diagnostics.push_back(msg.str());
      continue;
    }
    result.jacobian_signs.push_back(det > 0.0 ? 1 : -1);
  }
  if (result.regular)
    for (const int s : result.jacobian_signs) result.value += s;
  return result;
}

Point homotopy_eval(const HomogeneousHom& a, const MapHandle& m, double s,
                    const Point& q) {
  if (s < 0.0 || s > 1.0)
    throw std::invalid_argument("homotopy_eval: s outside [0, 1]");
  const Point aq = a.apply(q);
  // delta_0 collapses the bracket, so s = 0 gives exactly A(q)
  const Point bracket = group_mul(group_inv(aq), m(q));
  return group_mul(aq, dilate(s, bracket));
}

double boundary_gap(const HomogeneousHom& a, const MapHandle& m, double r,
                    int n_samples, std::uint64_t seed) {
  if (!a.injective())
    throw std::invalid_argument("boundary_gap: homomorphism is not injective");
  if (r <= 0.0 || n_samples < 1)
    throw std::invalid_argument("boundary_gap: need r > 0 and n_samples >= 1");
  rng::Stream stream(seed, "degree.boundary_gap");
  double gap = std::numeric_limits<double>::infinity();
  const Point origin = Point::origin(a.n());
  for (int i = 0; i < n_samples; ++i) {
    const double s = stream.uniform01();
    for (const Point& unit : gauge_sphere_probes(stream, a.n(), 1)) {
      const Point q = dilate(r, unit);
      gap = std::min(gap, koranyi_distance(homotopy_eval(a, m, s, q), origin));
    }
  }
  return gap;
}

double min_injectivity_constant(const HomogeneousHom& a, int n_samples,
                                std::uint64_t seed) {
  if (!a.injective())
    throw std::invalid_argument("min_injectivity_constant: not injective");
  if (n_samples < 1)
    throw std::invalid_argument("min_injectivity_constant: n_samples >= 1");
  rng::Stream stream(seed, "degree.injectivity");
  const Point origin = Point::origin(a.n());
  double worst = std::numeric_limits<double>::infinity();
  for (const Point& q : gauge_sphere_probes(stream, a.n(), n_samples))
    worst = std::min(worst, koranyi_distance(a.apply(q), origin));
  return worst < 1e-10 ? 0.0 : worst;
}

}  // namespace heis
