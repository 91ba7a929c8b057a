#include "heis/differential.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

namespace heis {

Point pansu_quotient(const MapHandle& m, const Point& p, const Point& q,
                     double s) {
  if (s <= 0.0)
    throw std::invalid_argument("pansu_quotient: scale must be positive");
  const Point shifted = group_mul(p, dilate(s, q));
  const Point diff = group_mul(group_inv(m(p)), m(shifted));
  return dilate(1.0 / s, diff);
}

std::vector<double> default_pansu_scales() { return {1e-1, 3e-2, 1e-2}; }

namespace {

// Least-squares fit of quotient values v_j ~ (M z_j, lambda tau_j).
HomogeneousHom fit_hom(const std::vector<Point>& probes,
                       const std::vector<Point>& values) {
  const int n = probes.front().n();
  MatrixXd zzt = MatrixXd::Zero(2 * n, 2 * n);
  MatrixXd vzt = MatrixXd::Zero(2 * n, 2 * n);
  double tau2 = 0.0, tauv = 0.0;
  for (std::size_t j = 0; j < probes.size(); ++j) {
    const VectorXd z = probes[j].xy();
    zzt += z * z.transpose();
    vzt += values[j].xy() * z.transpose();
    tau2 += probes[j].t() * probes[j].t();
    tauv += probes[j].t() * values[j].t();
  }
  const MatrixXd m = zzt.fullPivLu().isInvertible()
                         ? MatrixXd(vzt * zzt.inverse())
                         : MatrixXd::Zero(2 * n, 2 * n);
  const double lambda = tau2 > 0.0 ? tauv / tau2 : 0.0;
  return HomogeneousHom::unchecked(m, lambda);
}

double max_abs_deviation(const Point& a, const Point& b) {
  return (a.flat() - b.flat()).cwiseAbs().maxCoeff();
}

}  // namespace

PansuEstimate pansu_estimate(const MapHandle& m, const Point& p,
                             std::vector<double> scales,
                             const std::vector<Point>& probes, double tol) {
  if (scales.empty() || probes.empty())
    throw std::invalid_argument("pansu_estimate: scales and probes required");
  for (std::size_t k = 0; k + 1 < scales.size(); ++k)
    if (scales[k] <= scales[k + 1])
      throw std::invalid_argument("pansu_estimate: scales must be strictly decreasing");
  if (static_cast<int>(probes.size()) < 2 * p.n() + 1)
    throw std::invalid_argument("pansu_estimate: need at least 2n+1 probes");

  std::vector<std::vector<Point>> quotients(scales.size());
  for (std::size_t k = 0; k < scales.size(); ++k) {
    quotients[k].reserve(probes.size());
    for (const Point& q : probes)
      quotients[k].push_back(pansu_quotient(m, p, q, scales[k]));
  }

  PansuEstimate est{fit_hom(probes, quotients.back()), std::move(scales), {},
                    false, 0.0, ""};
  est.residuals.reserve(est.scales.size());
  for (std::size_t k = 0; k < est.scales.size(); ++k) {
    double r = 0.0;
    for (std::size_t j = 0; j < probes.size(); ++j)
      r = std::max(r, max_abs_deviation(quotients[k][j],
                                        est.hom.apply(probes[j])));
    est.residuals.push_back(r);
  }

  bool non_increasing = true;
  for (std::size_t k = 0; k + 1 < est.residuals.size(); ++k)
    if (est.residuals[k + 1] > est.residuals[k] + tol) non_increasing = false;
  est.converged = non_increasing && est.residuals.back() <= tol;
  est.hom_defect = est.hom.homomorphism_defect(32, 0x70616e73ULL);

  if (!est.converged) {
    double norm_first = 0.0, norm_last = 0.0;
    for (std::size_t j = 0; j < probes.size(); ++j) {
      norm_first = std::max(norm_first, gauge_norm(quotients.front()[j]));
      norm_last = std::max(norm_last, gauge_norm(quotients.back()[j]));
    }
    std::ostringstream out;
    out << "no homomorphic limit: max quotient gauge norm " << norm_first
        << " at s=" << est.scales.front() << " vs " << norm_last
        << " at s=" << est.scales.back();
    est.diagnostics = out.str();
  }
  return est;
}

MatrixXd fd_jacobian(const std::function<Point(const Point&)>& m,
                     const Point& p, double h) {
  if (h <= 0.0) throw NumericalError("fd_jacobian: step underflow");
  const int d = 2 * p.n() + 1;
  const VectorXd base = p.flat();
  MatrixXd j(d, d);
  for (int k = 0; k < d; ++k) {
    VectorXd fwd = base, bwd = base;
    fwd[k] += h;
    bwd[k] -= h;
    j.col(k) =
        (m(Point::from_flat(fwd)).flat() - m(Point::from_flat(bwd)).flat()) /
        (2.0 * h);
  }
  if (!j.allFinite()) throw NumericalError("fd_jacobian: non-finite differences");
  return j;
}

MatrixXd fd_jacobian(const MapHandle& m, const Point& p, double h) {
  return fd_jacobian([&m](const Point& q) { return m(q); }, p, h);
}

ContactReport contact_report(const MapHandle& m, const Point& p, double h) {
  const MatrixXd jac = fd_jacobian(m, p, h);
  const Point image = m(p);
  const int n = p.n();

  const auto push = [&](const TangentVector& v) {
    VectorXd flat(2 * n + 1);
    flat << v.dx, v.dy, v.dt;
    const VectorXd w = jac * flat;
    return TangentVector{image, w.head(n), w.segment(n, n), w[2 * n]};
  };

  ContactReport report;
  const auto frame = frame_vectors(p);
  for (int i = 0; i < 2 * n; ++i)
    report.residual = std::max(report.residual,
                               std::abs(contact_form(push(frame[i]))));
  report.lambda = contact_form(push(frame[2 * n]));
  report.jac_det = jac.determinant();
  report.det_identity_gap =
      std::abs(report.jac_det - std::pow(report.lambda, n + 1));
  return report;
}

ScalingTable scaling_diagnostic(const MapHandle& m, const Point& p,
                                const Point& q_horizontal,
                                const std::vector<double>& scales) {
  ScalingTable table;
  const Point image = m(p);
  for (const double s : scales) {
    const Point shifted = group_mul(p, dilate(s, q_horizontal));
    Point shifted_image = Point::origin(p.n());
    try {
      shifted_image = m(shifted);
    } catch (const DomainError&) {
      table.truncated = true;
      break;
    }
    const double denom = koranyi_distance(p, shifted);
    if (denom <= 0.0) continue;
    table.rows.emplace_back(s, koranyi_distance(image, shifted_image) / denom);
  }
  return table;
}

double loglog_slope(const std::vector<std::pair<double, double>>& rows) {
  if (rows.size() < 2)
    throw std::invalid_argument("loglog_slope: need at least two rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [s, ratio] : rows) {
    const double lx = std::log(s), ly = std::log(ratio);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double count = static_cast<double>(rows.size());
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

std::vector<double> log_spaced_scales(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2)
    throw std::invalid_argument("log_spaced_scales: bad range");
  std::vector<double> scales(count);
  const double step = (std::log(hi) - std::log(lo)) / (count - 1);
  for (int k = 0; k < count; ++k)
    scales[k] = std::exp(std::log(hi) - k * step);  // descending
  return scales;
}

std::vector<Point> gauge_sphere_probes(rng::Stream& stream, int n, int count) {
  std::vector<Point> probes;
  probes.reserve(count);
  while (static_cast<int>(probes.size()) < count) {
    const Point w = random_point(stream, n);
    const double norm = gauge_norm(w);
    if (norm <= 1e-9) continue;
    probes.push_back(dilate(1.0 / norm, w));
  }
  return probes;
}

}  // namespace heis
