#include "heis/maps.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace heis {

Eigen::Matrix2d slice_reflection(double s) {
  Eigen::Matrix2d c;
  c << -std::cos(s), std::sin(s), std::sin(s), std::cos(s);
  return c;
}

Eigen::Matrix2d slice_reflection_alt(double s) {
  Eigen::Matrix2d c;
  c << std::cos(s), std::sin(s), std::sin(s), -std::cos(s);
  return c;
}

GeodesicParam boundary_f_param(const GeodesicParam& g) {
  return GeodesicParam{SphereParam(-g.sphere.a, g.sphere.b), g.s};
}

Point boundary_f(const Point& p, double on_h_tol) {
  const GeodesicInverse inv = geodesic_invert(p, on_h_tol);
  if (inv.pole) return p;
  const Point image = geodesic_point(boundary_f_param(inv.param));
  // heights are preserved exactly: reuse the input t rather than the
  // re-evaluated 2(s - sin s)
  return Point(image.x(), image.y(), p.t());
}

namespace {

Point apply_slice_matrix(const Point& p, double band,
                         Eigen::Matrix2d (*matrix)(double)) {
  if (omega_contains(p, band) == Region::outside)
    throw DomainError("extension_F: point outside the closed bounded region");
  if (p.t() <= 0.0) return Point::origin(p.n());
  if (p.t() >= kFourPi)
    return Point(VectorXd::Zero(p.n()), VectorXd::Zero(p.n()), kFourPi);
  const Eigen::Matrix2d c = matrix(phi_height_inverse(p.t()));
  VectorXd x(p.n()), y(p.n());
  for (int i = 0; i < p.n(); ++i) {
    x[i] = c(0, 0) * p.x()[i] + c(0, 1) * p.y()[i];
    y[i] = c(1, 0) * p.x()[i] + c(1, 1) * p.y()[i];
  }
  return Point(std::move(x), std::move(y), p.t());
}

}  // namespace

Point extension_F(const Point& p, double band) {
  return apply_slice_matrix(p, band, slice_reflection);
}

Point extension_F_alt(const Point& p, double band) {
  return apply_slice_matrix(p, band, slice_reflection_alt);
}

Point even_reflection(const Point& p) {
  return Point(-p.x(), p.y(), -p.t());
}

struct MapHandle::Impl {
  Impl(Kind kind_in, int n_in, std::string name_in)
      : kind(kind_in), n(n_in), name(std::move(name_in)) {}

  Kind kind;
  int n;
  std::string name;
  double scale = 1.0;
  std::optional<Point> translation;
  std::optional<HomogeneousHom> hom;
  std::vector<MapHandle> parts;
  std::function<Point(const Point&)> fn;
};

MapHandle::MapHandle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

MapHandle::Kind MapHandle::kind() const { return impl_->kind; }
int MapHandle::n() const { return impl_->n; }
const std::string& MapHandle::name() const { return impl_->name; }
const HomogeneousHom* MapHandle::hom() const {
  return impl_->hom ? &*impl_->hom : nullptr;
}

MapHandle MapHandle::boundary_reflection(int n) {
  return MapHandle(std::make_shared<Impl>(Impl(Kind::boundary_f, n, "boundary_f")));
}

MapHandle MapHandle::extension(int n) {
  return MapHandle(std::make_shared<Impl>(Impl(Kind::extension_F, n, "extension_F")));
}

MapHandle MapHandle::extension_alt(int n) {
  return MapHandle(
      std::make_shared<Impl>(Impl(Kind::extension_F_alt, n, "extension_F_alt")));
}

MapHandle MapHandle::left_translation(Point g) {
  Impl impl{Kind::left_translation, g.n(), "left_translation"};
  impl.translation = std::move(g);
  return MapHandle(std::make_shared<Impl>(std::move(impl)));
}

MapHandle MapHandle::dilation(int n, double s) {
  if (s < 0.0) throw std::invalid_argument("MapHandle::dilation: negative scale");
  std::ostringstream name;
  name << "dilation(" << s << ")";
  Impl impl{Kind::dilation, n, name.str()};
  impl.scale = s;
  return MapHandle(std::make_shared<Impl>(std::move(impl)));
}

MapHandle MapHandle::homomorphism(HomogeneousHom hom) {
  Impl impl{Kind::homomorphism, hom.n(), "homomorphism"};
  impl.hom = std::move(hom);
  return MapHandle(std::make_shared<Impl>(std::move(impl)));
}

MapHandle MapHandle::even_reflection_map(int n) {
  return MapHandle(
      std::make_shared<Impl>(Impl(Kind::even_reflection, n, "even_reflection")));
}

MapHandle MapHandle::composite(std::vector<MapHandle> parts) {
  if (parts.empty())
    throw std::invalid_argument("MapHandle::composite: empty part list");
  const int n = parts.front().n();
  std::string name = "composite(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].n() != n)
      throw std::invalid_argument("MapHandle::composite: dimension mismatch");
    if (i > 0) name += ";";
    name += parts[i].name();
  }
  name += ")";
  Impl impl{Kind::composite, n, std::move(name)};
  impl.parts = std::move(parts);
  return MapHandle(std::make_shared<Impl>(std::move(impl)));
}

MapHandle MapHandle::identity(int n) { return dilation(n, 1.0); }

MapHandle MapHandle::custom(int n, std::string name,
                            std::function<Point(const Point&)> fn) {
  Impl impl{Kind::custom, n, std::move(name)};
  impl.fn = std::move(fn);
  return MapHandle(std::make_shared<Impl>(std::move(impl)));
}

Point MapHandle::operator()(const Point& p) const {
  if (p.n() != impl_->n)
    throw std::invalid_argument("MapHandle: dimension mismatch");
  switch (impl_->kind) {
    case Kind::boundary_f:
      return boundary_f(p);
    case Kind::extension_F:
      return extension_F(p);
    case Kind::extension_F_alt:
      return extension_F_alt(p);
    case Kind::left_translation:
      return group_mul(*impl_->translation, p);
    case Kind::dilation:
      return dilate(impl_->scale, p);
    case Kind::homomorphism:
      return impl_->hom->apply(p);
    case Kind::even_reflection:
      return even_reflection(p);
    case Kind::composite: {
      Point q = p;
      for (const MapHandle& part : impl_->parts) q = part(q);
      return q;
    }
    case Kind::custom:
      return impl_->fn(p);
  }
  throw std::logic_error("MapHandle: unknown kind");
}

Point map_eval(const MapHandle& m, const Point& p) { return m(p); }

namespace {

std::vector<double> parse_args(const std::string& text) {
  std::vector<double> args;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      args.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("MapHandle::parse: bad numeric argument '" +
                                  item + "'");
    }
  }
  return args;
}

}  // namespace

MapHandle MapHandle::parse(const std::string& text, int n) {
  std::string head = text;
  std::vector<double> args;
  const auto open = text.find('(');
  if (open != std::string::npos) {
    if (text.back() != ')')
      throw std::invalid_argument("MapHandle::parse: unbalanced parentheses");
    head = text.substr(0, open);
    args = parse_args(text.substr(open + 1, text.size() - open - 2));
  }
  if (head == "boundary_f") return boundary_reflection(n);
  if (head == "extension_F") return extension(n);
  if (head == "extension_F_alt") return extension_alt(n);
  if (head == "even_reflection") return even_reflection_map(n);
  if (head == "identity") return identity(n);
  if (head == "dilation") {
    if (args.size() != 1)
      throw std::invalid_argument("MapHandle::parse: dilation needs one argument");
    return dilation(n, args[0]);
  }
  if (head == "left_translation") {
    if (static_cast<int>(args.size()) != 2 * n + 1)
      throw std::invalid_argument(
          "MapHandle::parse: left_translation needs 2n+1 flat coordinates");
    return left_translation(
        Point::from_flat(Eigen::Map<const VectorXd>(args.data(), args.size())));
  }
  throw std::invalid_argument("MapHandle::parse: unknown map '" + head + "'");
}

}  // namespace heis
