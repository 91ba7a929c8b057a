#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "heis/core.hpp"
#include "heis/geodesic.hpp"
#include "heis/hom.hpp"

namespace heis {

// 2x2 reflection acting on each (x_i, y_i) pair of the slice at arc
// parameter s: the conjugate of (a,b) -> (-a,b) by the slice frame,
//   [[-cos s, sin s], [sin s, cos s]].
// Orthogonal with determinant -1.
Eigen::Matrix2d slice_reflection(double s);

// Alternative reflection convention with the mirror axis at s/2,
//   [[cos s, sin s], [sin s, -cos s]].
// Shares orthogonality and blockwise determinant -1 with slice_reflection
// but is a different map away from s = pi/2.
Eigen::Matrix2d slice_reflection_alt(double s);

// Geodesic interchange in chart coordinates: ((a,b), s) -> ((-a,b), s).
GeodesicParam boundary_f_param(const GeodesicParam& g);

// The same map on ambient points of the hypersurface; the two poles are
// fixed. Throws DomainError for points farther than on_h_tol from the
// hypersurface.
Point boundary_f(const Point& p, double on_h_tol = 1e-9);

// Continuous extension of boundary_f to the closed bounded region:
//   (x, y, t) -> (C(phi^{-1}(t)) applied blockwise to (x,y), t)
// with C = slice_reflection. Heights are preserved, each slice map is
// orthogonal, and the pole slices collapse to the poles themselves.
Point extension_F(const Point& p, double band = 1e-9);

// Same construction with slice_reflection_alt. Does not restrict to
// boundary_f on the hypersurface, but has the same slice-orthogonality and
// the same Jacobian sign.
Point extension_F_alt(const Point& p, double band = 1e-9);

// (x, y, t) -> (-x, y, -t); reverses the contact form.
Point even_reflection(const Point& p);

// Evaluatable map of the built-in catalog. Values are immutable and cheap
// to copy; evaluation is pure.
class MapHandle {
 public:
  enum class Kind {
    boundary_f,
    extension_F,
    extension_F_alt,
    left_translation,
    dilation,
    homomorphism,
    even_reflection,
    composite,
    custom,
  };

  static MapHandle boundary_reflection(int n);
  static MapHandle extension(int n);
  static MapHandle extension_alt(int n);
  static MapHandle left_translation(Point g);
  static MapHandle dilation(int n, double s);
  static MapHandle homomorphism(HomogeneousHom hom);
  static MapHandle even_reflection_map(int n);
  static MapHandle composite(std::vector<MapHandle> parts);
  static MapHandle identity(int n);
  // Out-of-catalog map for test oracles; not addressable by name.
  static MapHandle custom(int n, std::string name,
                          std::function<Point(const Point&)> fn);

  // Parses a catalog name with optional parameters, e.g. "boundary_f",
  // "extension_F", "dilation(2)", "left_translation(1,0,0)" (flat
  // coordinates x..,y..,t).
  static MapHandle parse(const std::string& text, int n);

  Kind kind() const;
  int n() const;
  const std::string& name() const;

  Point operator()(const Point& p) const;

  // The underlying homomorphism, for kinds backed by one.
  const HomogeneousHom* hom() const;

 private:
  struct Impl;
  explicit MapHandle(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Uniform dispatcher; identical to m(p).
Point map_eval(const MapHandle& m, const Point& p);

}  // namespace heis
