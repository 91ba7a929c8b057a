#pragma once

#include "heis/degree.hpp"
#include "heis/differential.hpp"
#include "heis/report.hpp"

namespace heis::verify {

// Elementary metric/group checks over random tuples.
CheckResult metric_triangle(int n, int samples, std::uint64_t seed, double tol);
CheckResult metric_left_invariance(int n, int samples, std::uint64_t seed,
                                   double tol);
CheckResult metric_dilation_homogeneity(int n, int samples, std::uint64_t seed,
                                        double tol);
CheckResult group_associativity(int n, int samples, std::uint64_t seed,
                                double tol);
CheckResult frame_kernel(int n, int samples, std::uint64_t seed, double tol);

// Chart checks.
CheckResult phi_roundtrip(int samples, std::uint64_t seed, double tol);
CheckResult chart_roundtrip(int n, int samples, std::uint64_t seed, double tol);
CheckResult slice_radius_identity(int n, int samples, std::uint64_t seed,
                                  double tol);
CheckResult cc_endpoint(int n);

// Boundary map and extension.
CheckResult extension_restriction(int n, int samples, std::uint64_t seed,
                                  double tol);
CheckResult boundary_involution(int n, int samples, std::uint64_t seed,
                                double tol);
CheckResult slice_orthogonality(int n, int samples, std::uint64_t seed,
                                double tol);

// Same-height identities and ratio scans.
CheckResult same_height_isometry(int n, int samples, std::uint64_t seed,
                                 double tol);
CheckResult closed_form_identity(int n, int samples, std::uint64_t seed,
                                 double tol);
std::vector<CheckResult> lipschitz_stability(int n, int small_pairs,
                                             int large_pairs,
                                             std::uint64_t seed,
                                             double factor = 1.05);

// Degree and homotopy apparatus.
std::vector<CheckResult> degree_extension(int n, std::uint64_t seed);
CheckResult degree_hom_ball(int n, std::uint64_t seed);
CheckResult homotopy_endpoints(int n, int samples, std::uint64_t seed);
CheckResult boundary_gap_positive(int n, int samples, std::uint64_t seed);
CheckResult injectivity_scale_invariance(int n, int samples,
                                         std::uint64_t seed, double tol);

// Contact identities.
std::vector<CheckResult> contact_even_reflection(int n, std::uint64_t seed);
std::vector<CheckResult> contact_dilation(int n, double r, std::uint64_t seed);
// Worst contact residual and determinant-identity gap over translations,
// dilations, homomorphisms and the reflection, at random points.
std::vector<CheckResult> contact_model_maps(int n, int samples,
                                            std::uint64_t seed);
CheckResult contact_extension_noncontact(int n, int samples,
                                         std::uint64_t seed);

// Rescaled difference quotients.
CheckResult pansu_scale_independence(int n, int samples, std::uint64_t seed,
                                     double tol);
CheckResult pansu_hom_convergence(int n, std::uint64_t seed);
CheckResult pansu_extension_divergence(int n, int samples, std::uint64_t seed,
                                       double min_fraction = 0.95);

// Metric blow-up slope of a non-contact map: validated on a hand-built
// vertical shear, then measured on the extension map at a pinned generic
// interior point.
CheckResult scaling_slope_oracle(int n);
CheckResult scaling_slope_extension(int n);

// Full suite for one n, as used by the verify-all command.
Report run_verify_all(const RunConfig& config);

// Well-conditioned test homomorphism M = [[A, 0], [0, (A^T)^{-1}]] scaled by
// r (lambda = r^2); generic among homogeneous homomorphisms.
HomogeneousHom random_test_hom(int n, rng::Stream& stream, double r = 1.0);

}  // namespace heis::verify
