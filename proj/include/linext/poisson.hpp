#pragma once

#include <functional>
#include <vector>

#include "linext/boundary_lab.hpp"
#include "linext/geometry.hpp"

namespace linext {

/// Product rule on the sphere for the normalized surface measure.
/// Parametrization xi = (sqrt(u) e^{i alpha}, sqrt(1 - u) e^{i beta}) turns
/// the measure into du d(alpha)/2pi d(beta)/2pi, so the rule is a Gauss rule
/// in u times uniform trapezoids in the two torus angles.
///
/// Exact for z1^p conj(z1)^q z2^r conj(z2)^s whenever |p - q| < n_alpha,
/// |r - s| < n_beta and p + r <= 2 n_u - 1.
struct SphereQuadrature {
  int n_alpha = 64;
  int n_beta = 64;
  int n_u = 32;
  std::vector<BallPoint> nodes;  // ordered (u, alpha, beta), beta fastest
  std::vector<double> weights;

  /// Throws UsageError unless the angle counts are positive multiples of 4.
  static SphereQuadrature product(int n_alpha = 64, int n_beta = 64, int n_u = 32);
  bool exact_for(int p, int q, int r, int s) const;
  /// Smallest distance to the sphere at which this resolution is trusted.
  double min_boundary_distance() const;
};

/// P(z, xi) = (1 - |z|^2)^2 / |1 - <z, xi>|^4.  DomainError unless |z| < 1.
double kernel(const BallPoint& z, const BallPoint& xi);

/// Real Jacobian of omega on the sphere for the normalized measure,
/// ((1 - |a|^2) / |1 - <xi, a>|^2)^2 with a = omega^{-1}(0).
double sphere_jacobian(const BallMobius& omega, const BallPoint& xi);

/// |P(omega z, omega xi) J(xi) - P(z, xi)|.  The kernel is invariant as a
/// measure, P(z, xi) dA(xi); the bare values differ by the Jacobian.
double kernel_invariance_defect(const BallMobius& omega, const BallPoint& z, const BallPoint& xi);

struct PoissonValue {
  Complex value{};
  /// Geometric extrapolation from the rule restricted to every second and
  /// every fourth torus node.  A heuristic, not a bound.
  double error_estimate = 0.0;
  bool inconclusive = false;
};

/// Invariant Poisson integral of f at an interior point, normalized measure.
PoissonValue integral(const BoundaryFunction& f, const BallPoint& z, const SphereQuadrature& quad);

/// z -> P[f](z) as an interior evaluator (values only, flags dropped).
std::function<Complex(const BallPoint&)> poisson_extension(const BoundaryFunction& f, const SphereQuadrature& quad);

/// Central-difference estimate of the invariant Laplacian
///   4 (1 - |z|^2) sum_{i,k} (delta_ik - z_i conj(z_k)) d^2 F / dz_i d conj(z_k).
/// UsageError for h < 1e-6; DomainError when z is within 2h of the sphere.
Complex invariant_laplacian_fd(const std::function<Complex(const BallPoint&)>& F, const BallPoint& z, double h);

}  // namespace linext
