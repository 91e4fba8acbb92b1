#pragma once

#include <array>
#include <tuple>
#include <vector>

#include "linext/types.hpp"

namespace linext {

/// 2x2 complex matrix, used only for unitaries of C^2.
struct Unitary {
  std::array<Complex, 4> m{Complex(1), Complex(0), Complex(0), Complex(1)};  // row major

  static Unitary identity() { return {}; }

  BallPoint apply(const BallPoint& z) const {
    return {m[0] * z.z1 + m[1] * z.z2, m[2] * z.z1 + m[3] * z.z2};
  }
  Unitary adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
  }
  Unitary operator*(const Unitary& o) const;

  /// Max deviation of U*U from the identity.
  double unitarity_defect() const;
  bool is_identity() const;
};

/// Unitary whose first column is `v / |v|`; v must be nonzero.
Unitary unitary_with_first_column(const BallPoint& v);

/// omega_c(z) = (z + c) / (1 + conj(c) z), an automorphism of the unit disc.
Complex disc_automorphism_apply(Complex c, Complex z);

/// The automorphism of the ball moving 0 to (c1, 0):
/// z -> ((z1 + c1) / (1 + conj(c1) z1), sqrt(1 - |c1|^2) z2 / (1 + conj(c1) z1)).
BallPoint axis_automorphism_apply(Complex c1, const BallPoint& z);

/// Ball automorphism stored as the composition post . A_{c1} . pre, where
/// A_{c1} is the axis automorphism.  The inverse has the same shape, so it
/// is exact and cheap.
class BallMobius {
public:
  BallMobius() = default;
  BallMobius(Unitary pre, Complex c1, Unitary post);

  static BallMobius identity() { return {}; }

  BallPoint operator()(const BallPoint& z) const;
  BallMobius inverse() const;

  const Unitary& pre() const { return pre_; }
  Complex axis_parameter() const { return c1_; }
  const Unitary& post() const { return post_; }
  bool is_identity() const;

private:
  Unitary pre_{};
  Complex c1_{0.0};
  Unitary post_{};
};

/// An automorphism phi of the ball with phi(0) = a.  Throws DomainError
/// unless |a| < 1.
BallMobius ball_automorphism(const BallPoint& a);

/// An automorphism psi with psi(a) and psi(b) on the z1-axis.  Returns the
/// identity when both points already lie on it.  Throws DomainError when
/// a == b or either point is not interior.
BallMobius align_to_axis(const BallPoint& a, const BallPoint& b);

/// Complex line lambda -> base + lambda * dir.
struct ComplexLine {
  BallPoint base{};
  BallPoint dir{Complex(1), Complex(0)};

  BallPoint at(Complex lambda) const { return base + lambda * dir; }

  /// Normalizes `dir` and returns the canonical form.  Throws DomainError on a
  /// zero or non-finite direction.
  static ComplexLine make(const BallPoint& base, const BallPoint& dir);

  /// Total-order key over (base, dir) components, for deterministic sorting.
  std::array<double, 8> key() const;
};

/// Scales dir to unit norm and rotates its phase so that the coordinate of
/// largest modulus is real and positive.  Idempotent bit-for-bit.
ComplexLine canonical(const ComplexLine& line);

/// The circle |lambda - lambda0| = rho in the line's parameter plane that
/// parametrizes L intersected with the sphere.
struct LineBoundaryCircle {
  Complex lambda0{};
  double rho = 1.0;
};

LineBoundaryCircle line_boundary_circle(const ComplexLine& line);

/// Hyperbolic circle H(c, r) = omega_c({|z| = r}) with its Euclidean data.
struct HyperbolicCircle {
  Complex c{};
  double r = 0.5;
  Complex e{};    // Euclidean center
  double t = 0.5; // Euclidean radius
};

/// e = c (1 - r^2) / (1 - |c|^2 r^2),  t = r (1 - |c|^2) / (1 - |c|^2 r^2).
HyperbolicCircle hyperbolic_to_euclidean(Complex c, double r);

/// True when all points lie on one complex line (up to `eps` on the 2x2
/// determinants).  Fewer than three points are always collinear.
bool complex_collinear(const std::vector<BallPoint>& pts, double eps = 1e-10);

}  // namespace linext
