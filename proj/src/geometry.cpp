#include "linext/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace linext {

namespace {

constexpr double kDenomFloor = 1e-14;

void require_finite(const BallPoint& z, const char* what) {
  if (!is_finite(z.z1) || !is_finite(z.z2)) throw DomainError(std::string(what) + ": non-finite coordinate");
}

}  // namespace

Unitary Unitary::operator*(const Unitary& o) const {
  return {{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
           m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

double Unitary::unitarity_defect() const {
  const Unitary p = adjoint() * *this;
  return std::max({std::abs(p.m[0] - 1.0), std::abs(p.m[1]), std::abs(p.m[2]), std::abs(p.m[3] - 1.0)});
}

bool Unitary::is_identity() const {
  return m[0] == Complex(1) && m[1] == Complex(0) && m[2] == Complex(0) && m[3] == Complex(1);
}

Unitary unitary_with_first_column(const BallPoint& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("unitary_with_first_column: zero vector");
  const Complex u1 = v.z1 / n, u2 = v.z2 / n;
  return {{u1, -std::conj(u2), u2, std::conj(u1)}};
}

Complex disc_automorphism_apply(Complex c, Complex z) {
  const Complex den = 1.0 + std::conj(c) * z;
  if (std::abs(den) < kDenomFloor) throw DomainError("disc_automorphism_apply: degenerate denominator");
  return (z + c) / den;
}

BallPoint axis_automorphism_apply(Complex c1, const BallPoint& z) {
  const Complex den = 1.0 + std::conj(c1) * z.z1;
  if (std::abs(den) < kDenomFloor) throw DomainError("axis_automorphism_apply: degenerate denominator");
  const double s = std::sqrt(std::max(0.0, 1.0 - std::norm(c1)));
  return {(z.z1 + c1) / den, s * z.z2 / den};
}

BallMobius::BallMobius(Unitary pre, Complex c1, Unitary post) : pre_(pre), c1_(c1), post_(post) {
  if (!(std::abs(c1) < 1.0)) throw DomainError("BallMobius: axis parameter must lie in the open unit disc");
  if (pre.unitarity_defect() > 1e-12 || post.unitarity_defect() > 1e-12)
    throw DomainError("BallMobius: matrix is not unitary");
}

BallPoint BallMobius::operator()(const BallPoint& z) const {
  return post_.apply(axis_automorphism_apply(c1_, pre_.apply(z)));
}

BallMobius BallMobius::inverse() const { return {post_.adjoint(), -c1_, pre_.adjoint()}; }

bool BallMobius::is_identity() const { return pre_.is_identity() && c1_ == Complex(0) && post_.is_identity(); }

BallMobius ball_automorphism(const BallPoint& a) {
  require_finite(a, "ball_automorphism");
  if (!a.interior()) throw DomainError("ball_automorphism: point must lie in the open ball");
  const double s = a.norm();
  if (s == 0.0) return BallMobius::identity();
  return {Unitary::identity(), Complex(s), unitary_with_first_column(a)};
}

BallMobius align_to_axis(const BallPoint& a, const BallPoint& b) {
  require_finite(a, "align_to_axis");
  require_finite(b, "align_to_axis");
  if (!a.interior() || !b.interior()) throw DomainError("align_to_axis: points must lie in the open ball");
  if ((a - b).norm() <= kGeomEps) throw DomainError("align_to_axis: degenerate configuration a == b");
  if (std::abs(a.z2) <= kGeomEps && std::abs(b.z2) <= kGeomEps) return BallMobius::identity();

  // Move a to the origin, then rotate the image of b onto the z1-axis.
  const BallMobius to_origin = ball_automorphism(a).inverse();
  const BallPoint b0 = to_origin(b);
  const Unitary rot = unitary_with_first_column(b0).adjoint();
  return {to_origin.pre(), to_origin.axis_parameter(), rot * to_origin.post()};
}

ComplexLine ComplexLine::make(const BallPoint& base, const BallPoint& dir) {
  require_finite(base, "ComplexLine");
  require_finite(dir, "ComplexLine");
  return canonical(ComplexLine{base, dir});
}

std::array<double, 8> ComplexLine::key() const {
  return {base.z1.real(), base.z1.imag(), base.z2.real(), base.z2.imag(),
          dir.z1.real(),  dir.z1.imag(),  dir.z2.real(),  dir.z2.imag()};
}

ComplexLine canonical(const ComplexLine& line) {
  BallPoint d = line.dir;
  const double n = d.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("canonical: zero or non-finite direction");
  if (std::abs(n - 1.0) > 1e-15) d = Complex(1.0 / n) * d;

  // Near-ties resolve to the first coordinate so the choice is stable.
  const bool second = std::abs(d.z2) > std::abs(d.z1) * (1.0 + 1e-12);
  Complex& pivot = second ? d.z2 : d.z1;
  if (pivot.imag() != 0.0 || pivot.real() <= 0.0) {
    const double mod = std::abs(pivot);
    const Complex phase = std::conj(pivot) / mod;
    d = phase * d;
    pivot = Complex(mod, 0.0);
  }
  return {line.base, d};
}

LineBoundaryCircle line_boundary_circle(const ComplexLine& line) {
  require_finite(line.base, "line_boundary_circle");
  if (!line.base.interior()) throw DomainError("line_boundary_circle: base point must lie in the open ball");
  if (std::abs(line.dir.norm() - 1.0) > kGeomEps) throw DomainError("line_boundary_circle: direction is not a unit vector");
  const Complex pd = inner(line.base, line.dir);
  return {-pd, std::sqrt(1.0 - line.base.norm_sq() + std::norm(pd))};
}

HyperbolicCircle hyperbolic_to_euclidean(Complex c, double r) {
  if (!is_finite(c) || !(std::abs(c) < 1.0)) throw DomainError("hyperbolic_to_euclidean: |c| must be < 1");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("hyperbolic_to_euclidean: r must lie in (0, 1)");
  const double c2 = std::norm(c), r2 = r * r;
  const double den = 1.0 - c2 * r2;
  return {c, r, c * ((1.0 - r2) / den), r * (1.0 - c2) / den};
}

bool complex_collinear(const std::vector<BallPoint>& pts, double eps) {
  if (pts.size() < 3) return true;
  const BallPoint& v0 = pts.front();
  const BallPoint* dir = nullptr;
  BallPoint d;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const BallPoint w = pts[k] - v0;
    if (dir == nullptr) {
      if (w.norm() > eps) {
        d = w;
        dir = &d;
      }
      continue;
    }
    const Complex det = d.z1 * w.z2 - d.z2 * w.z1;
    if (std::abs(det) > eps * d.norm() * w.norm()) return false;
  }
  return true;
}

}  // namespace linext
