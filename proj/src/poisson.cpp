#include "linext/poisson.hpp"

#include <array>
#include <cmath>
#include <memory>

#include "linext/spectral.hpp"

namespace linext {

SphereQuadrature SphereQuadrature::product(int n_alpha, int n_beta, int n_u) {
  if (n_alpha < 4 || n_beta < 4 || n_alpha % 4 || n_beta % 4 || n_u < 1)
    throw UsageError("SphereQuadrature: angle counts must be positive multiples of 4");
  SphereQuadrature q;
  q.n_alpha = n_alpha;
  q.n_beta = n_beta;
  q.n_u = n_u;
  const GaussRule g = gauss_legendre_unit(n_u);
  const std::vector<double> ta = uniform_angles(n_alpha), tb = uniform_angles(n_beta);
  const double torus_w = 1.0 / (double(n_alpha) * double(n_beta));
  q.nodes.reserve(std::size_t(n_u) * n_alpha * n_beta);
  q.weights.reserve(q.nodes.capacity());
  for (int iu = 0; iu < n_u; ++iu) {
    const double s1 = std::sqrt(g.nodes[iu]), s2 = std::sqrt(1.0 - g.nodes[iu]);
    for (int ia = 0; ia < n_alpha; ++ia) {
      const Complex x1 = std::polar(s1, ta[ia]);
      for (int ib = 0; ib < n_beta; ++ib) {
        q.nodes.push_back({x1, std::polar(s2, tb[ib])});
        q.weights.push_back(g.weights[iu] * torus_w);
      }
    }
  }
  return q;
}

bool SphereQuadrature::exact_for(int p, int q, int r, int s) const {
  if (p != q && std::abs(p - q) >= n_alpha) return false;
  if (r != s && std::abs(r - s) >= n_beta) return false;
  // Non-resonant monomials integrate to zero by the trapezoids alone.
  if (p != q || r != s) return true;
  return p + r <= 2 * n_u - 1;
}

double SphereQuadrature::min_boundary_distance() const {
  return 0.05 * 64.0 / double(std::min(n_alpha, n_beta));
}

double kernel(const BallPoint& z, const BallPoint& xi) {
  const double nz = z.norm_sq();
  if (!(nz < 1.0)) throw DomainError("kernel: z must lie in the open ball");
  const double d = std::norm(1.0 - inner(z, xi));
  const double num = 1.0 - nz;
  return num * num / (d * d);
}

PoissonValue integral(const BoundaryFunction& f, const BallPoint& z, const SphereQuadrature& quad) {
  const double nz = z.norm_sq();
  if (!(nz < 1.0)) throw DomainError("integral: z must lie in the open ball");
  Complex full = 0.0, half = 0.0, quarter = 0.0;
  const double num = (1.0 - nz) * (1.0 - nz);
  std::size_t idx = 0;
  // Row sums per u level keep the rounding drift of ~10^5 terms down.
  for (int iu = 0; iu < quad.n_u; ++iu) {
    Complex rf = 0.0, rh = 0.0, rq = 0.0;
    for (int ia = 0; ia < quad.n_alpha; ++ia) {
      for (int ib = 0; ib < quad.n_beta; ++ib, ++idx) {
        const BallPoint& xi = quad.nodes[idx];
        const double d = std::norm(1.0 - inner(z, xi));
        const Complex term = quad.weights[idx] * (num / (d * d)) * f(xi);
        rf += term;
        if (ia % 2 == 0 && ib % 2 == 0) rh += 4.0 * term;
        if (ia % 4 == 0 && ib % 4 == 0) rq += 16.0 * term;
      }
    }
    full += rf;
    half += rh;
    quarter += rq;
  }
  PoissonValue out;
  out.value = full;
  const double eh = std::abs(full - half), eq = std::abs(full - quarter);
  out.error_estimate = eq > 0.0 ? eh * std::min(1.0, eh / eq) : eh;
  out.inconclusive = std::sqrt(nz) > 1.0 - quad.min_boundary_distance() || out.error_estimate > 1e-8;
  return out;
}

std::function<Complex(const BallPoint&)> poisson_extension(const BoundaryFunction& f, const SphereQuadrature& quad) {
  auto shared = std::make_shared<const SphereQuadrature>(quad);
  return [f, shared](const BallPoint& z) { return integral(f, z, *shared).value; };
}

double sphere_jacobian(const BallMobius& omega, const BallPoint& xi) {
  const BallPoint a = omega.inverse()(BallPoint{});
  const double q = (1.0 - a.norm_sq()) / std::norm(1.0 - inner(xi, a));
  return q * q;
}

double kernel_invariance_defect(const BallMobius& omega, const BallPoint& z, const BallPoint& xi) {
  return std::abs(kernel(omega(z), omega(xi)) * sphere_jacobian(omega, xi) - kernel(z, xi));
}

Complex invariant_laplacian_fd(const std::function<Complex(const BallPoint&)>& F, const BallPoint& z, double h) {
  if (!(h >= 1e-6)) throw UsageError("invariant_laplacian_fd: step below 1e-6 loses everything to cancellation");
  if (!(z.norm() < 1.0 - 2.0 * h)) throw DomainError("invariant_laplacian_fd: point within 2h of the sphere");

  // Real coordinates (x1, y1, x2, y2).
  const std::array<double, 4> x0{z.z1.real(), z.z1.imag(), z.z2.real(), z.z2.imag()};
  auto at = [&](std::array<double, 4> x) { return F({{x[0], x[1]}, {x[2], x[3]}}); };
  auto shifted = [&](int a, double da, int b, double db) {
    std::array<double, 4> x = x0;
    x[a] += da;
    x[b] += db;
    return at(x);
  };

  const Complex f0 = at(x0);
  Complex hess[4][4];
  for (int a = 0; a < 4; ++a) {
    hess[a][a] = (shifted(a, h, a, 0.0) - 2.0 * f0 + shifted(a, -h, a, 0.0)) / (h * h);
    for (int b = 0; b < a; ++b) {
      hess[a][b] = hess[b][a] =
          (shifted(a, h, b, h) - shifted(a, h, b, -h) - shifted(a, -h, b, h) + shifted(a, -h, b, -h)) / (4.0 * h * h);
    }
  }

  const std::array<Complex, 2> zc{z.z1, z.z2};
  const Complex I(0.0, 1.0);
  Complex sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      const int xi = 2 * i, yi = 2 * i + 1, xk = 2 * k, yk = 2 * k + 1;
      const Complex wirtinger = 0.25 * (hess[xi][xk] + hess[yi][yk] + I * (hess[xi][yk] - hess[yi][xk]));
      const Complex metric = (i == k ? 1.0 : 0.0) - zc[i] * std::conj(zc[k]);
      sum += metric * wirtinger;
    }
  }
  return 4.0 * (1.0 - z.norm_sq()) * sum;
}

}  // namespace linext
