#include "linext/decomposition.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "linext/spectral.hpp"

namespace linext {

namespace {

void check_torus_point(Complex z1, double r, const char* who) {
  if (!is_finite(z1) || !std::isfinite(r) || r < 0.0) throw DomainError(std::string(who) + ": bad (z1, r)");
  if (std::norm(z1) + r * r > 1.0 + kGeomEps) throw DomainError(std::string(who) + ": (z1, r) outside the closed ball");
}

}  // namespace

Complex angular_slice(const PointEvaluator& F, Complex z1, double r, int nu, std::size_t n) {
  check_torus_point(z1, r, "angular_slice");
  if (n < 4 * static_cast<std::size_t>(std::abs(nu)) + 16) throw UsageError("angular_slice: need N >= 4|nu| + 16");
  if (r == 0.0) return nu == 0 ? F({z1, 0.0}) : Complex(0.0);
  const std::vector<double> phi = uniform_angles(n);
  Complex acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex rot = std::polar(1.0, phi[j]);
    acc += F({z1, r * rot}) * std::polar(1.0, -double(nu) * phi[j]);
  }
  return acc / double(n) / std::pow(r, nu);
}

std::vector<Complex> angular_slices(const PointEvaluator& F, Complex z1, double r, int nu_max, std::size_t n) {
  check_torus_point(z1, r, "angular_slices");
  if (nu_max < 0 || !is_power_of_two(n) || n < 4 * static_cast<std::size_t>(nu_max) + 16)
    throw UsageError("angular_slices: need a power-of-two N >= 4 nu_max + 16");
  std::vector<Complex> out(2 * std::size_t(nu_max) + 1, Complex(0.0));
  if (r == 0.0) {
    out[nu_max] = F({z1, 0.0});
    return out;
  }
  const std::vector<double> phi = uniform_angles(n);
  std::vector<Complex> samples(n);
  for (std::size_t j = 0; j < n; ++j) samples[j] = F({z1, std::polar(r, phi[j])});
  const std::vector<Complex> c = fourier_coefficients(samples);
  for (int nu = -nu_max; nu <= nu_max; ++nu)
    out[nu + nu_max] = c[(nu + long(n)) % long(n)] / std::pow(r, nu);
  return out;
}

std::vector<SliceNode> sphere_nodes(int n_radii, int n_angles) {
  if (n_radii < 2 || n_angles < 1) throw UsageError("sphere_nodes: need >= 2 radii and >= 1 angle");
  std::vector<SliceNode> nodes;
  const std::vector<double> th = uniform_angles(n_angles);
  for (int k = 0; k < n_radii; ++k) {
    const double s = double(k) / double(n_radii - 1);
    const double r = std::sqrt(std::max(0.0, 1.0 - s * s));
    if (k == 0) {
      nodes.push_back({0.0, 1.0});
      continue;
    }
    for (double t : th) nodes.push_back({std::polar(s, t), r});
  }
  return nodes;
}

Complex SliceGrid::slice(std::size_t node, int nu) const {
  if (std::abs(nu) > nu_max) throw UsageError("SliceGrid: nu outside the grid");
  return values.at(node)[nu + nu_max];
}

std::optional<std::size_t> SliceGrid::find(Complex z1, double r, double tol) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (std::abs(nodes[i].z1 - z1) <= tol && std::abs(nodes[i].r - r) <= tol) return i;
  return std::nullopt;
}

std::vector<int> SliceGrid::active(double tol) const {
  std::vector<int> out;
  for (int nu = -nu_max; nu <= nu_max; ++nu) {
    double m = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].r == 0.0 && nu != 0) continue;
      m = std::max(m, std::abs(values[i][nu + nu_max]) * std::pow(nodes[i].r, nu));
    }
    if (m > tol) out.push_back(nu);
  }
  return out;
}

SliceGrid decompose(const PointEvaluator& F, std::vector<SliceNode> nodes, int nu_max, std::size_t n_phi) {
  SliceGrid g;
  g.nu_max = nu_max;
  g.n_phi = n_phi;
  g.values.reserve(nodes.size());
  for (const SliceNode& nd : nodes) g.values.push_back(angular_slices(F, nd.z1, nd.r, nu_max, n_phi));
  g.nodes = std::move(nodes);
  return g;
}

Complex reconstruct(const SliceGrid& grid, const BallPoint& z, int nu_max) {
  if (nu_max < 0 || nu_max > grid.nu_max) throw UsageError("reconstruct: nu_max exceeds the grid");
  const double r = std::abs(z.z2);
  const auto node = grid.find(z.z1, r);
  if (!node) throw UsageError("reconstruct: point is not a grid node (no interpolation)");
  if (r == 0.0) return grid.slice(*node, 0);
  // F^nu r^nu e^{i nu phi} = F^nu z2^nu, summed in the stable form.
  const Complex unit = z.z2 / r;
  Complex sum = 0.0;
  for (int nu = -nu_max; nu <= nu_max; ++nu)
    sum += grid.slice(*node, nu) * std::pow(r, nu) * ipow(unit, nu);
  return sum;
}

double weighted_slice_sup(const SliceGrid& grid, int nu) {
  if (nu < 0) throw UsageError("weighted_slice_sup: nu must be >= 0");
  double m = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    m = std::max(m, std::abs(grid.slice(i, nu)) * std::pow(1.0 - std::norm(grid.nodes[i].z1), nu));
  return m;
}

SliceEvaluator sphere_slice_evaluator(const PointEvaluator& F, int nu, std::size_t n_phi) {
  return [F, nu, n_phi](Complex z1, Complex) {
    const double r = std::sqrt(std::max(0.0, 1.0 - std::norm(z1)));
    return angular_slice(F, z1, r, nu, n_phi);
  };
}

RadialCoefficient radial_taylor(const SliceEvaluator& slice, Complex z1, int l, int nu, std::size_t n_w) {
  if (!is_finite(z1) || !(std::abs(z1) < 1.0)) throw DomainError("radial_taylor: |z1| must be < 1");
  if (l < 0) throw UsageError("radial_taylor: l must be >= 0");
  if (n_w <= static_cast<std::size_t>(l)) throw UsageError("radial_taylor: need more contour nodes than l");
  const double rho = 1.0 - std::norm(z1);
  const std::vector<double> th = uniform_angles(n_w);
  Complex acc = 0.0;
  for (std::size_t j = 0; j < n_w; ++j) acc += slice(z1, rho * std::polar(1.0, th[j])) * std::polar(1.0, -double(l) * th[j]);
  RadialCoefficient out;
  out.a = acc / double(n_w) / std::pow(rho, l);
  out.b = out.a * std::pow(rho, l + nu);
  return out;
}

Complex RadialCoeffs::b_sum(std::size_t i) const {
  Complex s = 0.0;
  for (const auto& row : b) s += row.at(i);
  return s;
}

RadialCoeffs radial_coeffs(const SliceEvaluator& slice, std::vector<Complex> z1, int nu, int l_max, std::size_t n_w) {
  RadialCoeffs rc;
  rc.nu = nu;
  rc.l_max = l_max;
  rc.a.assign(l_max + 1, std::vector<Complex>(z1.size()));
  rc.b = rc.a;
  for (int l = 0; l <= l_max; ++l) {
    for (std::size_t i = 0; i < z1.size(); ++i) {
      const RadialCoefficient c = radial_taylor(slice, z1[i], l, nu, n_w);
      rc.a[l][i] = c.a;
      rc.b[l][i] = c.b;
    }
  }
  rc.z1 = std::move(z1);
  return rc;
}

std::function<Complex(Complex)> sphere_b_series(const PointEvaluator& F, int nu, int l_max, std::size_t n_phi,
                                                std::size_t n_w) {
  SliceEvaluator ev = sphere_slice_evaluator(F, nu, n_phi);
  return [ev, nu, l_max, n_w](Complex z) {
    Complex s = 0.0;
    for (int l = 0; l <= l_max; ++l) s += radial_taylor(ev, z, l, nu, n_w).b;
    return s;
  };
}

CharacterizedFit fit_characterized(const BoundaryFunction& f, const CharacterizedFitOptions& opt) {
  if (opt.nu_max < 0 || opt.degree < 0) throw UsageError("fit_characterized: nu_max and degree must be >= 0");
  if (!is_power_of_two(opt.n_theta) || opt.n_theta < 2 * std::size_t(opt.degree) + 2)
    throw UsageError("fit_characterized: n_theta must be a power of two above twice the degree");
  const std::vector<double> radii = opt.radii.empty() ? chebyshev_points(0.35, 0.85, 8) : opt.radii;
  const std::vector<double> th = uniform_angles(opt.n_theta);
  const int nm = opt.nu_max;

  // slices[i][nu + nm][k] = F^nu at z1 = s_i e^{i theta_k} on the sphere.
  CharacterizedFit out;
  std::vector<std::vector<std::vector<Complex>>> slices(radii.size(),
                                                        std::vector<std::vector<Complex>>(2 * nm + 1, std::vector<Complex>(opt.n_theta)));
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double s = radii[i];
    if (!(s > 0.0 && s < 1.0)) throw UsageError("fit_characterized: radii must lie in (0, 1)");
    const double r = std::sqrt(1.0 - s * s);
    for (std::size_t k = 0; k < opt.n_theta; ++k) {
      const std::vector<Complex> all = angular_slices(f, std::polar(s, th[k]), r, nm, opt.n_phi);
      for (int nu = -nm; nu <= nm; ++nu) {
        slices[i][nu + nm][k] = all[nu + nm];
        if (nu < 0) out.negative_slice_max = std::max(out.negative_slice_max, std::abs(all[nu + nm]) * std::pow(r, nu));
      }
    }
  }

  for (int nu = 0; nu <= nm; ++nu) {
    std::vector<int> js;
    for (int j = 0; CharacterizedSpec::admissible(nu, j); ++j) js.push_back(j);
    if (js.empty()) continue;

    // Angular Fourier coefficients of B^nu = (1 - s^2)^nu F^nu on each radius.
    std::vector<std::vector<Complex>> bhat(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const double w = 1.0 - radii[i] * radii[i];
      std::vector<Complex> b(opt.n_theta);
      for (std::size_t k = 0; k < opt.n_theta; ++k) b[k] = slices[i][nu + nm][k] * std::pow(w, nu);
      bhat[i] = fourier_coefficients(b);
    }

    std::vector<std::vector<Complex>> coeffs(js.size(), std::vector<Complex>(opt.degree + 1));
    for (int q = 0; q <= opt.degree; ++q) {
      Eigen::MatrixXd a(radii.size(), js.size());
      Eigen::VectorXcd rhs(radii.size());
      for (std::size_t i = 0; i < radii.size(); ++i) {
        const double s = radii[i], w = 1.0 - s * s;
        for (std::size_t c = 0; c < js.size(); ++c) a(i, c) = std::pow(s, q) * std::pow(w, nu - js[c]);
        rhs(i) = bhat[i][q];
      }
      const Eigen::VectorXd scale = a.colwise().norm().transpose();
      const Eigen::MatrixXd as = a * scale.cwiseInverse().asDiagonal();
      const Eigen::MatrixXcd asc = as.cast<Complex>();
      const Eigen::VectorXcd sol = asc.colPivHouseholderQr().solve(rhs);
      for (std::size_t c = 0; c < js.size(); ++c) coeffs[c][q] = sol(c) / scale(c);
    }
    for (std::size_t c = 0; c < js.size(); ++c) out.spec.terms.push_back({nu, js[c], Polynomial(coeffs[c])});
  }

  const BoundaryFunction fitted = make_characterized(out.spec);
  for (const SliceNode& nd : sphere_nodes(9, 16)) {
    for (double phase : {0.0, 1.3, 2.9}) {
      const BallPoint z{nd.z1, std::polar(nd.r, phase)};
      out.residual = std::max(out.residual, std::abs(f(z) - fitted(z)));
    }
  }
  return out;
}

double relative_coefficient_error(const CharacterizedSpec& truth, const CharacterizedSpec& fit) {
  std::map<std::pair<int, int>, std::pair<Polynomial, Polynomial>> pairs;
  for (const auto& t : truth.terms) pairs[{t.nu, t.j}].first = t.h;
  for (const auto& t : fit.terms) pairs[{t.nu, t.j}].second = t.h;
  double scale = 0.0, err = 0.0;
  for (const auto& [key, p] : pairs) {
    const std::size_t n = std::max(p.first.coeffs().size(), p.second.coeffs().size());
    for (std::size_t k = 0; k < n; ++k) {
      scale = std::max(scale, std::abs(p.first.coeff(int(k))));
      err = std::max(err, std::abs(p.first.coeff(int(k)) - p.second.coeff(int(k))));
    }
  }
  return scale > 0.0 ? err / scale : err;
}

}  // namespace linext
