#include "linext/disc_analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "linext/spectral.hpp"

namespace linext {

Complex PolyanalyticFunction::operator()(Complex z) const {
  const Complex zb = std::conj(z);
  Complex acc = 0.0;
  for (auto it = h_.rbegin(); it != h_.rend(); ++it) acc = acc * zb + (*it)(z);
  return acc;
}

int PolyanalyticFunction::order(double tol) const {
  for (int k = int(h_.size()) - 1; k >= 0; --k)
    if (!h_[k].is_zero(tol)) return k;
  return 0;
}

int PolyanalyticFunction::degree() const {
  int d = -1;
  for (const Polynomial& p : h_) d = std::max(d, p.degree());
  return d;
}

PolyanalyticFunction PolyanalyticFunction::random(std::uint64_t seed, int order, int degree) {
  if (order < 0 || degree < 0) throw UsageError("random polyanalytic: order and degree must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Polynomial> h;
  for (int k = 0; k <= order; ++k) {
    std::vector<Complex> c(degree + 1);
    for (Complex& x : c) x = {u(rng), u(rng)};
    h.emplace_back(std::move(c));
  }
  Complex& lead = h[order].coeffs()[degree];
  if (std::abs(lead) < 0.5) lead = std::polar(0.5 + 0.5 * std::abs(lead), std::arg(lead));
  return PolyanalyticFunction(std::move(h));
}

PolyanalyticFunction PolyanalyticFunction::parse(const std::string& text) {
  const auto terms = parse_polynomial(text, {"z", "zb"});
  std::vector<Polynomial> h;
  for (const auto& [exp, c] : terms) {
    const int p = exp[0], k = exp[1];
    if (int(h.size()) <= k) h.resize(k + 1);
    auto& cs = h[k].coeffs();
    if (int(cs.size()) <= p) cs.resize(p + 1, 0.0);
    cs[p] += c;
  }
  if (h.empty()) h.emplace_back(std::vector<Complex>{0.0});
  return PolyanalyticFunction(std::move(h));
}

Complex polyanalytic_eval(const PolyanalyticFunction& e, Complex z) { return e(z); }

CircleExtension::CircleExtension(PolyanalyticFunction e, DiscCircle circle) : fn_(std::move(e)), circle_(circle) {}

std::optional<Complex> CircleExtension::operator()(Complex z) const {
  const Complex u = z - circle_.e;
  if (std::abs(u) <= kGeomEps * std::max(1.0, circle_.t)) return std::nullopt;
  const Complex zb = std::conj(circle_.e) + circle_.t * circle_.t / u;
  Complex acc = 0.0;
  const auto& h = fn_.h();
  for (auto it = h.rbegin(); it != h.rend(); ++it) acc = acc * zb + (*it)(z);
  return acc;
}

std::map<int, Complex> CircleExtension::laurent() const {
  // h_k(z) = sum_n d_{k,n} u^n and (conj e + t^2/u)^k = sum_i C(k,i) conj(e)^(k-i) t^(2i) u^-i.
  const Complex eb = std::conj(circle_.e);
  const double t2 = circle_.t * circle_.t;
  std::map<int, Complex> out;
  const auto& h = fn_.h();
  for (int k = 0; k < int(h.size()); ++k) {
    const Polynomial d = h[k].shifted(circle_.e);
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
      const Complex w = binom * ipow(eb, k - i) * std::pow(t2, i);
      for (int n = 0; n < int(d.coeffs().size()); ++n) out[n - i] += d.coeffs()[n] * w;
      binom = binom * double(k - i) / double(i + 1);
    }
  }
  return out;
}

CircleExtension closed_form_circle_extension(const PolyanalyticFunction& e, const DiscCircle& circle) {
  if (!(circle.t > 0.0) || !is_finite(circle.e) || std::abs(circle.e) + circle.t > 1.0 + kGeomEps)
    throw DomainError("circle extension: circle must lie in the closed unit disc");
  return CircleExtension(e, circle);
}

Verdict CircleExtensionReport::verdict(int k) const {
  if (ambiguous || saturated) return Verdict::inconclusive;
  return passes_budget(k) ? Verdict::pass : Verdict::fail;
}

namespace {

int order_at(const std::map<int, Complex>& coeffs, double tol) {
  int order = 0;
  for (const auto& [m, c] : coeffs)
    if (m < 0 && std::abs(c) >= tol) order = std::max(order, -m);
  return order;
}

void check_circle(const DiscCircle& c) {
  if (!(c.t > 0.0) || !is_finite(c.e)) throw DomainError("circle: radius must be positive and center finite");
}

}  // namespace

CircleExtensionReport circle_mero_coeffs(const std::vector<Complex>& samples, const DiscCircle& circle, int m_max,
                                         double tol) {
  check_circle(circle);
  if (m_max < 1) throw UsageError("circle coefficients: m_max must be >= 1");
  if (!is_power_of_two(samples.size()) || samples.size() < 4 * std::size_t(m_max))
    throw UsageError("circle coefficients: sample count must be a power of two >= 4 m_max");
  if (!(tol > 0.0)) throw UsageError("circle coefficients: tolerance must be positive");
  CircleExtensionReport rep;
  rep.circle = circle;
  rep.coeffs = periodic_fourier_coeffs(samples, -m_max, m_max);
  rep.detected_order = order_at(rep.coeffs, tol);
  rep.ambiguous = order_at(rep.coeffs, 100.0 * tol) != rep.detected_order;
  rep.n = rep.n_used = samples.size();
  rep.tol = tol;
  return rep;
}

CircleExtensionReport circle_mero_coeffs(const DiscEvaluator& g, const DiscCircle& circle, const CircleOptions& opt) {
  check_circle(circle);
  auto sample = [&](std::size_t n) {
    const std::vector<double> th = uniform_angles(n);
    std::vector<Complex> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = g(circle.e + std::polar(circle.t, th[j]));
    return s;
  };
  CircleExtensionReport rep = circle_mero_coeffs(sample(opt.n), circle, opt.m_max, opt.tol);
  if (!opt.saturation_check) return rep;
  CircleExtensionReport rep2 = circle_mero_coeffs(sample(2 * opt.n), circle, opt.m_max, opt.tol);
  double alias = 0.0;
  for (const auto& [m, c] : rep.coeffs) alias = std::max(alias, std::abs(c - rep2.coeffs.at(m)));
  rep2.n = opt.n;
  rep2.saturated = alias >= opt.tol || rep2.detected_order != rep.detected_order;
  rep2.ambiguous = rep2.ambiguous || rep.ambiguous;
  return rep2;
}

FamilyReport hyperbolic_family_test(const DiscEvaluator& b, Complex c, int nu, const std::vector<double>& r_grid,
                                    const CircleOptions& opt) {
  if (std::abs(c) >= 1.0) throw DomainError("hyperbolic family: center must lie in the open disc");
  if (r_grid.empty()) throw UsageError("hyperbolic family: empty radius grid");
  FamilyReport out;
  out.c = c;
  out.nu = nu;
  out.budget = std::max(nu, 0);
  for (double r : r_grid) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("hyperbolic family: radii must lie in (0, 1)");
    const HyperbolicCircle h = hyperbolic_to_euclidean(c, r);
    out.circles.push_back(h);
    out.reports.push_back(circle_mero_coeffs(b, DiscCircle{h.e, h.t}, opt));
    out.verdict = combine(out.verdict, out.reports.back().verdict(out.budget));
  }
  return out;
}

std::vector<double> default_fit_radii(int nu) { return chebyshev_points(0.35, 0.85, 2 * std::max(nu, 0) + 4); }

PolyanalyticFit polyanalytic_fit(const DiscEvaluator& b, int nu, const std::vector<double>& radii, std::size_t n,
                                 int poly_degree) {
  nu = std::max(nu, 0);
  if (poly_degree < 0) throw UsageError("polyanalytic fit: degree must be >= 0");
  if (!is_power_of_two(n) || n <= 2 * std::size_t(poly_degree + nu))
    throw UsageError("polyanalytic fit: N must be a power of two above 2 (degree + nu)");
  if (radii.size() < std::size_t(nu + 1)) throw UsageError("polyanalytic fit: need at least nu + 1 radii");
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0)) throw DomainError("polyanalytic fit: radii must lie in (0, 1)");

  // coefficient of e^{i n theta} at radius r
  std::vector<std::map<int, Complex>> fc;
  const std::vector<double> th = uniform_angles(n);
  for (double r : radii) {
    std::vector<Complex> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = b(std::polar(r, th[j]));
    fc.push_back(periodic_fourier_coeffs(s, -nu, poly_degree));
  }

  std::vector<Polynomial> h(nu + 1, Polynomial(std::vector<Complex>(poly_degree + 1, 0.0)));
  PolyanalyticFit fit;
  for (int q = -nu; q <= poly_degree; ++q) {
    const int k0 = std::max(0, -q), k1 = std::min(nu, poly_degree - q);
    if (k0 > k1) continue;
    const int cols = k1 - k0 + 1;
    Eigen::MatrixXd a(radii.size(), cols);
    Eigen::MatrixXd rhs(radii.size(), 2);
    for (std::size_t i = 0; i < radii.size(); ++i) {
      for (int k = k0; k <= k1; ++k) a(i, k - k0) = std::pow(radii[i], q + 2 * k);
      rhs(i, 0) = fc[i].at(q).real();
      rhs(i, 1) = fc[i].at(q).imag();
    }
    const Eigen::VectorXd scale = a.colwise().norm().transpose();
    a = a * scale.cwiseInverse().asDiagonal();
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& sv = svd.singularValues();
    const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
    fit.condition = std::max(fit.condition, cond);
    if (cond > 1e10)
      throw IllConditioned("polyanalytic fit: condition number " + std::to_string(cond) +
                           " at frequency " + std::to_string(q) + "; spread the radii over [0.35, 0.85]");
    const Eigen::MatrixXd x = a.colPivHouseholderQr().solve(rhs);
    for (int k = k0; k <= k1; ++k) {
      const double s = scale(k - k0);
      h[k].coeffs()[q + k] = Complex(x(k - k0, 0), x(k - k0, 1)) / s;
    }
  }
  fit.function = PolyanalyticFunction(std::move(h));

  const std::vector<double> check_r = {0.1, 0.3, 0.5, 0.7, 0.9, 0.95};
  const std::vector<double> check_th = uniform_angles(32);
  for (double r : check_r)
    for (double t : check_th) {
      const Complex z = std::polar(r, t);
      fit.residual = std::max(fit.residual, std::abs(b(z) - fit.function(z)));
    }
  return fit;
}

}  // namespace linext
