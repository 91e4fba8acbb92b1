#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linext/geometry.hpp"
#include "linext/polynomial.hpp"

namespace linext {

using DiscEvaluator = std::function<Complex(Complex)>;

/// E(z) = sum_k h_k(z) conj(z)^k with holomorphic polynomial h_k.
class PolyanalyticFunction {
public:
  PolyanalyticFunction() = default;
  explicit PolyanalyticFunction(std::vector<Polynomial> h) : h_(std::move(h)) {}

  Complex operator()(Complex z) const;
  const std::vector<Polynomial>& h() const { return h_; }
  Polynomial coefficient(int k) const { return k >= 0 && k < int(h_.size()) ? h_[k] : Polynomial{}; }

  /// Largest k with h_k nonzero (coefficients above tol); 0 for E = 0.
  int order(double tol = 0.0) const;
  int degree() const;

  /// Random coefficients in the unit square; h_order has a leading
  /// coefficient of modulus >= 0.5 so the order is exact.
  static PolyanalyticFunction random(std::uint64_t seed, int order, int degree);
  /// Polynomial in z and zb = conj(z), e.g. "z*zb^2 + (0.5-1i)z^3".
  static PolyanalyticFunction parse(const std::string& text);

  operator DiscEvaluator() const {
    return [self = *this](Complex z) { return self(z); };
  }

private:
  std::vector<Polynomial> h_;
};

Complex polyanalytic_eval(const PolyanalyticFunction& e, Complex z);

struct DiscCircle {
  Complex e{};
  double t = 0.5;
};

/// The meromorphic continuation inside a circle obtained by substituting
/// conj(z) = conj(e) + t^2 / (z - e).
class CircleExtension {
public:
  CircleExtension(PolyanalyticFunction e, DiscCircle circle);

  /// nullopt at the center, where the extension has its pole.
  std::optional<Complex> operator()(Complex z) const;
  int declared_pole_order() const { return fn_.order(); }
  const DiscCircle& circle() const { return circle_; }
  /// Exact Laurent coefficients about the center, power -> coefficient.
  std::map<int, Complex> laurent() const;

private:
  PolyanalyticFunction fn_;
  DiscCircle circle_;
};

/// DomainError unless the circle lies in the closed unit disc.
CircleExtension closed_form_circle_extension(const PolyanalyticFunction& e, const DiscCircle& circle);

struct CircleOptions {
  int m_max = 16;
  std::size_t n = 128;
  double tol = 1e-9;
  bool saturation_check = true;
};

struct CircleExtensionReport {
  DiscCircle circle;
  std::map<int, Complex> coeffs;  // m in [-m_max, m_max]
  int detected_order = 0;
  bool ambiguous = false;  // order differs between tol and 100 tol
  bool saturated = false;  // doubling N moved the coefficients by >= tol
  std::size_t n = 0;
  std::size_t n_used = 0;
  double tol = 0.0;

  bool passes_budget(int k) const { return detected_order <= std::max(k, 0); }
  /// pass/fail for budget k, inconclusive when ambiguous or saturated.
  Verdict verdict(int k) const;
};

/// Laurent evidence from uniform samples g(e + t exp(i theta_j)).  Requires a
/// power-of-two sample count >= 4 m_max.
CircleExtensionReport circle_mero_coeffs(const std::vector<Complex>& samples, const DiscCircle& circle, int m_max,
                                         double tol);

/// Samples `g` itself, with the doubling check for aliasing.
CircleExtensionReport circle_mero_coeffs(const DiscEvaluator& g, const DiscCircle& circle, const CircleOptions& opt = {});

struct FamilyReport {
  Complex c{};
  int nu = 0;
  int budget = 0;
  std::vector<HyperbolicCircle> circles;
  std::vector<CircleExtensionReport> reports;
  Verdict verdict = Verdict::pass;
};

/// Condition (H, c, nu) on the sampled radii: every hyperbolic circle
/// H(c, r) must show no Laurent coefficient below -max(nu, 0).
FamilyReport hyperbolic_family_test(const DiscEvaluator& b, Complex c, int nu, const std::vector<double>& r_grid,
                                    const CircleOptions& opt = {});

/// Chebyshev radii in [0.35, 0.85]; 2 nu + 4 of them.
std::vector<double> default_fit_radii(int nu);

struct PolyanalyticFit {
  PolyanalyticFunction function;
  double residual = 0.0;   // sup |B - fit| on the verification grid
  double condition = 0.0;  // worst column-equilibrated condition number
};

/// Least-squares fit of B by sum_{k <= nu} h_k(z) conj(z)^k, deg h_k <= poly_degree,
/// one Vandermonde-in-r^2 system per angular frequency.  IllConditioned
/// when a system's condition number exceeds 1e10.
PolyanalyticFit polyanalytic_fit(const DiscEvaluator& b, int nu, const std::vector<double>& radii, std::size_t n,
                                 int poly_degree);

}  // namespace linext
