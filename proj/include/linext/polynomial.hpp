#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "linext/types.hpp"

namespace linext {

/// Holomorphic polynomial in one variable, c[0] + c[1] z + ... .
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}

  static Polynomial constant(Complex a) { return Polynomial({a}); }
  static Polynomial monomial(int degree, Complex a = 1.0);

  Complex operator()(Complex z) const {
    Complex acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  const std::vector<Complex>& coeffs() const { return c_; }
  std::vector<Complex>& coeffs() { return c_; }
  Complex coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Complex(0.0); }

  /// Index of the highest coefficient with modulus above `tol`, or -1 for zero.
  int degree(double tol = 0.0) const;
  bool is_zero(double tol = 0.0) const { return degree(tol) < 0; }

  /// Taylor coefficients about `a`: p(z) = sum_n d_n (z - a)^n.
  Polynomial shifted(Complex a) const;

  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator+(const Polynomial& o) const;

private:
  std::vector<Complex> c_;
};

/// Sparse polynomial in z1, z2 and their conjugates.  Exponent order is
/// (z1, z2, conj z1, conj z2).
class BallPolynomial {
public:
  using Exponents = std::array<int, 4>;
  struct Term {
    Exponents exp{};
    Complex coeff{};
  };

  BallPolynomial() = default;
  explicit BallPolynomial(std::vector<Term> terms);

  Complex operator()(const BallPoint& z) const;
  const std::vector<Term>& terms() const { return terms_; }
  bool is_holomorphic() const;
  int total_degree() const;

  /// Renders with the same grammar parse_polynomial accepts.
  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

/// Parses a complex literal: "0.3", "-2", "0.3+0.4i", "-1.5i", "i".
/// Throws UsageError on anything else.
Complex parse_complex(std::string_view text);

/// Renders a complex number in the literal grammar, round-trippable.
std::string format_complex(Complex z);

/// Parses a sum of monomials over the given variable names, e.g.
/// "1+2z1*z2", "(0.5-1i)z1^3*z2b", "z*zb^2".  Variables are matched
/// longest-name first.  Returns exponent vectors (one slot per variable,
/// same order as `vars`) with merged coefficients.
std::vector<std::pair<std::vector<int>, Complex>> parse_polynomial(std::string_view text,
                                                                  const std::vector<std::string>& vars);

BallPolynomial parse_ball_polynomial(std::string_view text, bool allow_conjugates);

}  // namespace linext
