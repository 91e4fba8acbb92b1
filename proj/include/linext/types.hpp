#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace linext {

using Complex = std::complex<double>;

/// Tolerance for every geometric membership check (sphere, unit norm, ...).
inline constexpr double kGeomEps = 1e-12;

/// Base of all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed request: bad parameters, grammar errors, unreadable files.
class UsageError : public Error {
public:
  using Error::Error;
};

/// A linear system too ill-conditioned to be trusted.
class IllConditioned : public Error {
public:
  using Error::Error;
};

/// Three-valued outcome of every numerical test.
enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);

/// Worst-of combination: inconclusive dominates pass, fail dominates both.
Verdict combine(Verdict a, Verdict b);

/// z^k by repeated squaring; negative k inverts first.
inline Complex ipow(Complex z, int k) {
  if (k < 0) {
    z = 1.0 / z;
    k = -k;
  }
  Complex r = 1.0;
  while (k) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// A point of the closed unit ball in C^2.
struct BallPoint {
  Complex z1{};
  Complex z2{};

  double norm_sq() const { return std::norm(z1) + std::norm(z2); }
  double norm() const { return std::sqrt(norm_sq()); }
  bool on_sphere(double eps = kGeomEps) const { return std::abs(norm_sq() - 1.0) <= eps; }
  bool interior() const { return norm_sq() < 1.0; }

  friend BallPoint operator+(const BallPoint& a, const BallPoint& b) { return {a.z1 + b.z1, a.z2 + b.z2}; }
  friend BallPoint operator-(const BallPoint& a, const BallPoint& b) { return {a.z1 - b.z1, a.z2 - b.z2}; }
  friend BallPoint operator*(Complex s, const BallPoint& a) { return {s * a.z1, s * a.z2}; }
  friend bool operator==(const BallPoint&, const BallPoint&) = default;
};

/// Hermitian inner product <a,b> = a1 conj(b1) + a2 conj(b2).
inline Complex inner(const BallPoint& a, const BallPoint& b) {
  return a.z1 * std::conj(b.z1) + a.z2 * std::conj(b.z2);
}

}  // namespace linext
