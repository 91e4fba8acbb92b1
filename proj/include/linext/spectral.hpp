#pragma once

#include <map>
#include <span>
#include <vector>

#include "linext/types.hpp"

namespace linext {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place radix-2 DFT, X[m] = sum_j x[j] exp(-2 pi i m j / N).  N must be
/// a power of two.
void fft(std::span<Complex> x);

/// All N discrete Fourier coefficients g^(m) = (1/N) sum_j g_j exp(-i m theta_j),
/// stored with negative indices wrapped (index m at slot m mod N).
std::vector<Complex> fourier_coefficients(std::span<const Complex> samples);

/// g^(m) for every m in [lo, hi].  Requires N a power of two and |m| < N/2
/// (the alias-safe band); throws UsageError otherwise.
std::map<int, Complex> periodic_fourier_coeffs(std::span<const Complex> samples, int lo, int hi);

/// Sample angles theta_j = 2 pi j / N.
std::vector<double> uniform_angles(std::size_t n);

/// Gauss-Legendre rule on [0, 1]: nodes ascending, weights summing to 1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre_unit(int n);

/// n Chebyshev points of the first kind mapped to [a, b], ascending.
std::vector<double> chebyshev_points(double a, double b, int n);

}  // namespace linext
