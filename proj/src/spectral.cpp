#include "linext/spectral.hpp"

#include <cmath>
#include <numbers>

namespace linext {

void fft(std::span<Complex> x) {
  const std::size_t n = x.size();
  if (!is_power_of_two(n)) throw UsageError("fft: length must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  // Twiddles come from the exact angle of each index rather than a running
  // product, which keeps the error flat in N.
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    std::vector<Complex> w(half);
    for (std::size_t k = 0; k < half; ++k) w[k] = std::polar(1.0, -2.0 * std::numbers::pi * double(k) / double(len));
    for (std::size_t s = 0; s < n; s += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex u = x[s + k];
        const Complex v = x[s + k + half] * w[k];
        x[s + k] = u + v;
        x[s + k + half] = u - v;
      }
    }
  }
}

std::vector<Complex> fourier_coefficients(std::span<const Complex> samples) {
  std::vector<Complex> out(samples.begin(), samples.end());
  fft(out);
  const double inv = 1.0 / double(out.size());
  for (Complex& c : out) c *= inv;
  return out;
}

std::map<int, Complex> periodic_fourier_coeffs(std::span<const Complex> samples, int lo, int hi) {
  const std::size_t n = samples.size();
  if (!is_power_of_two(n)) throw UsageError("periodic_fourier_coeffs: sample count must be a power of two");
  const long half = static_cast<long>(n / 2);
  if (lo > hi || std::abs(long(lo)) >= half || std::abs(long(hi)) >= half)
    throw UsageError("periodic_fourier_coeffs: index outside the alias-safe band |m| < N/2");
  const std::vector<Complex> all = fourier_coefficients(samples);
  std::map<int, Complex> out;
  for (int m = lo; m <= hi; ++m) out[m] = all[(m % long(n) + long(n)) % long(n)];
  return out;
}

std::vector<double> uniform_angles(std::size_t n) {
  std::vector<double> th(n);
  for (std::size_t j = 0; j < n; ++j) th[j] = 2.0 * std::numbers::pi * double(j) / double(n);
  return th;
}

GaussRule gauss_legendre_unit(int n) {
  if (n < 1) throw UsageError("gauss_legendre_unit: need at least one node");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton on P_n from the Tricomi initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map [-1, 1] -> [0, 1]; halve the weights.
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

std::vector<double> chebyshev_points(double a, double b, int n) {
  std::vector<double> pts(n);
  for (int k = 0; k < n; ++k) {
    const double x = -std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n));
    pts[k] = 0.5 * (a + b) + 0.5 * (b - a) * x;
  }
  return pts;
}

}  // namespace linext
