#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linext/boundary_lab.hpp"
#include "linext/geometry.hpp"

namespace linext {

/// Quadrature and decision parameters shared by the moment tests.
struct MomentOptions {
  int m_max = 32;
  std::size_t n = 512;  // 0 selects by the function's smoothness hint
  double tol = 1e-8;
  int pole_budget = 0;
  /// On failure, recompute at 2N to tell a resolved coefficient (fail) from
  /// an aliasing-dominated one (inconclusive).
  bool saturation_check = true;
};

/// 512 nodes for analytic data, 2048 otherwise.
std::size_t default_nodes(const BoundaryFunction& f);

/// Per-circle evidence.  Residual keys are Fourier indices m < 0 of the
/// on-circle samples.  For the line route they run over
/// [-m_max, -pole_budget - 1]; the automorphism route reports moment
/// (f o omega)_k at index -(k + 1), so its keys run over [-(m_max + 1), -1].
/// The dlambda factor of the contour moments is dropped: it shifts the index
/// by one and scales by a constant.
struct MomentReport {
  std::string route;  // "line" or "automorphism"
  ComplexLine line;
  LineBoundaryCircle circle;
  std::map<int, double> residuals;
  double max_residual = 0.0;
  int worst_index = 0;
  Verdict verdict = Verdict::pass;
  std::size_t n = 0;       // requested nodes
  std::size_t n_used = 0;  // nodes behind the reported residuals
  int m_max = 0;
  int pole_budget = 0;
  double tol = 0.0;
  double aliasing_estimate = 0.0;  // max |g_N(m) - g_2N(m)|, 0 when not doubled

  bool pass() const { return verdict == Verdict::pass; }
};

/// Negative Laurent coefficients of f on L intersected with the sphere, about
/// the circle's own center.  With pole_budget 0 the verdict is the holomorphic
/// extendibility test for the slice.
MomentReport line_extension_residuals(const BoundaryFunction& f, const ComplexLine& line, const MomentOptions& opt = {});

/// Moments (f o omega)_k(z), 0 <= k <= m_max, from the Fourier coefficients of
/// theta -> f(omega(exp(i theta) z)).  `z` must be a sphere point.
MomentReport automorphism_moment_residuals(const BoundaryFunction& f, const BallMobius& omega, const BallPoint& z,
                                           const MomentOptions& opt = {});

/// The complex line omega({lambda z}) through omega(0).
ComplexLine image_line(const BallMobius& omega, const BallPoint& z);

/// Deterministic directions spread over the space of lines through a point:
/// a golden-angle spiral on the Riemann sphere of directions (modulo phase),
/// rotated by a unitary drawn from `seed` (seed 0: no rotation).
std::vector<BallPoint> sample_directions(std::size_t count, std::uint64_t seed);

struct BundleOptions {
  std::size_t lines_per_vertex = 200;
  std::uint64_t seed = 0;
  MomentOptions moments{};
  unsigned threads = 0;  // 0: LINEXT_THREADS or hardware concurrency
};

struct BundleReport {
  std::vector<BallPoint> vertices;
  std::size_t lines_per_vertex = 0;
  std::uint64_t seed = 0;
  std::vector<MomentReport> reports;  // sorted by canonical line key
  Verdict verdict = Verdict::pass;
  std::size_t worst = 0;  // index into reports with the largest residual
  bool collinear = false; // every vertex on one complex line

  bool pass() const { return verdict == Verdict::pass; }
};

/// Runs line_extension_residuals (pole budget 0) on sampled lines through
/// every vertex.  Throws UsageError on an empty or repeated vertex list and
/// DomainError on a vertex outside the open ball.
BundleReport bundle_test(const BoundaryFunction& f, const std::vector<BallPoint>& vertices, const BundleOptions& opt = {});

/// Worker count from LINEXT_THREADS, else hardware concurrency.
unsigned default_thread_count();

}  // namespace linext
