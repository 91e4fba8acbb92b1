#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "linext/boundary_lab.hpp"

namespace linext {

using PointEvaluator = std::function<Complex(const BallPoint&)>;

/// F^nu(z1, r): the nu-th Fourier coefficient of phi -> F(z1, r e^{i phi}),
/// divided by r^nu (phase convention z2 = r > 0).  At r = 0 returns the
/// continuous limit: F(z1, 0) for nu = 0, else 0.  Requires
/// |z1|^2 + r^2 <= 1 and n >= 4|nu| + 16.
Complex angular_slice(const PointEvaluator& F, Complex z1, double r, int nu, std::size_t n);

/// All slices -nu_max..nu_max at once (one FFT).  n must be a power of two
/// with n >= 4 nu_max + 16.
std::vector<Complex> angular_slices(const PointEvaluator& F, Complex z1, double r, int nu_max, std::size_t n);

struct SliceNode {
  Complex z1{};
  double r = 0.0;  // |z2|
};

/// Nodes on the sphere: |z1| on `n_radii` levels in [0, 1] (both ends
/// included), `n_angles` arguments each, r = sqrt(1 - |z1|^2).
std::vector<SliceNode> sphere_nodes(int n_radii, int n_angles);

/// Write-once table of F^nu at grid nodes, nu in [-nu_max, nu_max].
struct SliceGrid {
  int nu_max = 0;
  std::size_t n_phi = 0;
  std::vector<SliceNode> nodes;
  std::vector<std::vector<Complex>> values;  // [node][nu + nu_max]

  Complex slice(std::size_t node, int nu) const;
  /// Node matching (z1, r) to within `tol`, if any.
  std::optional<std::size_t> find(Complex z1, double r, double tol = 1e-12) const;
  /// Slices with max |F^nu r^nu| over the grid above `tol`.
  std::vector<int> active(double tol) const;
};

SliceGrid decompose(const PointEvaluator& F, std::vector<SliceNode> nodes, int nu_max, std::size_t n_phi);

/// Truncated sum over |nu| <= nu_max of F^nu(z1, |z2|) z2^nu.  Exact-node
/// evaluation only: UsageError when (z1, |z2|) is not a grid node or nu_max
/// exceeds the grid.
Complex reconstruct(const SliceGrid& grid, const BallPoint& z, int nu_max);

/// max over grid nodes of |F^nu(z1, r)| (1 - |z1|^2)^nu, for nu >= 0.
double weighted_slice_sup(const SliceGrid& grid, int nu);

/// A slice as a function of z1 and the complexified radial variable w = |z2|^2.
using SliceEvaluator = std::function<Complex(Complex z1, Complex w)>;

/// Sphere data fixes w = 1 - |z1|^2, so this evaluator ignores w and
/// returns the slice at r = sqrt(1 - |z1|^2).
SliceEvaluator sphere_slice_evaluator(const PointEvaluator& F, int nu, std::size_t n_phi);

struct RadialCoefficient {
  Complex a{};  // A_l(z1), Taylor coefficient of w^l
  Complex b{};  // B_l(z1) = A_l(z1) (1 - |z1|^2)^(l + nu)
};

/// A_l by trapezoidal Cauchy coefficient extraction on |w| = 1 - |z1|^2
/// (the l! of the derivative form cancels against the derivative itself),
/// and B_l from it.  DomainError for |z1| >= 1.
RadialCoefficient radial_taylor(const SliceEvaluator& slice, Complex z1, int l, int nu, std::size_t n_w);

struct RadialCoeffs {
  int nu = 0;
  int l_max = 0;
  std::vector<Complex> z1;
  std::vector<std::vector<Complex>> a;  // [l][z1 index]
  std::vector<std::vector<Complex>> b;

  /// sum_l B_l at z1 index i.
  Complex b_sum(std::size_t i) const;
};

RadialCoeffs radial_coeffs(const SliceEvaluator& slice, std::vector<Complex> z1, int nu, int l_max, std::size_t n_w);

/// B^nu(z1) = sum_l B_l(z1) for sphere data, i.e. (1 - |z1|^2)^nu F^nu(z1).
/// Evaluator on the open unit disc.
std::function<Complex(Complex)> sphere_b_series(const PointEvaluator& F, int nu, int l_max = 2, std::size_t n_phi = 64,
                                                std::size_t n_w = 16);

struct CharacterizedFitOptions {
  int nu_max = 6;
  int degree = 4;
  std::vector<double> radii;  // empty: Chebyshev points in [0.35, 0.85]
  std::size_t n_theta = 64;
  std::size_t n_phi = 64;
};

struct CharacterizedFit {
  CharacterizedSpec spec;
  double residual = 0.0;             // max |f - f_fit| at verification sphere points
  double negative_slice_max = 0.0;   // max |F^nu r^nu|, nu < 0, over the radii used
};

/// Recovers h^nu_j from boundary data by fitting
///   B^nu(s e^{i theta}) = sum_j h^nu_j(z1) (1 - s^2)^(nu - j)
/// frequency by frequency over the radii (least squares in (1 - s^2)).
CharacterizedFit fit_characterized(const BoundaryFunction& f, const CharacterizedFitOptions& opt = {});

/// max |c_fit - c_true| / max |c_true| over every coefficient of both specs.
double relative_coefficient_error(const CharacterizedSpec& truth, const CharacterizedSpec& fit);

}  // namespace linext
