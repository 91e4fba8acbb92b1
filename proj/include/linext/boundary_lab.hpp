#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "linext/geometry.hpp"
#include "linext/polynomial.hpp"

namespace linext {

enum class Family { holomorphic_poly, modulus_sq, globevnik, characterized, custom };
const char* to_string(Family f);

struct Smoothness {
  enum class Kind { analytic, finitely_smooth, continuous };
  Kind kind = Kind::continuous;
  int order = 0;  // meaningful for finitely_smooth only

  static Smoothness analytic() { return {Kind::analytic, 0}; }
  static Smoothness finite(int order) { return {Kind::finitely_smooth, order}; }
  static Smoothness continuous() { return {Kind::continuous, 0}; }
};

enum class SingularSet { empty, z2_zero };

/// One term h(z1) z2^nu / |z2|^(2j) of a two-bundle-extendible function.
struct CharacterizedTerm {
  int nu = 0;
  int j = 0;
  Polynomial h;
};

/// Finite family of holomorphic polynomials h^nu_j.  Admissible indices are
/// 0 <= 2j < nu, plus the holomorphic slice (nu, j) = (0, 0).
struct CharacterizedSpec {
  std::vector<CharacterizedTerm> terms;

  /// Throws UsageError on an inadmissible index or a duplicate (nu, j).
  void validate() const;
  int max_nu() const;
  int max_degree() const;
  /// The polynomial for (nu, j), or the zero polynomial when absent.
  Polynomial term(int nu, int j) const;

  static bool admissible(int nu, int j) { return j >= 0 && nu >= 0 && (2 * j < nu || (nu == 0 && j == 0)); }

  /// Random spec with every admissible (nu, j), nu <= nu_max, and
  /// polynomials of exact degree `degree`; deterministic in `seed`.
  static CharacterizedSpec random(std::uint64_t seed, int nu_max, int degree);

  /// JSON layout: {"terms": [{"nu": 3, "j": 1, "h": [[re, im], ...]}]}.
  /// A coefficient may also be a bare real number.
  static CharacterizedSpec from_json_text(const std::string& text);
  std::string to_json_text() const;
};

/// A continuous function on the sphere of C^2 tagged with its family and
/// regularity.  Evaluators accept any finite point; off the sphere they
/// evaluate the defining formula, which decomposition code relies on.
class BoundaryFunction {
public:
  using Evaluator = std::function<Complex(const BallPoint&)>;

  BoundaryFunction(Family family, std::string description, Evaluator eval, Smoothness smooth,
                   SingularSet singular = SingularSet::empty);

  Complex operator()(const BallPoint& z) const { return (*eval_)(z); }

  Family family() const { return family_; }
  const std::string& description() const { return description_; }
  Smoothness smoothness() const { return smooth_; }
  SingularSet singular_set() const { return singular_; }

  /// Non-null only for the characterized family.
  const CharacterizedSpec* characterized_spec() const { return spec_.get(); }

  /// f o U for a unitary U, tagged custom and keeping the smoothness hint.
  BoundaryFunction composed(const Unitary& u) const;

private:
  friend BoundaryFunction make_characterized(CharacterizedSpec spec);

  Family family_;
  std::string description_;
  std::shared_ptr<const Evaluator> eval_;
  Smoothness smooth_;
  SingularSet singular_;
  std::shared_ptr<const CharacterizedSpec> spec_;
};

BoundaryFunction make_holomorphic_poly(BallPolynomial p);
/// Polynomial in z1, z2 and conjugates; tagged custom with analytic hint.
BoundaryFunction make_real_analytic_poly(BallPolynomial p);
BoundaryFunction make_modulus_sq();
/// z2^k / conj(z2), set to 0 on {z2 = 0}.  Throws UsageError for k < 2.
BoundaryFunction make_globevnik(int k);
/// sum h^nu_j(z1) z2^nu / |z2|^(2j).  Throws UsageError on an invalid spec.
BoundaryFunction make_characterized(CharacterizedSpec spec);
BoundaryFunction make_custom(std::string name, BoundaryFunction::Evaluator eval,
                             Smoothness smooth = Smoothness::continuous());

/// Parses the CLI function grammar:
///   poly:<holomorphic polynomial in z1, z2>     e.g. poly:1+2z1*z2
///   rpoly:<polynomial in z1, z2, z1b, z2b>      e.g. rpoly:z1*z1b
///   modsq | modulus_sq
///   globevnik:k=<int>
///   charspec:<path to JSON spec>
BoundaryFunction parse_function_spec(const std::string& text);

/// f(line.at(lambda0 + rho exp(i theta_j))), theta_j = 2 pi j / N.  N must be
/// a power of two >= 4.
std::vector<Complex> evaluate_on_circle(const BoundaryFunction& f, const ComplexLine& line, std::size_t n);

}  // namespace linext
