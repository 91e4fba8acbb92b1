#include <doctest.h>

#include "linext/disc_analysis.hpp"
#include "support.hpp"

using namespace linext;

namespace {

std::vector<Complex> on_circle(const DiscEvaluator& g, const DiscCircle& c, std::size_t n) {
  std::vector<Complex> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = g(c.e + std::polar(c.t, 2.0 * M_PI * double(j) / double(n)));
  return s;
}

PolyanalyticFunction zbar_pow(int k, Polynomial h = Polynomial({1.0})) {
  std::vector<Polynomial> v(k + 1);
  v[k] = std::move(h);
  return PolyanalyticFunction(std::move(v));
}

DiscCircle random_circle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.2, 0.9);
  const Complex c = testing::random_disc(rng, 0.8);
  const HyperbolicCircle h = hyperbolic_to_euclidean(c, u(rng));
  return {h.e, h.t};
}

}  // namespace

TEST_SUITE("disc_analysis") {

TEST_CASE("polyanalytic evaluation examples") {
  CHECK(polyanalytic_eval(PolyanalyticFunction({Polynomial({1.0})}), {0.3, 0.7}) == 1.0);
  CHECK(std::abs(polyanalytic_eval(zbar_pow(1), {0.3, 0.4}) - Complex(0.3, -0.4)) < 1e-15);
  const PolyanalyticFunction e({Polynomial({0.0, 1.0}), Polynomial{}, Polynomial({1.0})});
  CHECK(std::abs(polyanalytic_eval(e, {0, 0.5}) - Complex(-0.25, 0.5)) < 1e-15);
  CHECK(e.order() == 2);
  CHECK(PolyanalyticFunction::parse("z + zb^2")(Complex(0, 0.5)) == e(Complex(0, 0.5)));
}

TEST_CASE("closed form extension examples") {
  const CircleExtension a = closed_form_circle_extension(zbar_pow(1), {0.0, 0.5});
  for (int j = 0; j < 16; ++j) {
    const Complex z = std::polar(0.5, 2 * M_PI * j / 16);
    CHECK(std::abs(*a(z) - std::conj(z)) < 1e-15);
    CHECK(std::abs(*a(0.5 * z) - 0.25 / (0.5 * z)) < 1e-14);
  }
  CHECK_FALSE(a(0.0).has_value());

  const CircleExtension b = closed_form_circle_extension(zbar_pow(2), {0.2, 0.3});
  const auto lb = b.laurent();
  CHECK(std::abs(lb.at(-2) - 0.0081) < 1e-15);
  CHECK(b.declared_pole_order() == 2);
  CHECK(lb.begin()->first == -2);

  const CircleExtension c = closed_form_circle_extension(zbar_pow(1), {0.2, 0.5});
  CHECK(std::abs(*c(-1.05)) < 1e-14);

  CHECK_THROWS_AS(closed_form_circle_extension(zbar_pow(1), {0.6, 0.5}), DomainError);
}

TEST_CASE("circle coefficient examples") {
  const DiscCircle c{0.5, 0.3};
  const CircleExtensionReport h = circle_mero_coeffs(on_circle([](Complex z) { return 1.0 + z * z * z; }, c, 128), c, 16, 1e-9);
  CHECK(h.detected_order == 0);

  const CircleExtensionReport zb = circle_mero_coeffs(on_circle([](Complex z) { return std::conj(z); }, c, 128), c, 16, 1e-9);
  CHECK(std::abs(zb.coeffs.at(0) - 0.5) < 1e-15);
  CHECK(std::abs(zb.coeffs.at(-1) - 0.3) < 1e-15);
  CHECK(zb.detected_order == 1);
  CHECK(zb.verdict(1) == Verdict::pass);
  CHECK(zb.verdict(0) == Verdict::fail);

  const CircleExtensionReport z2 = circle_mero_coeffs(on_circle(DiscEvaluator(zbar_pow(2)), c, 128), c, 16, 1e-9);
  CHECK(z2.detected_order == 2);
  CHECK(std::abs(z2.coeffs.at(-2) - 0.09) < 1e-15);

  CHECK_THROWS_AS(circle_mero_coeffs(on_circle(DiscEvaluator(zbar_pow(2)), c, 32), c, 16, 1e-9), UsageError);
}

TEST_CASE("knife-edge coefficients are inconclusive") {
  const DiscCircle c{0.0, 0.5};
  const CircleExtensionReport r = circle_mero_coeffs([](Complex z) { return 1.0 + 1e-8 * std::conj(z); }, c);
  CHECK(r.ambiguous);
  CHECK(r.verdict(0) == Verdict::inconclusive);
}

TEST_CASE("aliasing-dominated data is inconclusive") {
  const DiscCircle c{0.1, 0.5};
  const CircleExtensionReport r = circle_mero_coeffs([](Complex z) { return Complex(std::abs(z - 0.6)); }, c);
  CHECK(r.saturated);
  CHECK(r.verdict(16) == Verdict::inconclusive);
}

TEST_CASE("hyperbolic family examples") {
  const std::vector<double> radii = {0.1, 0.3, 0.5, 0.7, 0.9};
  const DiscEvaluator hol = [](Complex z) { return 1.0 - 2.0 * z + z * z * z; };
  CHECK(hyperbolic_family_test(hol, {0.2, -0.4}, 0, radii).verdict == Verdict::pass);
  CHECK(hyperbolic_family_test(hol, {0.2, -0.4}, -3, radii).verdict == Verdict::pass);

  const DiscEvaluator zb = [](Complex z) { return std::conj(z); };
  CHECK(hyperbolic_family_test(zb, 0.3, 1, radii).verdict == Verdict::pass);
  CHECK(hyperbolic_family_test(zb, 0.3, 0, radii).verdict == Verdict::fail);

  for (int nu = 1; nu <= 3; ++nu) {
    const DiscEvaluator b = zbar_pow(nu, Polynomial({2.0, 1.0}));
    CHECK(hyperbolic_family_test(b, 0.2, nu, radii).verdict == Verdict::pass);
    CHECK(hyperbolic_family_test(b, {0.0, -0.3}, nu, radii).verdict == Verdict::pass);
  }
  CHECK_THROWS_AS(hyperbolic_family_test(zb, 1.0, 1, radii), DomainError);
  CHECK_THROWS_AS(hyperbolic_family_test(zb, 0.0, 1, {1.2}), DomainError);
}

TEST_CASE("polyanalytic fit examples") {
  const PolyanalyticFit a = polyanalytic_fit([](Complex z) { return std::conj(z) * z; }, 1, default_fit_radii(1), 64, 4);
  CHECK(a.residual < 1e-10);
  CHECK(std::abs(a.function.coefficient(1).coeff(1) - 1.0) < 1e-10);
  CHECK(a.function.coefficient(0).is_zero(1e-10));

  const PolyanalyticFit b = polyanalytic_fit([](Complex z) { return 1.0 + z * z - 3.0 * z * z * z; }, 3, default_fit_radii(3), 64, 4);
  for (int k = 1; k <= 3; ++k) CHECK(b.function.coefficient(k).is_zero(1e-10));

  const PolyanalyticFunction r = PolyanalyticFunction::random(7, 3, 5);
  const PolyanalyticFit c = polyanalytic_fit(r, 3, default_fit_radii(3), 64, 5);
  double err = 0.0, scale = 0.0;
  for (int k = 0; k <= 3; ++k)
    for (int p = 0; p <= 5; ++p) {
      err = std::max(err, std::abs(c.function.coefficient(k).coeff(p) - r.coefficient(k).coeff(p)));
      scale = std::max(scale, std::abs(r.coefficient(k).coeff(p)));
    }
  CHECK(err / scale < 1e-8);
}

TEST_CASE("polyanalytic fit rejects bad radii") {
  const DiscEvaluator zb = [](Complex z) { return std::conj(z); };
  CHECK_THROWS_AS(polyanalytic_fit(zb, 4, {0.5, 0.5 + 1e-7, 0.5 + 2e-7, 0.5 + 3e-7, 0.5 + 4e-7}, 64, 4), IllConditioned);
  CHECK_THROWS_AS(polyanalytic_fit(zb, 3, {0.5, 0.6}, 64, 4), UsageError);
  CHECK_THROWS_AS(polyanalytic_fit(zb, 1, default_fit_radii(1), 8, 4), UsageError);
}

TEST_CASE("property: pole order detection is exact on generic circles") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    const int order = i % 5;
    const PolyanalyticFunction e = PolyanalyticFunction::random(1000 + i, order, 4);
    const CircleExtensionReport r = circle_mero_coeffs(e, random_circle(rng));
    CHECK(r.detected_order == order);
    CHECK_FALSE(r.ambiguous);
    CHECK_FALSE(r.saturated);
  }
}

TEST_CASE("property: extension Laurent data matches the sampled coefficients") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 30; ++i) {
    const PolyanalyticFunction e = PolyanalyticFunction::random(2000 + i, i % 4, 3);
    const DiscCircle c = random_circle(rng);
    const CircleExtension x = closed_form_circle_extension(e, c);
    const std::vector<Complex> s = on_circle([&](Complex z) { return *x(z); }, c, 128);
    const CircleExtensionReport r = circle_mero_coeffs(s, c, 16, 1e-9);
    CHECK(r.detected_order == x.declared_pole_order());
    for (const auto& [p, v] : x.laurent())
      if (std::abs(p) <= 16) CHECK(std::abs(r.coeffs.at(p) - v * std::pow(c.t, p)) < 1e-12);
  }
}

TEST_CASE("property: polyanalytic functions pass every hyperbolic family") {
  std::mt19937_64 rng(63);
  std::vector<double> radii;
  for (int i = 0; i < 8; ++i) radii.push_back(0.1 + 0.1 * i);
  for (int i = 0; i < 20; ++i) {
    const int order = i % 5;
    const PolyanalyticFunction e = PolyanalyticFunction::random(3000 + i, order, 4);
    for (int k = 0; k < 5; ++k) CHECK(hyperbolic_family_test(e, testing::random_disc(rng, 0.8), order, radii).verdict == Verdict::pass);
    if (order > 0) CHECK(hyperbolic_family_test(e, testing::random_disc(rng, 0.8), order - 1, radii).verdict == Verdict::fail);
  }
}

TEST_CASE("property: passing two families implies a good polyanalytic fit") {
  std::vector<double> radii;
  for (int i = 0; i < 16; ++i) radii.push_back(0.05 + 0.055 * i);
  for (int i = 0; i < 15; ++i) {
    const int order = i % 4;
    const PolyanalyticFunction e = PolyanalyticFunction::random(4000 + i, order, 4);
    const bool both = hyperbolic_family_test(e, 0.2, order, radii).verdict == Verdict::pass &&
                      hyperbolic_family_test(e, {0.0, -0.3}, order, radii).verdict == Verdict::pass;
    REQUIRE(both);
    CHECK(polyanalytic_fit(e, order, default_fit_radii(order), 64, 4).residual < 1e-8);
  }
}

TEST_CASE("property: centered families behave identically across radii") {
  const PolyanalyticFunction e = PolyanalyticFunction::random(5, 2, 3);
  const FamilyReport f = hyperbolic_family_test(e, 0.0, 2, {0.2, 0.4, 0.6, 0.8});
  for (std::size_t i = 0; i < f.circles.size(); ++i) {
    CHECK(std::abs(f.circles[i].e) < 1e-15);
    CHECK(f.reports[i].detected_order == f.reports[0].detected_order);
  }
}

}  // TEST_SUITE
