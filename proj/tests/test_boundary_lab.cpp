#include <doctest.h>

#include "linext/boundary_lab.hpp"
#include "support.hpp"

using namespace linext;

TEST_SUITE("boundary_lab") {

TEST_CASE("catalog examples") {
  CHECK(std::abs(make_globevnik(3)({0.0, 1.0}) - 1.0) < 1e-15);
  CHECK(std::abs(make_modulus_sq()({std::polar(0.6, 1.234), 0.8}) - 0.36) < 1e-15);
  CharacterizedSpec s{{{3, 1, Polynomial({0.0, 1.0})}}};
  CHECK(std::abs(make_characterized(s)({0.6, 0.8}) - 0.48) < 1e-15);
}

TEST_CASE("catalog rejects invalid parameters") {
  CHECK_THROWS_AS(make_globevnik(1), UsageError);
  CHECK_THROWS_AS(make_characterized({{{2, 1, Polynomial({1.0})}}}), UsageError);
  CHECK_THROWS_AS(make_characterized({{{3, 1, Polynomial({1.0})}, {3, 1, Polynomial({2.0})}}}), UsageError);
  CHECK_THROWS_AS(parse_function_spec("bessel:k=2"), UsageError);
  CHECK_THROWS_AS(parse_function_spec("globevnik:k=x"), UsageError);
  CHECK_THROWS_AS(parse_function_spec("charspec:/nonexistent/spec.json"), UsageError);
}

TEST_CASE("function spec grammar") {
  const BallPoint z{{0.3, 0.1}, {0.5, -0.2}};
  CHECK(std::abs(parse_function_spec("poly:1+2z1*z2")(z) - (1.0 + 2.0 * z.z1 * z.z2)) < 1e-15);
  CHECK(parse_function_spec("poly:z1").family() == Family::holomorphic_poly);
  CHECK(std::abs(parse_function_spec("rpoly:z1*z1b")(z) - std::norm(z.z1)) < 1e-15);
  CHECK(parse_function_spec("modsq").family() == Family::modulus_sq);
  CHECK(parse_function_spec("modulus_sq").family() == Family::modulus_sq);
  CHECK(parse_function_spec("globevnik:k=3").family() == Family::globevnik);
}

TEST_CASE("charspec json round trip") {
  const CharacterizedSpec s = CharacterizedSpec::random(42, 5, 3);
  const CharacterizedSpec t = CharacterizedSpec::from_json_text(s.to_json_text());
  REQUIRE(t.terms.size() == s.terms.size());
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    CHECK(t.terms[i].nu == s.terms[i].nu);
    CHECK(t.terms[i].j == s.terms[i].j);
    CHECK(t.terms[i].h.coeffs() == s.terms[i].h.coeffs());
  }
  CHECK_THROWS_AS(CharacterizedSpec::from_json_text("{\"terms\": [{\"nu\": 1, \"j\": 1, \"h\": [1]}]}"), UsageError);
  CHECK_THROWS_AS(CharacterizedSpec::from_json_text("not json"), UsageError);
}

TEST_CASE("evaluate on circle examples") {
  const BoundaryFunction one = make_custom("one", [](const BallPoint&) { return Complex(1.0); });
  for (const Complex v : evaluate_on_circle(one, ComplexLine::make({0.2, 0.1}, {0.3, 1.0}), 16)) CHECK(v == 1.0);

  const BoundaryFunction z1 = parse_function_spec("poly:z1");
  const auto v = evaluate_on_circle(z1, {{}, {1.0, 0.0}}, 4);
  const Complex want[] = {1.0, {0, 1}, -1.0, {0, -1}};
  for (int j = 0; j < 4; ++j) CHECK(std::abs(v[j] - want[j]) < 1e-15);

  const ComplexLine l{{0.3, 0.0}, {0.0, 1.0}};
  const LineBoundaryCircle c = line_boundary_circle(l);
  const auto g = evaluate_on_circle(make_globevnik(3), l, 64);
  for (int j = 0; j < 64; ++j) {
    const Complex lam = c.lambda0 + std::polar(c.rho, 2.0 * M_PI * j / 64);
    CHECK(std::abs(g[j] - std::pow(lam, 4) / (c.rho * c.rho)) < 1e-14);
  }
  CHECK_THROWS_AS(evaluate_on_circle(one, l, 24), UsageError);
}

TEST_CASE("property: real families sample to real values") {
  std::mt19937_64 rng(21);
  const BoundaryFunction f = make_modulus_sq();
  for (int i = 0; i < 20; ++i) {
    const auto v = evaluate_on_circle(f, ComplexLine::make(testing::random_ball(rng, 0.8), testing::random_sphere(rng)), 64);
    for (const Complex x : v) CHECK(std::abs(x.imag()) < 1e-14);
  }
}

TEST_CASE("property: characterized terms decay at the singular set") {
  const CharacterizedSpec s = CharacterizedSpec::random(5, 6, 3);
  const BoundaryFunction f = make_characterized(s);
  CHECK(f({0.4, 0.0}) == s.term(0, 0)(0.4));
  auto bound = [&](Complex z1, double r) {
    double b = 0.0;
    for (const auto& t : s.terms)
      if (t.nu > 0) b += std::abs(t.h(z1)) * std::pow(r, t.nu - 2 * t.j);
    return b;
  };
  for (const double r : {1e-3, 1e-6}) {
    const Complex z1 = 0.5;
    const Complex z2 = std::polar(r, 0.7);
    const Complex rest = f({z1, z2}) - s.term(0, 0)(z1);
    CHECK(std::abs(rest) <= bound(z1, r) * (1 + 1e-12));
  }
  CHECK(bound(0.5, 1e-6) < bound(0.5, 1e-3));
}

TEST_CASE("property: globevnik is a single characterized term") {
  std::mt19937_64 rng(22);
  for (int k = 2; k <= 4; ++k) {
    const BoundaryFunction g = make_globevnik(k);
    const BoundaryFunction c = make_characterized({{{k + 1, 1, Polynomial({1.0})}}});
    for (int i = 0; i < 100; ++i) {
      const BallPoint z = testing::random_sphere(rng);
      CHECK(std::abs(g(z) - c(z)) < 1e-14);
    }
  }
}

TEST_CASE("smoothness hints select node counts") {
  CHECK(parse_function_spec("poly:z1").smoothness().kind == Smoothness::Kind::analytic);
  CHECK(make_globevnik(3).smoothness().kind == Smoothness::Kind::finitely_smooth);
  CHECK(make_globevnik(3).singular_set() == SingularSet::z2_zero);
}

}  // TEST_SUITE
