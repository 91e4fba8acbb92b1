#include <doctest.h>

#include "linext/poisson.hpp"
#include "support.hpp"

using namespace linext;

namespace {

const SphereQuadrature& quad() {
  static const SphereQuadrature q = SphereQuadrature::product();
  return q;
}

BoundaryFunction one() {
  return make_custom("one", [](const BallPoint&) { return Complex(1.0); }, Smoothness::analytic());
}

}  // namespace

TEST_SUITE("poisson") {

TEST_CASE("kernel examples") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) CHECK(kernel({}, testing::random_sphere(rng)) == 1.0);
  CHECK(std::abs(kernel({0.5, 0.0}, {1.0, 0.0}) - 9.0) < 1e-14);
  CHECK_THROWS_AS(kernel({1.0, 0.0}, {1.0, 0.0}), DomainError);
}

TEST_CASE("kernel invariance holds as a measure, not pointwise") {
  const BallPoint z{0.2, 0.1}, xi{0.6, 0.8};
  const BallMobius w(Unitary::identity(), 0.3, Unitary::identity());
  CHECK(std::abs(kernel(w(z), w(xi)) - kernel(z, xi)) > 1.0);
  CHECK(kernel_invariance_defect(w, z, xi) < 1e-12);
}

TEST_CASE("quadrature weights and exactness") {
  const SphereQuadrature& q = quad();
  double s = 0.0;
  for (double w : q.weights) {
    CHECK(w > 0.0);
    s += w;
  }
  CHECK(std::abs(s - 1.0) < 1e-13);
  // |z1|^2 has mean 1/2, |z1|^4 has mean 1/3 for the normalized measure on S^3.
  long double m2 = 0.0, m4 = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    m2 += q.weights[i] * std::norm(q.nodes[i].z1);
    m4 += q.weights[i] * std::pow(std::norm(q.nodes[i].z1), 2);
  }
  CHECK(std::abs(double(m2) - 0.5) < 1e-13);
  CHECK(std::abs(double(m4) - 1.0 / 3.0) < 1e-13);
  CHECK(q.exact_for(2, 2, 1, 1));
  CHECK_FALSE(q.exact_for(40, 40, 40, 40));
  CHECK_THROWS_AS(SphereQuadrature::product(30, 64, 32), UsageError);
}

TEST_CASE("integral examples") {
  CHECK(std::abs(integral(one(), {0.3, {0.0, 0.2}}, quad()).value - 1.0) < 1e-10);
  std::mt19937_64 rng(42);
  const BoundaryFunction z1 = parse_function_spec("poly:z1");
  for (int i = 0; i < 20; ++i) {
    const BallPoint z = testing::random_ball(rng, 0.7);
    CHECK(std::abs(integral(z1, z, quad()).value - z.z1) < 1e-8);
  }
  CHECK(std::abs(integral(make_modulus_sq(), {}, quad()).value - 0.5) < 1e-13);
}

TEST_CASE("integral flags points near the sphere") {
  const PoissonValue v = integral(one(), {0.99, 0.0}, quad());
  CHECK(v.inconclusive);
  CHECK_FALSE(integral(one(), {0.5, 0.0}, quad()).inconclusive);
}

TEST_CASE("invariant laplacian examples") {
  const auto c = [](const BallPoint&) { return Complex(2.0, -1.0); };
  CHECK(std::abs(invariant_laplacian_fd(c, {0.2, 0.1}, 1e-3)) < 1e-8);
  const auto hol = [](const BallPoint& z) { return z.z1 * z.z2; };
  CHECK(std::abs(invariant_laplacian_fd(hol, {0.2, 0.1}, 1e-3)) < 1e-6);
  const auto pf = poisson_extension(make_modulus_sq(), quad());
  CHECK(std::abs(invariant_laplacian_fd(pf, {0.2, 0.1}, 1e-3)) < 1e-4);
  // |z1|^2 is not M-harmonic: its invariant Laplacian is 4 (1 - |z|^2)(1 - |z1|^2).
  const auto m = [](const BallPoint& z) { return Complex(std::norm(z.z1)); };
  const BallPoint z{0.2, 0.1};
  CHECK(std::abs(invariant_laplacian_fd(m, z, 1e-3) - 4.0 * (1 - z.norm_sq()) * (1 - 0.04)) < 1e-6);
  CHECK_THROWS_AS(invariant_laplacian_fd(c, {0.2, 0.1}, 1e-7), UsageError);
  CHECK_THROWS_AS(invariant_laplacian_fd(c, {0.999, 0.0}, 1e-3), DomainError);
}

TEST_CASE("property: normalization on |z| <= 0.7") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const BallPoint z = testing::random_ball(rng, 0.7);
    CHECK(std::abs(integral(one(), z, quad()).value - 1.0) < 1e-9);
  }
  CHECK(std::abs(integral(one(), {0.7, 0.0}, quad()).value - 1.0) < 1e-9);
  CHECK(std::abs(integral(one(), {0.0, {0.0, 0.7}}, quad()).value - 1.0) < 1e-9);
}

TEST_CASE("property: kernel positivity and measure invariance") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 200; ++i) {
    const BallMobius w = testing::random_automorphism(rng, 0.7);
    const BallPoint z = testing::random_ball(rng, 0.7), xi = testing::random_sphere(rng);
    CHECK(kernel(z, xi) > 0.0);
    CHECK(kernel_invariance_defect(w, z, xi) / std::max(1.0, kernel(z, xi)) < 1e-11);
  }
}

TEST_CASE("property: boundary limit improves toward the sphere") {
  std::mt19937_64 rng(45);
  const SphereQuadrature fine = SphereQuadrature::product(256, 256, 128);
  for (const char* spec : {"modsq", "poly:z1*z2+1"}) {
    const BoundaryFunction f = parse_function_spec(spec);
    const BallPoint zeta = testing::random_sphere(rng);
    double prev = INFINITY;
    for (const double r : {0.9, 0.95, 0.99}) {
      const double err = std::abs(integral(f, r * zeta, fine).value - f(zeta));
      CHECK(err < prev);
      prev = err;
    }
  }
}

TEST_CASE("property: Poisson integrals are M-harmonic") {
  std::mt19937_64 rng(46);
  for (const char* spec : {"modsq", "rpoly:z1*z2b+z1b^2", "poly:z1^2*z2"}) {
    const auto pf = poisson_extension(parse_function_spec(spec), quad());
    for (int i = 0; i < 10; ++i) CHECK(std::abs(invariant_laplacian_fd(pf, testing::random_ball(rng, 0.5), 1e-3)) < 1e-4);
  }
}

}  // TEST_SUITE
