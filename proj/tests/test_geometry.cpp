#include <doctest.h>

#include "linext/geometry.hpp"
#include "support.hpp"

using namespace linext;
using testing::dist;

TEST_SUITE("geometry") {

TEST_CASE("disc automorphism examples") {
  CHECK(std::abs(disc_automorphism_apply(0.0, {0.3, 0.4}) - Complex(0.3, 0.4)) < 1e-15);
  CHECK(std::abs(disc_automorphism_apply(0.5, 0.0) - 0.5) < 1e-15);
  CHECK(std::abs(disc_automorphism_apply(0.5, 0.5) - 0.8) < 1e-15);
}

TEST_CASE("axis automorphism examples") {
  CHECK(dist(axis_automorphism_apply(0.0, {0.1, {0, 0.2}}), {0.1, {0, 0.2}}) < 1e-15);
  CHECK(dist(axis_automorphism_apply(0.5, {}), {0.5, 0.0}) < 1e-15);
  const BallPoint w = axis_automorphism_apply(0.5, {0.5, 0.5});
  CHECK(std::abs(w.z1 - 0.8) < 1e-15);
  CHECK(std::abs(w.z2 - 0.34641016151377546) < 1e-15);
  CHECK(std::abs(w.norm_sq() - 0.76) < 1e-14);
}

TEST_CASE("ball automorphism examples") {
  CHECK(ball_automorphism({}).is_identity());
  const BallMobius a = ball_automorphism({0.5, 0.0});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const BallPoint z = testing::random_ball(rng, 0.9);
    CHECK(dist(a(z), axis_automorphism_apply(0.5, z)) < 1e-14);
  }
  const BallPoint target{0.0, {0.0, 0.3}};
  const BallMobius phi = ball_automorphism(target);
  CHECK(dist(phi({}), target) < 1e-12);
  for (int i = 0; i < 10; ++i) CHECK(std::abs(phi(testing::random_sphere(rng)).norm() - 1.0) < 1e-12);
  CHECK_THROWS_AS(ball_automorphism({0.8, 0.6}), DomainError);
}

TEST_CASE("align_to_axis examples") {
  CHECK(align_to_axis({0.2, 0.0}, {-0.4, 0.0}).is_identity());
  const BallMobius s = align_to_axis({}, {0.0, 0.5});
  CHECK(std::abs(s(BallPoint{}).z2) < 1e-12);
  CHECK(std::abs(s(BallPoint{0.0, 0.5}).z2) < 1e-12);
  const BallPoint a{{0.1, 0.1}, 0.2}, b{-0.2, {0, 0.1}};
  const BallMobius psi = align_to_axis(a, b);
  CHECK(std::abs(psi(a).z2) + std::abs(psi(b).z2) < 1e-12);
  CHECK_THROWS_AS(align_to_axis(a, a), DomainError);
  CHECK_THROWS_AS(align_to_axis({1.0, 0.0}, b), DomainError);
}

TEST_CASE("line boundary circle examples") {
  auto check_on_sphere = [](const ComplexLine& l, const LineBoundaryCircle& c) {
    for (int j = 0; j < 64; ++j) {
      const BallPoint p = l.at(c.lambda0 + std::polar(c.rho, 2.0 * M_PI * j / 64));
      CHECK(std::abs(p.norm() - 1.0) < 1e-12);
    }
  };
  ComplexLine l1{{}, {1.0, 0.0}};
  LineBoundaryCircle c1 = line_boundary_circle(l1);
  CHECK(std::abs(c1.lambda0) < 1e-15);
  CHECK(std::abs(c1.rho - 1.0) < 1e-15);
  ComplexLine l2{{0.5, 0.0}, {0.0, 1.0}};
  LineBoundaryCircle c2 = line_boundary_circle(l2);
  CHECK(std::abs(c2.lambda0) < 1e-15);
  CHECK(std::abs(c2.rho - 0.8660254037844386) < 1e-15);
  check_on_sphere(l2, c2);
  ComplexLine l3{{0.5, 0.0}, {1.0, 0.0}};
  LineBoundaryCircle c3 = line_boundary_circle(l3);
  CHECK(std::abs(c3.lambda0 + 0.5) < 1e-15);
  CHECK(std::abs(c3.rho - 1.0) < 1e-15);
  check_on_sphere(l3, c3);
  CHECK_THROWS_AS(line_boundary_circle({{1.0, 0.0}, {0.0, 1.0}}), DomainError);
}

TEST_CASE("hyperbolic circle examples") {
  HyperbolicCircle h = hyperbolic_to_euclidean(0.0, 0.5);
  CHECK(std::abs(h.e) < 1e-15);
  CHECK(std::abs(h.t - 0.5) < 1e-15);
  h = hyperbolic_to_euclidean(0.5, 0.5);
  CHECK(std::abs(h.e - 0.4) < 1e-15);
  CHECK(std::abs(h.t - 0.4) < 1e-15);
  h = hyperbolic_to_euclidean({0, 0.3}, 0.8);
  CHECK(std::abs(h.e - Complex(0, 0.108 / 0.9424)) < 1e-15);
  CHECK(std::abs(h.e - Complex(0, 0.1146010)) < 1e-7);
  CHECK(std::abs(h.t - 0.7724958) < 1e-7);
}

TEST_CASE("complex collinearity") {
  CHECK(complex_collinear({{0.3, 0.0}, {-0.2, 0.0}}));
  CHECK(complex_collinear({{0.3, 0.0}, {-0.2, 0.0}, {0.1, 0.0}}));
  CHECK_FALSE(complex_collinear({{0.3, 0.0}, {-0.2, 0.0}, {0.0, 0.3}}));
}

TEST_CASE("property: automorphisms preserve the sphere and invert exactly") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const BallMobius w = testing::random_automorphism(rng, 0.95);
    const BallPoint z = testing::random_sphere(rng);
    CHECK(std::abs(w(z).norm_sq() - 1.0) < 1e-11);
    const BallPoint y = testing::random_ball(rng, 0.99);
    CHECK(w(y).norm_sq() < 1.0);
    CHECK(dist(w.inverse()(w(y)), y) < 1e-12);
  }
}

TEST_CASE("property: disc automorphism group law") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Complex c = testing::random_disc(rng, 0.99), z = testing::random_disc(rng, 0.99);
    CHECK(std::abs(disc_automorphism_apply(-c, disc_automorphism_apply(c, z)) - z) < 1e-12);
  }
}

TEST_CASE("property: hyperbolic circles are Euclidean circles") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int i = 0; i < 100; ++i) {
    const Complex c = testing::random_disc(rng, 0.95);
    const double r = u(rng);
    const HyperbolicCircle h = hyperbolic_to_euclidean(c, r);
    CHECK(std::abs(h.e) + h.t <= 1.0 + 1e-12);
    double worst = 0.0;
    for (int j = 0; j < 64; ++j)
      worst = std::max(worst, std::abs(std::abs(disc_automorphism_apply(c, std::polar(r, 2.0 * M_PI * j / 64)) - h.e) - h.t));
    CHECK(worst < 1e-11);
  }
}

TEST_CASE("property: boundary circles land on the sphere") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const ComplexLine l = ComplexLine::make(testing::random_ball(rng, 0.95), testing::random_sphere(rng));
    const LineBoundaryCircle c = line_boundary_circle(l);
    for (int j = 0; j < 16; ++j) CHECK(std::abs(l.at(c.lambda0 + std::polar(c.rho, 2.0 * M_PI * j / 16)).norm() - 1.0) < 1e-11);
  }
}

TEST_CASE("property: canonicalization is idempotent bit for bit") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const ComplexLine l{testing::random_ball(rng, 0.9), (1.0 + i) * testing::random_sphere(rng)};
    const ComplexLine c = canonical(l);
    const ComplexLine cc = canonical(c);
    CHECK(c.key() == cc.key());
    const Complex big = std::abs(c.dir.z1) >= std::abs(c.dir.z2) ? c.dir.z1 : c.dir.z2;
    CHECK(big.imag() == 0.0);
    CHECK(big.real() > 0.0);
    CHECK(std::abs(c.dir.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("property: alignment puts random pairs on the axis") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const BallPoint a = testing::random_ball(rng, 0.9), b = testing::random_ball(rng, 0.9);
    const BallMobius psi = align_to_axis(a, b);
    CHECK(std::abs(psi(a).z2) < 1e-12);
    CHECK(std::abs(psi(b).z2) < 1e-12);
  }
}

}  // TEST_SUITE
