#pragma once

#include <random>

#include "linext/geometry.hpp"

namespace testing {

using linext::BallPoint;
using linext::Complex;

inline Complex random_disc(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
}

inline BallPoint random_sphere(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const BallPoint p{{g(rng), g(rng)}, {g(rng), g(rng)}};
  return (1.0 / p.norm()) * p;
}

inline BallPoint random_ball(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return (rmax * std::sqrt(u(rng))) * random_sphere(rng);
}

inline linext::BallMobius random_automorphism(std::mt19937_64& rng, double cmax) {
  return linext::BallMobius(linext::unitary_with_first_column(random_sphere(rng)), random_disc(rng, cmax),
                            linext::unitary_with_first_column(random_sphere(rng)));
}

inline double dist(const BallPoint& a, const BallPoint& b) { return (a - b).norm(); }

}  // namespace testing
