#include "graphent/two_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace graphent {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

double hs_distance_sq_analytic(double p, double theta) {
  check_probability(p);
  const double p2 = p * p;
  const double q = 1.0 - p;
  return 0.25 - 2.0 * p2 + 4.0 * p2 * p - 2.0 * p2 * p2 +
         2.0 * q * q * p2 * std::cos(2.0 * theta);
}

std::array<double, 2> reduced_eigenvalues_analytic(double p, double theta) {
  check_probability(p);
  const double s = std::sin(theta);
  const double pq = p * (1.0 - p);
  // The radicand is the squared Bloch-vector length; clamp rounding below 0.
  const double radius = std::sqrt(std::max(0.0, 1.0 - 16.0 * pq * pq * s * s));
  return {0.5 * (1.0 - radius), 0.5 * (1.0 + radius)};
}

double entropy_at_half_p(double theta) {
  const double s = std::abs(std::sin(theta));
  if (s < 1e-12) return 0.0;
  const double c = std::abs(std::cos(theta));
  if (c == 0.0) return std::log(2.0 / s);
  return std::log(2.0 / s) + 0.5 * c * std::log((1.0 - c) / (1.0 + c));
}

}  // namespace graphent
