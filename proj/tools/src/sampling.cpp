#include "statemap/cli/sampling.hpp"

#include <vector>

namespace statemap::cli {

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  return {re, normal(rng)};
}

StateVector random_state(std::size_t dimension, Rng& rng) {
  std::vector<Complex> v(dimension);
  for (auto& z : v) z = random_complex(rng);
  return StateVector(std::move(v));
}

Complex random_nonreal(Rng& rng) {
  std::uniform_real_distribution<double> mag(0.3, 3.0);
  std::uniform_real_distribution<double> arg(0.2, 2.9);
  std::bernoulli_distribution flip;
  const double m = mag(rng);
  const double phase = flip(rng) ? arg(rng) : -arg(rng);
  return std::polar(m, phase);
}

double random_real_multiplier(Rng& rng) {
  std::uniform_real_distribution<double> mag(0.3, 3.0);
  std::bernoulli_distribution flip;
  const double m = mag(rng);
  return flip(rng) ? m : -m;
}

StateVector random_real_state(std::size_t dimension, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> v(dimension);
  for (auto& z : v) z = normal(rng);
  return StateVector(std::move(v));
}

} // namespace statemap::cli
