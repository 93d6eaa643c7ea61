#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "statemap/hilbert.hpp"

namespace statemap::cli {

using Rng = std::mt19937_64;

Complex random_complex(Rng& rng);
StateVector random_state(std::size_t dimension, Rng& rng);
// Modulus in [0.3, 3], argument at least 0.2 rad away from the real axis.
Complex random_nonreal(Rng& rng);
// Magnitude in [0.3, 3], random sign.
double random_real_multiplier(Rng& rng);
// Real-valued amplitudes (sigma = 0 pairs).
StateVector random_real_state(std::size_t dimension, Rng& rng);

} // namespace statemap::cli
