#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "statemap/generator.hpp"

namespace statemap {

// Below this ratio |lambda|/Gamma a generic-pair eigenvalue is treated as
// having merged with the kernel, and the two-projector decomposition is used.
inline constexpr double kEigenvalueMergeTolerance = 1e-12;

struct SpectralData {
  // Case whose decomposition is in use. Differs from the generator's tag only
  // when `merged` is set.
  CaseTag case_tag = CaseTag::GenericPair;
  bool merged = false;
  // Generic: {0, -i(Gamma+sigma), i(Gamma-sigma)}. Phase-collinear: {0, -2i sigma}.
  std::vector<Complex> eigenvalues;
  std::size_t projector_count = 0;
};

// Throws UnsupportedCaseError for RealCollinear generators.
SpectralData spectral_data(const Generator& gen);

// Coefficients (k0, k1, k2) with Pi_k = k0 + k1*T + k2*T^2, read off the
// rational-in-T projector formulas built from the eigenvalues alone.
std::array<Complex, 3> projector_coefficients(const SpectralData& data, std::size_t k);

// Pi_k(c), never materializing a matrix. On span{a, b_perp} T acts as the
// normal block [[-2i sigma, -G], [G, 0]] in the orthonormal frame
// (a/|a|, b_perp/|b_perp|), so the nonzero-eigenvalue projectors are rank one
// onto lambda*a/|a| + |a|*b_perp and the kernel projector is their complement.
// This equals the polynomial from projector_coefficients but avoids its
// cancellation when one eigenvalue is small against Gamma.
// Throws InputError when k is out of range and UnsupportedCaseError for
// RealCollinear.
StateVector apply_projector(const Generator& gen, std::size_t k, const StateVector& c);

// Norm of the annihilating polynomial applied to c, normalized by ||c||:
//   generic:          T(T^2 + 2i sigma T + G^2)   / Gamma^3
//   phase-collinear:  T(T + 2i sigma)             / sigma^2
//   real-collinear:   T                           (unnormalized)
// T is applied by nested generator applications.
double min_poly_residual(const Generator& gen, const StateVector& c);

} // namespace statemap
