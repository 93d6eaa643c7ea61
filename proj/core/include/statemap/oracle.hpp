#pragma once

#include "statemap/dense.hpp"
#include "statemap/hilbert.hpp"

namespace statemap {

// exp(M) by scaling and squaring with a degree-13 diagonal Pade approximant,
// the scaling power chosen from the 1-norm of M. O(d^3).
DenseMatrix dense_expm(const DenseMatrix& m);

// Relative residual below which a Gram-Schmidt seed is treated as dependent
// on the basis built so far.
inline constexpr double kSeedDependenceTolerance = 1e-10;

// Orthonormal basis whose first element is v/||v||, completed from the
// standard basis by modified Gram-Schmidt with a re-orthogonalization pass.
// Columns of the returned matrix are the basis vectors.
DenseMatrix orthonormal_completion(const StateVector& v);

// The basis-pairing unitary: with {psi_i} completing a/||a|| and {phi_i}
// completing b/||b||, U = sum_i |phi_i><psi_i|, so U a/||a|| = b/||b||.
// Throws InputError on a zero vector or dimension mismatch.
DenseMatrix gram_schmidt_unitary(const StateVector& a, const StateVector& b);

} // namespace statemap
