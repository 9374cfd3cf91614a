#pragma once

#include <array>

#include "triphase/types.hpp"

namespace triphase {

/// Eigendecomposition of a 3x3 complex Hermitian matrix.
struct EigenSystem {
  std::array<double, 3> eigenvalues;  ///< ascending
  Mat3 eigenvectors;                  ///< column a pairs with eigenvalues[a]
};

/// off-diagonal Frobenius mismatch ||M - M^dagger||; 0 for Hermitian input.
double hermiticity_error(const Mat3& m);

/// Cyclic complex Jacobi rotations. Serves as the independent numerical
/// ground truth for the closed-form spectrum, so it must not (and does not)
/// call into the characteristic-cubic roots.
/// Throws std::invalid_argument when the input is not Hermitian within 1e-12
/// relative to its norm.
EigenSystem eigensolve_hermitian(const Mat3& h);

/// U(t) = V e^{-i lambda t} V^dagger built from eigensolve_hermitian.
Mat3 matrix_exponential_unitary(const Mat3& h, double t);

}  // namespace triphase
