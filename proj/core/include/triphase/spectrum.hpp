#pragma once

#include "triphase/drive.hpp"
#include "triphase/types.hpp"

namespace triphase {

struct Eigenfrequencies {
  double omega_i;  ///< (delta - sqrt(delta^2 + vt2^2 + vt3^2)) / 2, always <= 0
  double omega_j;  ///< exactly 0 at two-photon resonance
  double omega_k;  ///< (delta + sqrt(delta^2 + vt2^2 + vt3^2)) / 2, always >= 0
};

/// Dressed structure of the RWA Hamiltonian: eigenfrequencies plus the
/// orthonormal eigenvectors |i>, |j>, |k> expressed in the bare basis
/// {|l1>, |l2>, |l3>}. Component phases follow the closed-form expressions
/// (no re-phasing).
struct DressedSpectrum {
  Eigenfrequencies omega;
  Vec3 v_i;
  Vec3 v_j;
  Vec3 v_k;
};

/// Time-independent RWA Hamiltonian in the bare basis, hbar = 1.
/// Diagonal (0, delta, 0); H(1,0) = -(vt2/2) e^{-i phi2};
/// H(1,2) = -(vt3/2) e^{+i phi3}; Hermitian conjugates filled.
Mat3 build_hamiltonian(const DriveParams& p);

/// Closed-form spectrum. Throws std::invalid_argument on degenerate drive.
Eigenfrequencies eigenfrequencies(const DriveParams& p);

/// Large-detuning expansion (-(vt2^2+vt3^2)/(4 delta), 0, delta).
/// Does not enforce |delta| >> vartheta; validated only in that regime.
/// Throws std::invalid_argument when delta == 0.
Eigenfrequencies approx_eigenfrequencies(const DriveParams& p);

/// Closed-form dressed states; unit norm and pairwise orthogonal.
DressedSpectrum dressed_states(const DriveParams& p);

/// Residual omega^3 - delta*omega^2 - (vt2^2+vt3^2)/4 * omega of the
/// characteristic cubic; vanishes on the exact eigenfrequencies.
double cubic_residual(const DriveParams& p, double omega);

}  // namespace triphase
