#pragma once

#include "triphase/spectrum.hpp"

namespace triphase {

/// Bare-basis amplitudes (c1, c2, c3) of the atom at time t.
struct PureState {
  Vec3 amps;
  double t = 0.0;
};

struct DensityMatrix {
  Mat3 rho;
};

/// Overlaps C_a = <a|l1> of the dressed states with the initial bare state.
struct InitialAmplitudes {
  Complex c_i;
  Complex c_j;
  Complex c_k;
};

/// Which evolved-state family a numeric computation differentiates.
enum class StateFamily {
  exact,           ///< full three-dressed-state evolution
  large_detuning,  ///< two-dressed-state approximation (|k> branch dropped)
};

InitialAmplitudes initial_amplitudes(const DriveParams& p);

/// Exact evolved state of an atom prepared in |l1>:
/// C_i e^{-i w_i t}|i> + C_j |j> + C_k e^{-i w_k t}|k>. Unit norm for all t.
PureState evolve_exact(const DriveParams& p, double t);

/// Two-dressed-state approximation: the |k> branch is dropped and the
/// surviving amplitudes renormalized, while omega_i and the dressed states
/// themselves stay exact. Exactly normalized by construction; accurate to
/// O((vartheta/delta)^2) against evolve_exact.
PureState evolve_large_detuning(const DriveParams& p, double t);

PureState evolve(const DriveParams& p, double t, StateFamily family);

/// rho = |psi><psi|; Hermitian, unit trace, idempotent.
DensityMatrix density_matrix(const PureState& s);

}  // namespace triphase
