#pragma once

#include "triphase/evolution.hpp"

namespace triphase {

/// Central-difference step on the laser phases. h = 1e-6 balances the O(h^2)
/// truncation error against double-precision cancellation.
inline constexpr double kFdDefaultStep = 1e-6;

enum class Phase { phi2, phi3 };

/// Central difference [psi(phi+h) - psi(phi-h)] / (2h) of the bare-basis
/// amplitudes of the selected state family; error O(h^2).
Vec3 fd_state_derivative(const DriveParams& p, double t, Phase which,
                         StateFamily family, double h = kFdDefaultStep);

/// Central difference of the density matrix; Hermitian with trace ~ 0.
Mat3 fd_density_derivative(const DriveParams& p, double t, Phase which,
                           StateFamily family, double h = kFdDefaultStep);

}  // namespace triphase
