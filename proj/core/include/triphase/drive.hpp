#pragma once

namespace triphase {

/// Physical knobs of a three-level atom driven by two classical monochromatic
/// fields. All frequencies are angular (rad/s) so that omega*t is
/// dimensionless; phases are in radians and stored unreduced (every downstream
/// quantity is 2*pi-periodic in each phase).
struct DriveParams {
  double vartheta2 = 1.0;  ///< Rabi frequency of the field driving |l1> <-> |l2>
  double vartheta3 = 1.0;  ///< Rabi frequency of the field driving |l2> <-> |l3>
  double delta = 0.0;      ///< detuning, two-photon resonance: delta2 = -delta3 = delta
  double phi2 = 0.0;       ///< laser phase of field 2
  double phi3 = 0.0;       ///< laser phase of field 3
};

/// Throws std::invalid_argument when the parameters leave the model's domain:
/// non-finite entries, or non-positive Rabi frequencies (the dressed-state
/// normalizations divide by vartheta2^2 + vartheta3^2, so the zero-drive model
/// is rejected as degenerate rather than silently returned).
void validate(const DriveParams& p);

/// Rabi frequency mu * E0 / hbar of a dipole-coupled classical field.
/// Throws std::invalid_argument for non-positive hbar.
double rabi_from_field(double dipole_moment, double field_amplitude, double hbar);

struct FrameShifts {
  double gamma1;
  double gamma2;
  double gamma3;
};

/// Rotating-frame shifts (0, Omega2, Omega2 - Omega3) that make the two-field
/// Hamiltonian time independent.
FrameShifts frame_shifts(double omega_field2, double omega_field3);

}  // namespace triphase
