#include "triphase/evolution.hpp"

#include <cmath>

namespace triphase {

InitialAmplitudes initial_amplitudes(const DriveParams& p) {
  const DressedSpectrum d = dressed_states(p);
  const Vec3 l1(Complex(1, 0), Complex(0, 0), Complex(0, 0));
  // <a|l1> is the conjugated first component of each dressed vector.
  return {d.v_i.dot(l1), d.v_j.dot(l1), d.v_k.dot(l1)};
}

PureState evolve_exact(const DriveParams& p, double t) {
  const DressedSpectrum d = dressed_states(p);
  const Complex c_i = std::conj(d.v_i(0));
  const Complex c_j = std::conj(d.v_j(0));
  const Complex c_k = std::conj(d.v_k(0));
  Vec3 amps = c_i * std::polar(1.0, -d.omega.omega_i * t) * d.v_i + c_j * d.v_j +
              c_k * std::polar(1.0, -d.omega.omega_k * t) * d.v_k;
  return {amps, t};
}

PureState evolve_large_detuning(const DriveParams& p, double t) {
  const DressedSpectrum d = dressed_states(p);
  const double inv_norm =
      1.0 / std::sqrt(p.vartheta2 * p.vartheta2 + p.vartheta3 * p.vartheta3);
  const Complex c_i = -p.vartheta2 * std::polar(1.0, -p.phi2) * inv_norm;
  const Complex c_j = -p.vartheta3 * std::polar(1.0, -p.phi3) * inv_norm;
  Vec3 amps = c_i * std::polar(1.0, -d.omega.omega_i * t) * d.v_i + c_j * d.v_j;
  return {amps, t};
}

PureState evolve(const DriveParams& p, double t, StateFamily family) {
  return family == StateFamily::exact ? evolve_exact(p, t)
                                      : evolve_large_detuning(p, t);
}

DensityMatrix density_matrix(const PureState& s) {
  return {s.amps * s.amps.adjoint()};
}

}  // namespace triphase
