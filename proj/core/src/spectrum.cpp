#include "triphase/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace triphase {

Mat3 build_hamiltonian(const DriveParams& p) {
  validate(p);
  Mat3 h = Mat3::Zero();
  h(1, 1) = p.delta;  // (2,2) entry delta2 + delta3 vanishes at two-photon resonance
  h(1, 0) = -0.5 * p.vartheta2 * std::polar(1.0, -p.phi2);
  h(0, 1) = std::conj(h(1, 0));
  h(1, 2) = -0.5 * p.vartheta3 * std::polar(1.0, p.phi3);
  h(2, 1) = std::conj(h(1, 2));
  return h;
}

Eigenfrequencies eigenfrequencies(const DriveParams& p) {
  validate(p);
  const double root = std::sqrt(p.delta * p.delta + p.vartheta2 * p.vartheta2 +
                                p.vartheta3 * p.vartheta3);
  return {0.5 * (p.delta - root), 0.0, 0.5 * (p.delta + root)};
}

Eigenfrequencies approx_eigenfrequencies(const DriveParams& p) {
  validate(p);
  if (p.delta == 0.0) {
    throw std::invalid_argument("large-detuning expansion undefined at delta = 0");
  }
  const double th2 = p.vartheta2 * p.vartheta2 + p.vartheta3 * p.vartheta3;
  return {-th2 / (4.0 * p.delta), 0.0, p.delta};
}

DressedSpectrum dressed_states(const DriveParams& p) {
  const Eigenfrequencies w = eigenfrequencies(p);
  const double th2 = p.vartheta2 * p.vartheta2 + p.vartheta3 * p.vartheta3;
  const Complex e_p2 = std::polar(1.0, p.phi2);
  const Complex e_m3 = std::polar(1.0, -p.phi3);

  auto branch = [&](double omega) -> Vec3 {
    const double norm = 1.0 / std::sqrt(4.0 * omega * omega + th2);
    return Vec3(-p.vartheta2 * e_p2 * norm, Complex(2.0 * omega * norm, 0.0),
                -p.vartheta3 * e_m3 * norm);
  };

  DressedSpectrum d;
  d.omega = w;
  d.v_i = branch(w.omega_i);
  d.v_k = branch(w.omega_k);
  const double nj = 1.0 / std::sqrt(th2);
  d.v_j = Vec3(-p.vartheta3 * std::polar(1.0, p.phi3) * nj, Complex(0.0, 0.0),
               p.vartheta2 * std::polar(1.0, -p.phi2) * nj);
  return d;
}

double cubic_residual(const DriveParams& p, double omega) {
  const double th2 = p.vartheta2 * p.vartheta2 + p.vartheta3 * p.vartheta3;
  return omega * omega * omega - p.delta * omega * omega - 0.25 * th2 * omega;
}

}  // namespace triphase
