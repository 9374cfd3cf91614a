#include "triphase/drive.hpp"

#include <cmath>
#include <stdexcept>

namespace triphase {

void validate(const DriveParams& p) {
  if (!std::isfinite(p.vartheta2) || !std::isfinite(p.vartheta3) ||
      !std::isfinite(p.delta) || !std::isfinite(p.phi2) || !std::isfinite(p.phi3)) {
    throw std::invalid_argument("drive parameters must be finite");
  }
  if (!(p.vartheta2 > 0.0) || !(p.vartheta3 > 0.0)) {
    throw std::invalid_argument(
        "degenerate model: both Rabi frequencies must be positive "
        "(dressed-state normalizations divide by vartheta2^2 + vartheta3^2)");
  }
}

double rabi_from_field(double dipole_moment, double field_amplitude, double hbar) {
  if (!(hbar > 0.0)) {
    throw std::invalid_argument("hbar must be positive");
  }
  return dipole_moment * field_amplitude / hbar;
}

FrameShifts frame_shifts(double omega_field2, double omega_field3) {
  return {0.0, omega_field2, omega_field2 - omega_field3};
}

}  // namespace triphase
