#include "triphase/derivatives.hpp"

namespace triphase {

namespace {

DriveParams shifted(const DriveParams& p, Phase which, double dphi) {
  DriveParams q = p;
  (which == Phase::phi2 ? q.phi2 : q.phi3) += dphi;
  return q;
}

}  // namespace

Vec3 fd_state_derivative(const DriveParams& p, double t, Phase which,
                         StateFamily family, double h) {
  const Vec3 plus = evolve(shifted(p, which, h), t, family).amps;
  const Vec3 minus = evolve(shifted(p, which, -h), t, family).amps;
  return (plus - minus) / (2.0 * h);
}

Mat3 fd_density_derivative(const DriveParams& p, double t, Phase which,
                           StateFamily family, double h) {
  const Mat3 plus = density_matrix(evolve(shifted(p, which, h), t, family)).rho;
  const Mat3 minus = density_matrix(evolve(shifted(p, which, -h), t, family)).rho;
  return (plus - minus) / (2.0 * h);
}

}  // namespace triphase
