#include "triphase/estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace triphase {

namespace {

constexpr double kSingularDet = 1e-14;

struct BranchWeights {
  double ni2;  // 1 / (4 w_i^2 + vt2^2 + vt3^2)
  double nk2;  // 1 / (4 w_k^2 + vt2^2 + vt3^2)
  double nj2;  // 1 / (vt2^2 + vt3^2)
  double wi;
  double wk;
};

BranchWeights branch_weights(const DriveParams& p) {
  const Eigenfrequencies w = eigenfrequencies(p);
  const double th2 = p.vartheta2 * p.vartheta2 + p.vartheta3 * p.vartheta3;
  return {1.0 / (4.0 * w.omega_i * w.omega_i + th2),
          1.0 / (4.0 * w.omega_k * w.omega_k + th2), 1.0 / th2, w.omega_i,
          w.omega_k};
}

}  // namespace

KappaTerms kappa_terms(const DriveParams& p, double t) {
  const BranchWeights b = branch_weights(p);
  return {b.wi * b.wi * b.ni2 * b.ni2, b.wk * b.wk * b.nk2 * b.nk2,
          2.0 * b.wi * b.wk * b.ni2 * b.nk2 * std::cos((b.wi - b.wk) * t)};
}

double kappa(const DriveParams& p, double t) {
  return kappa_terms(p, t).sum();
}

double xi(const DriveParams& p, double t) {
  const BranchWeights b = branch_weights(p);
  return b.ni2 * b.ni2 + b.nk2 * b.nk2 +
         2.0 * b.ni2 * b.nk2 * std::cos((b.wi - b.wk) * t) + b.nj2 * b.nj2 -
         2.0 * b.nj2 *
             (b.ni2 * std::cos(b.wi * t) + b.nk2 * std::cos(b.wk * t));
}

QfiMatrix qfi_from_kappa_xi(const DriveParams& p, double kappa_value,
                            double xi_value) {
  const double vt2sq = p.vartheta2 * p.vartheta2;
  const double vt3sq = p.vartheta3 * p.vartheta3;
  const double a = 4.0 * vt2sq * kappa_value + vt2sq * vt3sq * xi_value;
  const double b = vt2sq * vt3sq * xi_value;
  QfiMatrix f;
  f.f22 = 4.0 * a * (1.0 - a);
  f.f33 = 4.0 * b * (1.0 - b);
  f.f23 = 4.0 * b * (1.0 - a);
  return f;
}

double qfi_phi2_analytic(const DriveParams& p, double t) {
  return qfi_from_kappa_xi(p, kappa(p, t), xi(p, t)).f22;
}

double qfi_phi3_analytic(const DriveParams& p, double t) {
  return qfi_from_kappa_xi(p, kappa(p, t), xi(p, t)).f33;
}

double qfi_cross_analytic(const DriveParams& p, double t) {
  return qfi_from_kappa_xi(p, kappa(p, t), xi(p, t)).f23;
}

QfiMatrix qfi_pure_generic(const Vec3& psi, const Vec3& dpsi2, const Vec3& dpsi3) {
  if (std::abs(psi.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("qfi_pure_generic: state is not normalized");
  }
  const Complex o22 = dpsi2.dot(dpsi2);
  const Complex o33 = dpsi3.dot(dpsi3);
  const Complex o23 = dpsi2.dot(dpsi3);
  const Complex b2 = dpsi2.dot(psi);  // <d2 psi|psi>
  const Complex b3 = dpsi3.dot(psi);
  QfiMatrix f;
  f.f22 = 4.0 * (o22 - b2 * std::conj(b2)).real();
  f.f33 = 4.0 * (o33 - b3 * std::conj(b3)).real();
  f.f23 = 4.0 * (o23 - b2 * std::conj(b3)).real();
  return f;
}

QfiMatrix qfi_matrix(const DriveParams& p, double t, QfiMode mode,
                     StateFamily family, double h) {
  if (mode == QfiMode::analytic) {
    QfiMatrix f;
    f.f22 = qfi_phi2_analytic(p, t);
    f.f33 = qfi_phi3_analytic(p, t);
    f.f23 = qfi_cross_analytic(p, t);
    return f;
  }
  const Vec3 psi = evolve(p, t, family).amps;
  const Vec3 d2 = fd_state_derivative(p, t, Phase::phi2, family, h);
  const Vec3 d3 = fd_state_derivative(p, t, Phase::phi3, family, h);
  return qfi_pure_generic(psi, d2, d3);
}

Compatibility compatibility(const DriveParams& p, double t, StateFamily family,
                            double h) {
  const Vec3 d2 = fd_state_derivative(p, t, Phase::phi2, family, h);
  const Vec3 d3 = fd_state_derivative(p, t, Phase::phi3, family, h);
  Compatibility out;
  out.imag_overlap = d2.dot(d3).imag();
  const QfiMatrix f = qfi_matrix(p, t, QfiMode::numeric, family, h);
  const double det = f.det();
  if (det > kSingularDet) {
    // ||2i F^-1 U||_inf for U = [[0,u],[-u,0]] reduces to 2|u|/sqrt(det).
    out.quantumness = 2.0 * std::abs(out.imag_overlap) / std::sqrt(det);
  }
  return out;
}

IndividualBounds individual_bounds(const QfiMatrix& f) {
  IndividualBounds out;
  if (f.f22 > 0.0) out.var_phi2 = 1.0 / f.f22;
  if (f.f33 > 0.0) out.var_phi3 = 1.0 / f.f33;
  return out;
}

SimultaneousBounds simultaneous_bounds(const QfiMatrix& f) {
  SimultaneousBounds out;
  const double det = f.det();
  if (det > 0.0) {
    out.var_phi2 = f.f33 / det;
    out.var_phi3 = f.f22 / det;
  }
  return out;
}

StrategyReport strategy_from_qfi(const QfiMatrix& f) {
  StrategyReport r;
  r.qfi = f;
  const IndividualBounds ind = individual_bounds(f);
  const SimultaneousBounds sim = simultaneous_bounds(f);
  r.var_ind_phi2 = ind.var_phi2;
  r.var_ind_phi3 = ind.var_phi3;
  r.var_sim_phi2 = sim.var_phi2;
  r.var_sim_phi3 = sim.var_phi3;
  if (ind.var_phi2 && ind.var_phi3) {
    r.delta_ind = *ind.var_phi2 + *ind.var_phi3;
  }
  if (sim.var_phi2 && sim.var_phi3) {
    r.delta_sim = 0.5 * (*sim.var_phi2 + *sim.var_phi3);
  }
  if (f.f22 > 0.0 && f.f33 > 0.0 && f.det() > 0.0) {
    r.gamma = 2.0 * f.det() / (f.f22 * f.f33);
  }
  return r;
}

StrategyReport strategy_report(const DriveParams& p, double t, QfiMode mode,
                               StateFamily family) {
  StrategyReport r = strategy_from_qfi(qfi_matrix(p, t, mode, family));
  r.quantumness = compatibility(p, t, family).quantumness;
  return r;
}

}  // namespace triphase
