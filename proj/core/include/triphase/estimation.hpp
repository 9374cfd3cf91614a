#pragma once

#include <optional>

#include "triphase/derivatives.hpp"

namespace triphase {

/// 2x2 real symmetric quantum Fisher information matrix for (phi2, phi3).
struct QfiMatrix {
  double f22 = 0.0;
  double f33 = 0.0;
  double f23 = 0.0;

  double det() const { return f22 * f33 - f23 * f23; }
};

/// The three terms of kappa: the |i> and |k> branch populations of |l2> and
/// their interference. Exposed so the validation harness can inject a
/// cross-term sign fault and so discrepancy reports can name the term.
struct KappaTerms {
  double branch_i;
  double branch_k;
  double cross;

  double sum() const { return branch_i + branch_k + cross; }
};

KappaTerms kappa_terms(const DriveParams& p, double t);

/// kappa of the closed-form QFI; kappa = |c2|^2 / (4 vartheta2^2) where c2 is
/// the exact |l2> amplitude. Phase-free, periodic in t with 2*pi/(omega_k-omega_i).
double kappa(const DriveParams& p, double t);

/// xi of the closed-form QFI; xi = |c3|^2 / (vartheta2 vartheta3)^2.
double xi(const DriveParams& p, double t);

double qfi_phi2_analytic(const DriveParams& p, double t);
double qfi_phi3_analytic(const DriveParams& p, double t);
double qfi_cross_analytic(const DriveParams& p, double t);

/// Assembles the closed-form QFI matrix from explicit kappa and xi values;
/// the fault-injection path of the validation harness feeds a corrupted kappa
/// through here.
QfiMatrix qfi_from_kappa_xi(const DriveParams& p, double kappa_value,
                            double xi_value);

/// Pure-state QFI matrix from a normalized state and its phase derivatives:
/// F_uv = 4 Re[<d_u psi|d_v psi> - <d_u psi|psi><psi|d_v psi>].
/// Throws std::invalid_argument when psi is not normalized (1e-8).
QfiMatrix qfi_pure_generic(const Vec3& psi, const Vec3& dpsi2, const Vec3& dpsi3);

enum class QfiMode { analytic, numeric };

/// analytic: assembles the three closed forms. numeric: finite-difference
/// derivatives of the chosen state family through qfi_pure_generic. The two
/// modes agree to O(h^2) on the exact family; on the large-detuning family
/// the closed forms deviate by O((vartheta/delta)^2).
QfiMatrix qfi_matrix(const DriveParams& p, double t, QfiMode mode,
                     StateFamily family = StateFamily::exact,
                     double h = kFdDefaultStep);

/// SLD compatibility data: u = Im<d_2 psi|d_3 psi> and the quantumness
/// R = ||2i F^-1 U||_inf with U = [[0, u], [-u, 0]]. R is empty when F is
/// numerically singular (det < 1e-14).
struct Compatibility {
  double imag_overlap = 0.0;
  std::optional<double> quantumness;
};

Compatibility compatibility(const DriveParams& p, double t,
                            StateFamily family = StateFamily::exact,
                            double h = kFdDefaultStep);

/// Minimal per-parameter variances 1/f22, 1/f33 of the individual strategy;
/// empty marks an unbounded variance (zero diagonal: parameter not estimable).
struct IndividualBounds {
  std::optional<double> var_phi2;
  std::optional<double> var_phi3;
};

IndividualBounds individual_bounds(const QfiMatrix& f);

/// Minimal variances f33/det, f22/det of the simultaneous strategy; empty when
/// the information matrix is singular (det <= 0).
struct SimultaneousBounds {
  std::optional<double> var_phi2;
  std::optional<double> var_phi3;
};

SimultaneousBounds simultaneous_bounds(const QfiMatrix& f);

/// Individual-vs-simultaneous comparison. Undefined entries stay empty instead
/// of becoming infinities so sweeps never emit NaN cells.
struct StrategyReport {
  QfiMatrix qfi;
  std::optional<double> var_ind_phi2;
  std::optional<double> var_ind_phi3;
  std::optional<double> var_sim_phi2;
  std::optional<double> var_sim_phi3;
  std::optional<double> delta_ind;  ///< 1/f22 + 1/f33
  std::optional<double> delta_sim;  ///< (f22 + f33) / (2 det)
  std::optional<double> gamma;      ///< 2 det / (f22 f33), <= 2
  std::optional<double> quantumness;
};

/// Report from an already-computed information matrix (quantumness left empty).
StrategyReport strategy_from_qfi(const QfiMatrix& f);

/// Full report at (p, t); quantumness comes from finite-difference derivatives
/// of the chosen family.
StrategyReport strategy_report(const DriveParams& p, double t,
                               QfiMode mode = QfiMode::analytic,
                               StateFamily family = StateFamily::exact);

}  // namespace triphase
