#pragma once

#include <optional>
#include <span>

#include "triphase/estimation.hpp"

namespace triphase {

/// l2-norm of coherence: sum of |rho_ij|^2 over i != j. Bounded by 2/3 for
/// pure three-level states.
double coherence_l2(const DensityMatrix& dm);

/// Closed-form coherence of the evolved state, phase-free:
/// 2(|eps*vkappa|^2 + |eps*vpi|^2 + |vkappa*vpi|^2).
double coherence_l2_analytic(const DriveParams& p, double t);

/// (1/2 sum |p_x - q_x|^alpha)^(1/alpha). Inputs must be nonnegative and of
/// equal length; normalization is the caller's concern. alpha >= 1.
double classical_distance_alpha(std::span<const double> prob_p,
                                std::span<const double> prob_q, double alpha);

/// Statistical speed (1/2 sum |p'_x|^alpha)^(1/alpha) of a parameterized
/// distribution from its derivative vector. alpha >= 1.
double classical_speed_alpha(std::span<const double> dprob, double alpha);

/// Quantum statistical speed (1/2 Tr|drho|^alpha)^(1/alpha), |A| = sqrt(A^dag A)
/// via Hermitian eigendecomposition; alpha = 2 bypasses diagonalization.
/// drho must be Hermitian with near-zero trace.
double quantum_speed_alpha(const Mat3& drho, double alpha);

/// Hilbert-Schmidt speed sqrt(1/2 Tr[(drho)^2]) from squared entries, no
/// diagonalization. Equals quantum_speed_alpha(drho, 2); for a normalized pure
/// family, QFI = 4 HSS^2.
double hss(const Mat3& drho);

/// Readings of the closed-form HSS building blocks Lambda/Theta/Sigma.
/// as_printed keeps the 4w_i^2 denominator on Lambda's cos(w_k t) term and the
/// unweighted Theta = kappa, Sigma = xi. lambda_symmetrized fixes only that
/// denominator by i<->k symmetry. weighted additionally restores the
/// vartheta weights (Theta = 4 vt2^2 kappa, Sigma = vt2^2 vt3^2 xi), which
/// makes Lambda/Theta/Sigma the bare-state populations |c1|^2, |c2|^2, |c3|^2;
/// this is the variant the definition-based oracle confirms.
enum class HssVariant { as_printed, lambda_symmetrized, weighted };

struct HssComponents {
  double lambda;
  double theta;
  double sigma;
};

HssComponents hss_components(const DriveParams& p, double t, HssVariant variant);

/// Closed-form HSS_phi2 = sqrt(Lambda (Theta + Sigma)). The value is empty
/// when the radicand is negative beyond -1e-12 (a formula-discrepancy event,
/// recorded by the caller rather than clamped); radicands in [-1e-12, 0) are
/// rounded-to-zero noise and give 0.
struct HssClosedForm {
  double radicand = 0.0;
  std::optional<double> value;
};

HssClosedForm hss_phi2_analytic(const DriveParams& p, double t,
                                HssVariant variant = HssVariant::weighted);

/// Closed-form HSS_phi3 = sqrt(Sigma (Lambda + Theta)); same conventions.
HssClosedForm hss_phi3_analytic(const DriveParams& p, double t,
                                HssVariant variant = HssVariant::weighted);

}  // namespace triphase
