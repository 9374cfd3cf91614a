#include "triphase/quantifiers.hpp"

#include <cmath>
#include <stdexcept>

#include "triphase/numerics.hpp"

namespace triphase {

double coherence_l2(const DensityMatrix& dm) {
  double sum = 0.0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (r != c) sum += std::norm(dm.rho(r, c));
    }
  }
  return sum;
}

double coherence_l2_analytic(const DriveParams& p, double t) {
  const Eigenfrequencies w = eigenfrequencies(p);
  const double th2 = p.vartheta2 * p.vartheta2 + p.vartheta3 * p.vartheta3;
  const Complex w_i = std::polar(1.0, -w.omega_i * t) /
                      (4.0 * w.omega_i * w.omega_i + th2);
  const Complex w_k = std::polar(1.0, -w.omega_k * t) /
                      (4.0 * w.omega_k * w.omega_k + th2);
  const Complex eps = 2.0 * p.vartheta2 * (w.omega_i * w_i + w.omega_k * w_k);
  const Complex vkappa = p.vartheta2 * p.vartheta2 * (w_i + w_k) +
                         p.vartheta3 * p.vartheta3 / th2;
  const Complex vpi = p.vartheta2 * p.vartheta3 * (w_i + w_k - 1.0 / th2);
  return 2.0 * (std::norm(eps * vkappa) + std::norm(eps * vpi) +
                std::norm(vkappa * vpi));
}

namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 1.0)) {
    throw std::invalid_argument("alpha must be >= 1");
  }
}

}  // namespace

double classical_distance_alpha(std::span<const double> prob_p,
                                std::span<const double> prob_q, double alpha) {
  require_alpha(alpha);
  if (prob_p.size() != prob_q.size()) {
    throw std::invalid_argument("distributions must have equal length");
  }
  double sum = 0.0;
  for (std::size_t n = 0; n < prob_p.size(); ++n) {
    if (prob_p[n] < 0.0 || prob_q[n] < 0.0) {
      throw std::invalid_argument("probabilities must be nonnegative");
    }
    sum += std::pow(std::abs(prob_p[n] - prob_q[n]), alpha);
  }
  return std::pow(0.5 * sum, 1.0 / alpha);
}

double classical_speed_alpha(std::span<const double> dprob, double alpha) {
  require_alpha(alpha);
  double sum = 0.0;
  for (double d : dprob) sum += std::pow(std::abs(d), alpha);
  return std::pow(0.5 * sum, 1.0 / alpha);
}

double quantum_speed_alpha(const Mat3& drho, double alpha) {
  require_alpha(alpha);
  const double scale = std::max(drho.norm(), 1.0);
  if (hermiticity_error(drho) > 1e-10 * scale) {
    throw std::invalid_argument("quantum_speed_alpha: drho must be Hermitian");
  }
  if (alpha == 2.0) {
    return hss(drho);
  }
  const EigenSystem es = eigensolve_hermitian(drho);
  double sum = 0.0;
  for (double lambda : es.eigenvalues) sum += std::pow(std::abs(lambda), alpha);
  return std::pow(0.5 * sum, 1.0 / alpha);
}

double hss(const Mat3& drho) {
  double sum = 0.0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) sum += std::norm(drho(r, c));
  }
  return std::sqrt(0.5 * sum);
}

HssComponents hss_components(const DriveParams& p, double t, HssVariant variant) {
  const Eigenfrequencies w = eigenfrequencies(p);
  const double vt2sq = p.vartheta2 * p.vartheta2;
  const double vt3sq = p.vartheta3 * p.vartheta3;
  const double th2 = vt2sq + vt3sq;
  const double di = 4.0 * w.omega_i * w.omega_i + th2;
  const double dk = 4.0 * w.omega_k * w.omega_k + th2;
  const double cos_ik = std::cos((w.omega_i - w.omega_k) * t);
  const double cos_i = std::cos(w.omega_i * t);
  const double cos_k = std::cos(w.omega_k * t);

  // The cos(w_k t) denominator is 4 w_i^2 + th2 in the as-printed reading and
  // 4 w_k^2 + th2 in the symmetrized/weighted ones.
  const double dk_last = variant == HssVariant::as_printed ? di : dk;
  const double lambda = vt2sq * vt2sq / (di * di) + vt2sq * vt2sq / (dk * dk) +
                        2.0 * vt2sq * vt2sq * cos_ik / (di * dk) +
                        (vt3sq / th2) * (vt3sq / th2) +
                        2.0 * vt2sq * vt3sq / th2 * (cos_i / di + cos_k / dk_last);

  double theta = kappa(p, t);
  double sigma = xi(p, t);
  if (variant == HssVariant::weighted) {
    theta *= 4.0 * vt2sq;
    sigma *= vt2sq * vt3sq;
  }
  return {lambda, theta, sigma};
}

namespace {

HssClosedForm from_radicand(double radicand) {
  HssClosedForm out;
  out.radicand = radicand;
  if (radicand >= 0.0) {
    out.value = std::sqrt(radicand);
  } else if (radicand >= -1e-12) {
    out.value = 0.0;  // rounding noise around an exact zero
  }
  return out;  // beyond -1e-12: empty value, caller records the discrepancy
}

}  // namespace

HssClosedForm hss_phi2_analytic(const DriveParams& p, double t, HssVariant variant) {
  const HssComponents c = hss_components(p, t, variant);
  return from_radicand(c.lambda * (c.theta + c.sigma));
}

HssClosedForm hss_phi3_analytic(const DriveParams& p, double t, HssVariant variant) {
  const HssComponents c = hss_components(p, t, variant);
  return from_radicand(c.sigma * (c.lambda + c.theta));
}

}  // namespace triphase
