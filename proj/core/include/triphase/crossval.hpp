#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "triphase/quantifiers.hpp"

namespace triphase {

/// Comparison tolerances of the cross-validation harness. Algebraic identities
/// sit at 1e-12..1e-14; finite-difference-limited comparisons at 1e-6 relative
/// with a 1e-9 absolute floor; approximation-level comparisons scale with
/// (vartheta/delta)^2 and are derived per record.
struct Tolerances {
  double spectrum_abs = 1e-10;
  double cubic_residual = 1e-12;
  double evolution_infidelity = 1e-12;
  double norm_abs = 1e-12;
  double qfi_rel = 1e-6;
  double qfi_abs = 1e-9;
  double compat_abs = 1e-8;
  double quantumness_abs = 1e-6;
  double coherence_abs = 1e-8;
  double hss_abs = 1e-8;
  double hss_qfi_rel = 1e-8;
  double hss_qfi_abs = 1e-9;
  double gamma_bound_slack = 1e-10;
  double gamma_identity_rel = 1e-12;
};

/// Deliberate corruption used to mutation-test the harness itself.
enum class FaultInjection { none, kappa_sign };

struct CheckRecord {
  std::string check;    ///< e.g. "spectrum.omega_i"
  std::string inputs;   ///< "vt2=..,vt3=..,delta=..,phi2=..,phi3=..,t=.."
  double analytic = 0;  ///< closed-form / library-path value
  double oracle = 0;    ///< independent definition-based value
  double abs_dev = 0;
  double rel_dev = 0;
  bool pass = true;
  bool discrepancy = false;  ///< systematic formula-level disagreement
};

struct ValidationReport {
  std::vector<CheckRecord> records;
  std::vector<std::string> notes;  ///< deterministic summary/diagnosis lines

  int failures() const;
  int discrepancies() const;
  bool all_pass() const { return failures() == 0; }
};

/// Dual-path checks at a fixed parameter set over a t-grid: spectrum vs the
/// Jacobi eigensolver, exact evolution vs the matrix-exponential oracle, the
/// three QFI entries, coherence and both HSS closed forms vs their
/// definition-based values on the exact family, plus the large-detuning-family
/// diagnostics. An empty grid yields an empty report.
ValidationReport cross_validate(const DriveParams& p,
                                const std::vector<double>& t_grid,
                                const Tolerances& tol,
                                FaultInjection fault = FaultInjection::none);

/// Randomized sweep over seeded parameter sets: vartheta in [0.1, 2],
/// delta in [0, 50], phases in [0, 2pi), t in [0, 20]. Deterministic for a
/// fixed seed.
ValidationReport cross_validate_random(int n_sets, std::uint64_t seed,
                                       const Tolerances& tol,
                                       FaultInjection fault = FaultInjection::none);

/// Definitive closed-form-HSS adjudication: evaluates every HssVariant against
/// the definition-based HSS across the random sweep and names the matching one.
struct HssAdjudication {
  std::string matching_variant;  ///< "weighted", or "none"
  double worst_as_printed = 0;
  double worst_lambda_symmetrized = 0;
  double worst_weighted = 0;
  std::vector<std::string> lines;  ///< human-readable verdict, deterministic
};

HssAdjudication adjudicate_hss(int n_sets, std::uint64_t seed, const Tolerances& tol);

/// One record per line, stable field order, locale-independent numbers.
void write_report(std::ostream& os, const ValidationReport& report);

}  // namespace triphase
