#pragma once

#include <cstdint>
#include <vector>

#include "qdiscord/linalg.hpp"
#include "qdiscord/measurements.hpp"

namespace qdiscord {

/// Settings for the classical-correlation supremum: a deterministic coarse
/// grid over the measurement-angle box followed by derivative-free simplex
/// refinement from the best `restarts` grid seeds. The seeded RNG feeds
/// only the initial-simplex jitter.
struct OptimizerConfig {
  int grid_points_per_angle = 7;
  int restarts = 5;
  double simplex_tolerance = 1e-7;
  int max_iterations = 2000;
  bool freeze_phases = false;
  std::uint64_t rng_seed = 0;
};

struct MutualInformation {
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double total = 0.0;  // s_a + s_b - s_ab
};

struct ConditionalOutcome {
  double probability = 0.0;
  ComplexMatrix state;      // normalized when probability > 1e-12
  bool negligible = false;  // probability <= 1e-12; contributes zero entropy
};

/// Post-measurement ensemble of the unmeasured subsystem.
struct ConditionalEnsemble {
  std::vector<ConditionalOutcome> outcomes;
};

struct CorrelationResult {
  double value = 0.0;
  MeasurementParams argmax;
  std::int64_t evaluations = 0;
  bool converged = true;
};

struct DiscordReport {
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double discord = 0.0;
  MeasurementParams argmax_params;
  Subsystem measured_side = Subsystem::A;
  double base = 2.0;
  std::int64_t optimizer_evaluations = 0;
  bool converged = true;
};

struct IsotropicCorrelations {
  double classical = 0.0;
  double discord = 0.0;
  double mutual_information = 0.0;  // classical + discord
  double s_ab = 0.0;
};

/// I = S(rho_A) + S(rho_B) - S(rho_AB), all in the given base.
MutualInformation mutual_information(const BipartiteDensity& rho, LogBase base);

/// Outcome probabilities and reduced post-measurement states for measuring
/// the named side with the given family. Measuring A combines the a-major
/// blocks weighted by the transposed operator element; measuring B applies
/// the same contraction within each block.
ConditionalEnsemble conditional_ensemble(const BipartiteDensity& rho,
                                         const MeasurementFamily& family, Subsystem measured);

/// sum_i p_i S(rho_i); outcomes with p_i <= 1e-12 contribute zero.
double conditional_entropy(const BipartiteDensity& rho, const MeasurementFamily& family,
                           Subsystem measured, LogBase base);

/// Classical correlation C = sup over measurement families of
/// S(rho_other) - sum_i p_i S(rho_i). The reported value is the maximum
/// over the explored set, so it never falls below the grid best.
CorrelationResult classical_correlation(const BipartiteDensity& rho, Subsystem measured,
                                        LogBase base, const OptimizerConfig& cfg = {});

/// Full pipeline: mutual information, classical correlation, and their
/// difference Q = I - C, reported with the argmax measurement parameters.
DiscordReport discord(const BipartiteDensity& rho, Subsystem measured, LogBase base,
                      const OptimizerConfig& cfg = {});

/// Closed forms for the isotropic state of local dimension d and mixing
/// parameter p: no supremization is needed because every measurement
/// parameter drops out of the conditional spectrum.
IsotropicCorrelations isotropic_closed_form(int d, double p, LogBase base);

/// |Q_closed / (p log_base d) - 1| for the pd >> 1-p regime; returns
/// +infinity when the precondition clearly fails. Test utility.
double isotropic_large_d_deviation(int d, double p, LogBase base);

}  // namespace qdiscord
