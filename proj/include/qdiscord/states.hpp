#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qdiscord/linalg.hpp"

namespace qdiscord {

/// Sparsity data of an X-patterned Hermitian matrix: real diagonal plus the
/// upper half of the anti-diagonal (the lower half is forced by
/// Hermiticity). For odd dimension the central crossing element is real and
/// lives in `diagonal`.
struct XPattern {
  int dim = 0;
  std::vector<double> diagonal;        // length dim
  std::vector<Complex> antidiagonal;   // entries (i, dim-1-i) for i < dim/2
};

/// Maximally entangled pure state (1/sqrt(d)) sum_i |ii>.
BipartiteDensity bell(int d);

/// [(1-p)/d^2] I + p |Psi><Psi| with |Psi> the Bell state. The spectrum is
/// one eigenvalue p + (1-p)/d^2 and d^2 - 1 copies of (1-p)/d^2.
BipartiteDensity isotropic(int d, double p);

/// I / (dim_a * dim_b).
BipartiteDensity maximally_mixed(int dim_a, int dim_b);

/// Builds the density with the given X sparsity; the dimension must be a
/// perfect square and is interpreted as (sqrt(dim), sqrt(dim)). Positivity
/// is checked spectrally, not through closed-form parameter constraints.
BipartiteDensity x_state(const XPattern& pattern);

/// True when every entry off the diagonal and anti-diagonal has magnitude
/// <= zero_tol.
bool is_x_structure(const ComplexMatrix& m, double zero_tol);

/// Inverse of x_state's assembly; off-pattern entries are ignored.
XPattern x_pattern_of(const ComplexMatrix& m);

/// Assembles a density from dim_a^2 blocks of size dim_b x dim_b, each
/// required to be X-patterned, listed row-major by the block index pair.
BipartiteDensity extended_x(const std::vector<ComplexMatrix>& blocks, int dim_a, int dim_b);

/// sum_i p_i |psi_i><psi_i| (x) partner_i with orthonormal kets on A and
/// valid densities on B.
BipartiteDensity quantum_classical(const std::vector<double>& probabilities,
                                   const std::vector<std::vector<Complex>>& kets,
                                   const std::vector<ComplexMatrix>& partners);

/// Reproducible mixed state: Gram sum of `rank` seeded Gaussian kets,
/// normalized to unit trace.
BipartiteDensity random_density(int dim_a, int dim_b, int rank, std::uint64_t seed);

struct BellSpec {
  int d = 2;
};
struct IsotropicSpec {
  int d = 2;
  double p = 0.0;
};
struct MaximallyMixedSpec {
  int dim_a = 2;
  int dim_b = 2;
};
struct XStateSpec {
  XPattern pattern;
};
struct QuantumClassicalSpec {
  std::vector<double> probabilities;
  std::vector<std::vector<Complex>> kets;
  std::vector<ComplexMatrix> partners;
};
struct RandomSpec {
  int dim_a = 2;
  int dim_b = 2;
  int rank = 1;
  std::uint64_t seed = 0;
};

/// Declarative description of a canonical state, dispatched by build_state.
using StateSpec = std::variant<BellSpec, IsotropicSpec, MaximallyMixedSpec, XStateSpec,
                               QuantumClassicalSpec, RandomSpec>;

BipartiteDensity build_state(const StateSpec& spec);

}  // namespace qdiscord
