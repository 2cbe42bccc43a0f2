#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qdiscord/errors.hpp"
#include "qdiscord/matrix.hpp"

namespace qdiscord {

enum class Subsystem { A, B };

inline constexpr double kDefaultPsdTolerance = 1e-9;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;

/// Logarithm base used for entropies. Base 2 is the information-theory
/// convention; base d (the local dimension) normalizes a maximally mixed
/// qudit to entropy 1.
class LogBase {
public:
  explicit LogBase(double base);
  static LogBase dim(int d) { return LogBase(static_cast<double>(d)); }

  double base() const { return base_; }
  double log(double x) const;

private:
  double base_;
  double inv_log_base_;
};

struct HermitianSpectrum {
  std::vector<double> eigenvalues;            // ascending
  std::optional<ComplexMatrix> eigenvectors;  // columns, matching order
};

struct DensityValidation {
  double hermiticity_residual = 0.0;
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
  int clamped_eigenvalues = 0;  // eigenvalues in [-tol, 0), zeroed for entropies
  bool valid = false;
  std::optional<ErrorCode> failure;
  std::string detail;
};

/// A validated bipartite density matrix over subsystems of dimension
/// (dim_a, dim_b), basis-ordered |a> (x) |b> with a-major blocks.
/// Construct through validate_density; instances are immutable.
class BipartiteDensity {
public:
  const ComplexMatrix& matrix() const { return matrix_; }
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }
  double psd_tolerance() const { return psd_tolerance_; }

private:
  BipartiteDensity(ComplexMatrix m, int dim_a, int dim_b, double psd_tolerance)
      : matrix_(std::move(m)), dim_a_(dim_a), dim_b_(dim_b), psd_tolerance_(psd_tolerance) {}

  friend BipartiteDensity validate_density(ComplexMatrix m, int dim_a, int dim_b,
                                           double psd_tolerance, DensityValidation* report);

  ComplexMatrix matrix_;
  int dim_a_;
  int dim_b_;
  double psd_tolerance_;
};

/// Non-throwing invariant check: Hermiticity (1e-10), unit trace (1e-10),
/// positive semidefiniteness (eigenvalues >= -psd_tolerance).
DensityValidation check_density(const ComplexMatrix& m, int dim_a, int dim_b,
                                double psd_tolerance = kDefaultPsdTolerance);

/// Throwing variant of check_density; returns the validated value.
/// When `report` is non-null it is always filled, also on failure.
BipartiteDensity validate_density(ComplexMatrix m, int dim_a, int dim_b,
                                  double psd_tolerance = kDefaultPsdTolerance,
                                  DensityValidation* report = nullptr);

/// Cyclic Jacobi eigensolver for complex Hermitian matrices. Ascending
/// eigenvalues; eigenvector columns on request. Capped at 100 sweeps with
/// an off-diagonal Frobenius threshold of 1e-12 (relative to the matrix
/// scale); exceeding the cap raises no_convergence.
HermitianSpectrum eig_hermitian(const ComplexMatrix& m, bool want_vectors = false);

/// Connected components of the sparsity graph with an edge (i,j) whenever
/// |m(i,j)| > zero_tol. Components are listed by smallest member, indices
/// ascending. Eigensolving per component reproduces the global spectrum.
std::vector<std::vector<int>> block_decompose(const ComplexMatrix& m, double zero_tol);

/// Ascending eigenvalues computed per sparsity block. Equivalent to
/// eig_hermitian(m).eigenvalues but exploits decoupled subspaces.
std::vector<double> blocked_eigenvalues(const ComplexMatrix& m, double zero_tol = 0.0);

/// -sum_i lambda_i log_base lambda_i with 0 log 0 := 0. Eigenvalues in
/// [-clamp_tolerance, 0) are clamped to zero; anything more negative is a
/// not_positive_semidefinite error.
double entropy_from_eigenvalues(std::span<const double> eigenvalues, LogBase base,
                                double clamp_tolerance = kDefaultPsdTolerance);

/// Von Neumann entropy of a density matrix (blocked eigensolve path).
double von_neumann_entropy(const ComplexMatrix& density, LogBase base,
                           double clamp_tolerance = kDefaultPsdTolerance);

/// Reduce the bipartite density by tracing out the named subsystem; the
/// result is the remaining subsystem's density matrix.
ComplexMatrix partial_trace(const BipartiteDensity& rho, Subsystem traced_out);
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, Subsystem traced_out);

}  // namespace qdiscord
