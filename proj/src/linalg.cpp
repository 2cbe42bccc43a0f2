#include "qdiscord/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qdiscord {

namespace {

constexpr int kJacobiSweepCap = 100;
constexpr double kJacobiOffdiagTolerance = 1e-12;

double offdiag_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = r + 1; c < a.cols(); ++c) sum += 2.0 * std::norm(a(r, c));
  return std::sqrt(sum);
}

ComplexMatrix hermitized(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      const Complex v = 0.5 * (m(r, c) + std::conj(m(c, r)));
      out(r, c) = v;
      out(c, r) = std::conj(v);
    }
  }
  return out;
}

ComplexMatrix submatrix(const ComplexMatrix& m, const std::vector<int>& idx) {
  ComplexMatrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
  return out;
}

}  // namespace

LogBase::LogBase(double base) : base_(base), inv_log_base_(0.0) {
  if (!(base > 1.0)) throw Error(ErrorCode::domain_error, "log base must exceed 1");
  inv_log_base_ = 1.0 / std::log(base);
}

double LogBase::log(double x) const { return std::log(x) * inv_log_base_; }

HermitianSpectrum eig_hermitian(const ComplexMatrix& m, bool want_vectors) {
  if (!m.is_square()) throw Error(ErrorCode::dimension_mismatch, "eigensolve of non-square matrix");
  const std::size_t n = m.rows();
  if (hermiticity_residual(m) > kHermitianTolerance) {
    throw Error(ErrorCode::not_hermitian, "matrix is not Hermitian within 1e-10");
  }

  ComplexMatrix a = hermitized(m);
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();
  const double scale = std::max(1.0, a.frobenius_norm());

  bool converged = n < 2;
  for (int sweep = 0; sweep < kJacobiSweepCap && !converged; ++sweep) {
    if (offdiag_frobenius(a) <= kJacobiOffdiagTolerance * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const Complex phase = apq / r;  // e^{i arg(apq)}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        // stable small root of t^2 - 2 tau t - 1 = 0
        const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * s * std::conj(phase);
          a(k, q) = -akp * s * phase + akq * c;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = app * c * c + aqq * s * s + 2.0 * r * c * s;
        a(q, q) = app * s * s + aqq * c * c - 2.0 * r * c * s;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * c + vkq * s * std::conj(phase);
            v(k, q) = -vkp * s * phase + vkq * c;
          }
        }
      }
    }
  }
  if (!converged && offdiag_frobenius(a) > kJacobiOffdiagTolerance * scale) {
    throw Error(ErrorCode::no_convergence, "Jacobi eigensolver exceeded 100 sweeps");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

  HermitianSpectrum spec;
  spec.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) spec.eigenvalues[i] = a(order[i], order[i]).real();
  if (want_vectors) {
    ComplexMatrix sorted(n, n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row) sorted(row, col) = v(row, order[col]);
    spec.eigenvectors = std::move(sorted);
  }
  return spec;
}

std::vector<std::vector<int>> block_decompose(const ComplexMatrix& m, double zero_tol) {
  if (!m.is_square()) throw Error(ErrorCode::dimension_mismatch, "block decomposition of non-square matrix");
  const int n = static_cast<int>(m.rows());
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> blocks;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> component{start};
    seen[start] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      const int i = component[head];
      for (int j = 0; j < n; ++j) {
        if (seen[j]) continue;
        if (std::abs(m(i, j)) > zero_tol || std::abs(m(j, i)) > zero_tol) {
          seen[j] = true;
          component.push_back(j);
        }
      }
    }
    std::sort(component.begin(), component.end());
    blocks.push_back(std::move(component));
  }
  return blocks;
}

std::vector<double> blocked_eigenvalues(const ComplexMatrix& m, double zero_tol) {
  std::vector<double> values;
  values.reserve(m.rows());
  for (const std::vector<int>& block : block_decompose(m, zero_tol)) {
    if (block.size() == 1) {
      values.push_back(m(block[0], block[0]).real());
    } else {
      const HermitianSpectrum spec = eig_hermitian(submatrix(m, block), false);
      values.insert(values.end(), spec.eigenvalues.begin(), spec.eigenvalues.end());
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

double entropy_from_eigenvalues(std::span<const double> eigenvalues, LogBase base,
                                double clamp_tolerance) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -clamp_tolerance) {
      std::ostringstream msg;
      msg << "eigenvalue " << lambda << " below -" << clamp_tolerance;
      throw Error(ErrorCode::not_positive_semidefinite, msg.str());
    }
    if (lambda > 0.0) s -= lambda * base.log(lambda);  // 0 log 0 := 0
  }
  return (s < 0.0 && s > -1e-12) ? 0.0 : s;
}

double von_neumann_entropy(const ComplexMatrix& density, LogBase base, double clamp_tolerance) {
  return entropy_from_eigenvalues(blocked_eigenvalues(density), base, clamp_tolerance);
}

DensityValidation check_density(const ComplexMatrix& m, int dim_a, int dim_b,
                                double psd_tolerance) {
  DensityValidation report;
  if (dim_a < 1 || dim_b < 1 || !m.is_square() ||
      m.rows() != static_cast<std::size_t>(dim_a) * static_cast<std::size_t>(dim_b)) {
    report.failure = ErrorCode::dimension_mismatch;
    report.detail = "matrix dimension must equal dim_a * dim_b";
    return report;
  }
  report.hermiticity_residual = hermiticity_residual(m);
  if (report.hermiticity_residual > kHermitianTolerance) {
    report.failure = ErrorCode::not_hermitian;
    report.detail = "Hermiticity residual exceeds 1e-10";
    return report;
  }
  report.trace_residual = std::abs(m.trace() - Complex{1.0, 0.0});
  if (report.trace_residual > kTraceTolerance) {
    report.failure = ErrorCode::trace_not_one;
    report.detail = "trace differs from 1 beyond 1e-10";
    return report;
  }
  const std::vector<double> eigenvalues = blocked_eigenvalues(m);
  report.min_eigenvalue = eigenvalues.empty() ? 0.0 : eigenvalues.front();
  for (double lambda : eigenvalues) {
    if (lambda < 0.0 && lambda >= -psd_tolerance) ++report.clamped_eigenvalues;
  }
  if (report.min_eigenvalue < -psd_tolerance) {
    report.failure = ErrorCode::not_positive_semidefinite;
    std::ostringstream msg;
    msg << "eigenvalue " << report.min_eigenvalue << " below -" << psd_tolerance;
    report.detail = msg.str();
    return report;
  }
  report.valid = true;
  return report;
}

BipartiteDensity validate_density(ComplexMatrix m, int dim_a, int dim_b, double psd_tolerance,
                                  DensityValidation* report) {
  DensityValidation local = check_density(m, dim_a, dim_b, psd_tolerance);
  if (report != nullptr) *report = local;
  if (!local.valid) {
    throw Error(*local.failure, std::string(error_code_name(*local.failure)) + ": " + local.detail);
  }
  return BipartiteDensity(std::move(m), dim_a, dim_b, psd_tolerance);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, Subsystem traced_out) {
  if (dim_a < 1 || dim_b < 1 ||
      m.rows() != static_cast<std::size_t>(dim_a) * static_cast<std::size_t>(dim_b) ||
      !m.is_square()) {
    throw Error(ErrorCode::dimension_mismatch, "partial trace dimension mismatch");
  }
  if (traced_out == Subsystem::A) {
    ComplexMatrix out(dim_b, dim_b);
    for (int b = 0; b < dim_b; ++b)
      for (int b2 = 0; b2 < dim_b; ++b2) {
        Complex sum = 0.0;
        for (int a = 0; a < dim_a; ++a) sum += m(a * dim_b + b, a * dim_b + b2);
        out(b, b2) = sum;
      }
    return out;
  }
  ComplexMatrix out(dim_a, dim_a);
  for (int a = 0; a < dim_a; ++a)
    for (int a2 = 0; a2 < dim_a; ++a2) {
      Complex sum = 0.0;
      for (int b = 0; b < dim_b; ++b) sum += m(a * dim_b + b, a2 * dim_b + b);
      out(a, a2) = sum;
    }
  return out;
}

ComplexMatrix partial_trace(const BipartiteDensity& rho, Subsystem traced_out) {
  return partial_trace(rho.matrix(), rho.dim_a(), rho.dim_b(), traced_out);
}

}  // namespace qdiscord
