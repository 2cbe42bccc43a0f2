#include "qdiscord/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qdiscord {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInterchangeTolerance = 1e-9;

double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w == kTwoPi ? 0.0 : w;
}

// Folds a polar angle into [0, pi]. When the angle lands in (pi, 2pi) it is
// mirrored and the paired phases must be shifted by pi to leave the
// generated operators unchanged; `paired` lists those phases.
void fold_polar(double& theta, std::initializer_list<double*> paired) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  if (theta > std::numbers::pi) {
    theta = kTwoPi - theta;
    for (double* phase : paired) *phase += std::numbers::pi;
  }
}

Complex expi(double x) { return Complex{std::cos(x), std::sin(x)}; }

ComplexMatrix qubit_plus_operator(double theta, double phi) {
  const double half = 0.5 * theta;
  const double c = std::cos(half);
  const double s = std::sin(half);
  ComplexMatrix a(2, 2);
  a(0, 0) = c * c;
  a(0, 1) = 0.5 * std::sin(theta) * expi(-phi);
  a(1, 0) = std::conj(a(0, 1));
  a(1, 1) = s * s;
  return a;
}

// Closed-form entries of the first qutrit operator; `sign` = -1 produces
// the second operator through the c^2 <-> s^2 interchange with cs
// sign-flipped.
ComplexMatrix qutrit_a12(const QutritMeasurementParams& p, int sign) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  double c2 = c * c;
  double s2 = s * s;
  if (sign < 0) std::swap(c2, s2);
  const double cs = sign * c * s;

  const double c1 = std::cos(p.theta1);
  const double s1 = std::sin(p.theta1);
  const double co2 = std::cos(p.theta2);
  const double si2 = std::sin(p.theta2);
  const double e1 = p.epsilon1;
  const double e2 = p.epsilon2;
  const double phi = p.phi;

  const double pp = si2 * si2 + co2 * co2 * c1;  // s2^2 + c2^2 c1
  const double qq = co2 * co2 + si2 * si2 * c1;  // c2^2 + s2^2 c1
  const double u = 1.0 - c1;
  const double f = (c2 * pp + s2 * qq) * co2 * si2 * u;
  const double g = (c2 * co2 * co2 * u - s2 * qq) * s1 * si2;
  const double cos_mix = std::cos(e1 - e2 + phi);

  ComplexMatrix a(3, 3);
  a(0, 0) = c2 * pp * pp + s2 * co2 * co2 * si2 * si2 * u * u - 2.0 * cs * co2 * si2 * u * pp * cos_mix;
  a(0, 1) = cs * (pp * qq * expi(-phi) + si2 * si2 * co2 * co2 * u * u * expi(2.0 * e1 - 2.0 * e2 + phi)) -
            f * expi(e1 - e2);
  a(0, 2) = cs * s1 * si2 * (pp * expi(e2 - phi) - co2 * co2 * u * expi(2.0 * e1 - e2 + phi)) +
            (c2 * pp - s2 * si2 * si2 * u) * s1 * co2 * expi(e1);
  a(1, 1) = c2 * si2 * si2 * co2 * co2 * u * u + s2 * qq * qq - 2.0 * cs * si2 * co2 * qq * u * cos_mix;
  a(1, 2) = cs * s1 * co2 * (qq * expi(e1 + phi) - si2 * si2 * u * expi(-(e1 - 2.0 * e2 + phi))) -
            g * expi(e2);
  a(2, 2) = c2 * s1 * s1 * co2 * co2 + s2 * s1 * s1 * si2 * si2 + 2.0 * cs * s1 * s1 * si2 * co2 * cos_mix;
  a(1, 0) = std::conj(a(0, 1));
  a(2, 0) = std::conj(a(0, 2));
  a(2, 1) = std::conj(a(1, 2));
  return a;
}

}  // namespace

QubitMeasurementParams::QubitMeasurementParams(double theta_in, double phi_in)
    : theta(theta_in), phi(phi_in) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw Error(ErrorCode::invalid_argument, "measurement angles must be finite");
  }
  fold_polar(theta, {&phi});
  phi = wrap_phase(phi);
}

Su2Params::Su2Params(double t_in, double y1_in, double y2_in, double y3_in)
    : t(t_in), y1(y1_in), y2(y2_in), y3(y3_in) {
  const double norm2 = t * t + y1 * y1 + y2 * y2 + y3 * y3;
  if (std::abs(norm2 - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "SU(2) quadruple squared norm " << norm2 << " differs from 1 beyond 1e-12";
    throw Error(ErrorCode::not_normalized, msg.str());
  }
}

QutritMeasurementParams::QutritMeasurementParams(double theta1_in, double theta2_in,
                                                 double epsilon1_in, double epsilon2_in,
                                                 double theta_in, double phi_in)
    : theta1(theta1_in),
      theta2(theta2_in),
      epsilon1(epsilon1_in),
      epsilon2(epsilon2_in),
      theta(theta_in),
      phi(phi_in) {
  for (double v : {theta1, theta2, epsilon1, epsilon2, theta, phi}) {
    if (!std::isfinite(v)) throw Error(ErrorCode::invalid_argument, "measurement angles must be finite");
  }
  fold_polar(theta1, {&epsilon1, &epsilon2});
  fold_polar(theta2, {&epsilon2});
  fold_polar(theta, {&phi});
  epsilon1 = wrap_phase(epsilon1);
  epsilon2 = wrap_phase(epsilon2);
  phi = wrap_phase(phi);
}

std::array<double, 3> su2_z_vector(const Su2Params& p) {
  return {2.0 * (-p.t * p.y2 + p.y1 * p.y3), 2.0 * (p.t * p.y1 + p.y2 * p.y3),
          p.t * p.t + p.y3 * p.y3 - p.y1 * p.y1 - p.y2 * p.y2};
}

MeasurementFamily qubit_family(const QubitMeasurementParams& p) {
  MeasurementFamily family;
  family.dim = 2;
  family.params = p;
  family.operators.push_back(qubit_plus_operator(p.theta, p.phi));

  // minus operator: diagonal interchanged, off-diagonal sign flipped
  const ComplexMatrix& plus = family.operators.front();
  ComplexMatrix minus(2, 2);
  minus(0, 0) = plus(1, 1);
  minus(1, 1) = plus(0, 0);
  minus(0, 1) = -plus(0, 1);
  minus(1, 0) = -plus(1, 0);
  family.operators.push_back(std::move(minus));
  return family;
}

ComplexMatrix qutrit_a3(const QutritMeasurementParams& p) {
  const double c1 = std::cos(p.theta1);
  const double s1 = std::sin(p.theta1);
  const double c2 = std::cos(p.theta2);
  const double s2 = std::sin(p.theta2);

  ComplexMatrix a(3, 3);
  a(0, 0) = s1 * s1 * c2 * c2;
  a(0, 1) = s1 * s1 * s2 * c2 * expi(p.epsilon1 - p.epsilon2);
  a(0, 2) = -s1 * c1 * c2 * expi(p.epsilon1);
  a(1, 1) = s1 * s1 * s2 * s2;
  a(1, 2) = -s1 * c1 * s2 * expi(p.epsilon2);
  a(2, 2) = c1 * c1;
  a(1, 0) = std::conj(a(0, 1));
  a(2, 0) = std::conj(a(0, 2));
  a(2, 1) = std::conj(a(1, 2));
  return a;
}

MeasurementFamily qutrit_family(const QutritMeasurementParams& p) {
  MeasurementFamily family;
  family.dim = 3;
  family.params = p;

  ComplexMatrix a1 = qutrit_a12(p, +1);
  ComplexMatrix a2 = qutrit_a12(p, -1);
  ComplexMatrix a3 = qutrit_a3(p);

  // Cross-check the interchange rule against completeness; a disagreement
  // means either a transcription defect or pathological parameters.
  ComplexMatrix residual = ComplexMatrix::identity(3);
  residual -= a1;
  residual -= a3;
  const double gap = max_abs_diff(a2, residual);
  if (gap > kInterchangeTolerance) {
    std::ostringstream msg;
    msg << "interchange-rule operator differs from I - A1 - A3 by " << gap;
    throw Error(ErrorCode::family_invariant_violation, msg.str());
  }

  family.operators.push_back(std::move(a1));
  family.operators.push_back(std::move(a2));
  family.operators.push_back(std::move(a3));
  return family;
}

double FamilyValidation::worst() const {
  return std::max({hermiticity, idempotence, unit_trace, completeness, annihilation, spectrum});
}

FamilyValidation validate_family(const MeasurementFamily& family, double tol) {
  FamilyValidation report;
  report.tolerance = tol;
  const std::size_t dim = static_cast<std::size_t>(family.dim);
  ComplexMatrix sum(dim, dim);
  for (std::size_t i = 0; i < family.operators.size(); ++i) {
    const ComplexMatrix& op = family.operators[i];
    report.hermiticity = std::max(report.hermiticity, hermiticity_residual(op));
    report.idempotence = std::max(report.idempotence, max_abs_diff(op * op, op));
    report.unit_trace = std::max(report.unit_trace, std::abs(op.trace() - Complex{1.0, 0.0}));
    sum += op;
    for (std::size_t j = 0; j < family.operators.size(); ++j) {
      if (i == j) continue;
      report.annihilation = std::max(report.annihilation, (op * family.operators[j]).max_abs());
    }
    std::vector<double> lambdas = eig_hermitian(op).eigenvalues;
    double spectral = std::abs(lambdas.back() - 1.0);
    for (std::size_t k = 0; k + 1 < lambdas.size(); ++k)
      spectral = std::max(spectral, std::abs(lambdas[k]));
    report.spectrum = std::max(report.spectrum, spectral);
  }
  report.completeness = max_abs_diff(sum, ComplexMatrix::identity(dim));
  report.passed = report.worst() <= tol;
  return report;
}

}  // namespace qdiscord
