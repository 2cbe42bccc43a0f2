#pragma once

#include <array>
#include <variant>
#include <vector>

#include "qdiscord/linalg.hpp"

namespace qdiscord {

/// Bloch polar angles of the two-outcome qubit measurement family.
/// Construction folds arbitrary reals into theta in [0, pi], phi in
/// [0, 2*pi) without changing the generated operators.
struct QubitMeasurementParams {
  double theta = 0.0;
  double phi = 0.0;

  QubitMeasurementParams() = default;
  QubitMeasurementParams(double theta_in, double phi_in);
};

/// Real quadruple (t, y1, y2, y3) of U = t*I + i*(y . sigma), constrained
/// to the unit 3-sphere.
struct Su2Params {
  double t = 1.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;

  Su2Params() = default;
  Su2Params(double t_in, double y1_in, double y2_in, double y3_in);
};

/// The six angles of the three-outcome qutrit family: two polar pairs
/// (theta1, epsilon1), (theta2, epsilon2) selecting the third projector's
/// axis, plus an embedded two-outcome pair (theta, phi) splitting the
/// orthogonal plane. Folding is operator-preserving as for the qubit case.
struct QutritMeasurementParams {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double epsilon1 = 0.0;
  double epsilon2 = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  QutritMeasurementParams() = default;
  QutritMeasurementParams(double theta1_in, double theta2_in, double epsilon1_in,
                          double epsilon2_in, double theta_in, double phi_in);
};

using MeasurementParams = std::variant<QubitMeasurementParams, QutritMeasurementParams>;

/// A complete set of dim rank-1 von Neumann measurement operators:
/// Hermitian, idempotent, unit trace, mutually annihilating, summing to I.
struct MeasurementFamily {
  int dim = 0;
  std::vector<ComplexMatrix> operators;
  MeasurementParams params;
};

/// The measurement axis z' = U z U^dag expressed through the SU(2)
/// quadruple: {2(-t y2 + y1 y3), 2(t y1 + y2 y3), t^2 + y3^2 - y1^2 - y2^2}.
std::array<double, 3> su2_z_vector(const Su2Params& p);

/// Two-outcome qubit family. The minus operator has the diagonal entries
/// interchanged and sign-flipped off-diagonals, i.e. the plus operator at
/// (pi - theta, pi + phi).
MeasurementFamily qubit_family(const QubitMeasurementParams& p);

/// Third qutrit projector; depends only on (theta1, theta2, epsilon1,
/// epsilon2), never on (theta, phi).
ComplexMatrix qutrit_a3(const QutritMeasurementParams& p);

/// Full three-outcome qutrit family. The second operator is built twice,
/// by the c^2 <-> s^2 / cs -> -cs interchange rule and as I - A1 - A3;
/// disagreement beyond 1e-9 raises family_invariant_violation.
MeasurementFamily qutrit_family(const QutritMeasurementParams& p);

struct FamilyValidation {
  double hermiticity = 0.0;
  double idempotence = 0.0;
  double unit_trace = 0.0;
  double completeness = 0.0;
  double annihilation = 0.0;
  double spectrum = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  double worst() const;
};

/// Max residual of every family invariant; passed iff worst() <= tol.
FamilyValidation validate_family(const MeasurementFamily& family, double tol);

}  // namespace qdiscord
