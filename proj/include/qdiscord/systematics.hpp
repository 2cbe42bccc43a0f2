#pragma once

#include <string>
#include <vector>

namespace qdiscord {

/// State families with exact parameter counts. X and extended-X counts are
/// the dimensions of the preserving sub-algebras; all arithmetic is exact
/// integer work.
enum class StateFamily {
  general,
  x,
  extended_x,
  su2_blocks,
  u1_blocks,
  quantum_classical,
  pure,
};

const char* state_family_name(StateFamily family);

/// Parameter count for n copies of a d-level system. Multipartite X /
/// extended-X closed forms exist for d in {2, 3} (plus X for d = 4); other
/// d raise unsupported_dimension rather than extrapolate. su2_blocks /
/// u1_blocks count the sub-algebra factors of the qubit X family.
long long count_multi(StateFamily family, int d, int n);

/// Parameter count for a bipartite d x D system. X states branch on the
/// parity of d*D (2dD-1 even, 2dD-2 odd); extended-X states on the parity
/// of the partner dimension D (2 d^2 D - 1 even, d^2 (2D-1) - 1 odd).
long long count_bipartite(StateFamily family, int d, int D);

/// pure: 2(d^n - 1) real parameters; quantum_classical: d(D^2 + d - 1) - 1
/// where the second argument is n resp. D.
long long count_special(StateFamily kind, int d, int second);

struct Table2Row {
  std::string label;
  std::string closed_form;
  std::vector<long long> values;  // n = 1 .. n_max
};

struct Table2 {
  int n_max = 0;
  std::vector<Table2Row> qubit_rows;
  std::vector<Table2Row> qutrit_rows;
};

/// Both enumeration panels (qubits and qutrits), n = 1..n_max; every cell
/// equals the corresponding count_multi value.
Table2 table2(int n_max = 8);

std::string render_table2(const Table2& table);

/// Bracketed tensor-factor description of the X-state sub-algebra for n
/// qubits or qutrits, e.g. "su(2) (x) u(1) (x) su(2)" for two qubits.
std::string subalgebra_structure(int d, int n);

}  // namespace qdiscord
