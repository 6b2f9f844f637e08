#pragma once

#include <array>

#include "xsdyn/types.hpp"

namespace xsdyn {

/// A validated two-qubit density matrix in the basis {|00>,|01>,|10>,|11>}.
/// Construction checks Hermiticity, unit trace and positive semidefiniteness
/// (eigenvalues >= -tol::num) and throws NotDensityMatrix otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix4& m);

  const Matrix4& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix4 m_;
};

/// A validated single-qubit state (Hermitian, unit trace, PSD within tol::num).
class QubitState {
 public:
  explicit QubitState(const Matrix2& m);

  const Matrix2& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix2 m_;
};

/// The seven real degrees of freedom of a two-qubit X state: four diagonal
/// probabilities plus the two anti-diagonal coherences rho14 = <00|rho|11>
/// and rho23 = <01|rho|10>.
struct XState {
  double rho11 = 0.25;
  double rho22 = 0.25;
  double rho33 = 0.25;
  double rho44 = 0.25;
  Complex rho14{0.0, 0.0};
  Complex rho23{0.0, 0.0};

  /// Validated construction; throws NotDensityMatrix when the diagonal is
  /// not a probability vector or a 2x2 block fails positivity.
  static XState make(double d1, double d2, double d3, double d4,
                     Complex c14 = {}, Complex c23 = {});

  void validate() const;

  /// Diagonal entry by 1-based index (matching the usual subscripts).
  double diag(int j) const;

  /// Population difference r_{jk} = rho_jj - rho_kk, 1-based indices.
  double r(int j, int k) const { return diag(j) - diag(k); }

  bool has_real_coherences(double eps = tol::real_coh) const;

  Matrix4 to_matrix() const;
  DensityMatrix to_density() const;
};

/// Extracts the X parameters of a dense state. Throws NotXShape when any
/// entry outside the X pattern exceeds tol::shape.
XState from_dense(const DensityMatrix& m);

/// X state with the given diagonal and maximal coherences
/// |rho14| = sqrt(d1 d4), |rho23| = sqrt(d2 d3), both chosen real nonnegative.
XState max_coherence_state(double d1, double d2, double d3, double d4);

/// Relabels the qubits, |ij> -> |ji>: swaps rho22/rho33 and conjugates rho23.
XState swap_qubits(const XState& x);

/// Partial trace onto the kept qubit.
QubitState reduced_qubit(const DensityMatrix& m, QubitLabel keep);

/// Kronecker product of two single-qubit operators, U factor first.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Eigenvalues of a 4x4 Hermitian matrix, ascending.
Eigen::Vector4d hermitian_eigenvalues(const Matrix4& m);

/// Exact eigenvalues of an X state from its two 2x2 blocks, ascending.
/// Cross-check path for the dense Hermitian solver.
std::array<double, 4> xstate_eigenvalues(const XState& x);

/// Von Neumann entropy in bits, with 0 log 0 := 0.
double von_neumann_entropy(const DensityMatrix& m);
double von_neumann_entropy(const QubitState& q);

/// Trace distance (half the sum of singular values of a - b), in [0, 1].
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Unvalidated core of trace_distance; both arguments must be Hermitian.
double trace_distance_hermitian(const Matrix4& a, const Matrix4& b);

}  // namespace xsdyn
