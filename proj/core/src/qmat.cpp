#include "xsdyn/qmat.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace xsdyn {

namespace {

void check_hermitian_unit_trace(const Eigen::MatrixXcd& m, const char* what) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::num) {
    throw NotDensityMatrix(std::string(what) + ": not Hermitian, defect " +
                           std::to_string(herm));
  }
  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_err > tol::num) {
    throw NotDensityMatrix(std::string(what) + ": trace differs from 1 by " +
                           std::to_string(trace_err));
  }
}

double entropy_bits(const Eigen::VectorXd& eigs) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    const double lam = eigs(i);
    if (lam > 0.0) s -= lam * std::log2(lam);
  }
  return s;
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix4& m) : m_(m) {
  check_hermitian_unit_trace(m_, "DensityMatrix");
  const Eigen::SelfAdjointEigenSolver<Matrix4> es(m_,
                                                  Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::num) {
    throw NotDensityMatrix("DensityMatrix: negative eigenvalue " +
                           std::to_string(es.eigenvalues().minCoeff()));
  }
}

QubitState::QubitState(const Matrix2& m) : m_(m) {
  check_hermitian_unit_trace(m_, "QubitState");
  const Eigen::SelfAdjointEigenSolver<Matrix2> es(m_,
                                                  Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::num) {
    throw NotDensityMatrix("QubitState: negative eigenvalue " +
                           std::to_string(es.eigenvalues().minCoeff()));
  }
}

XState XState::make(double d1, double d2, double d3, double d4, Complex c14,
                    Complex c23) {
  XState x{d1, d2, d3, d4, c14, c23};
  x.validate();
  return x;
}

void XState::validate() const {
  const double ds[4] = {rho11, rho22, rho33, rho44};
  for (double d : ds) {
    if (!(d >= -tol::num)) {
      throw NotDensityMatrix("XState: negative diagonal entry " +
                             std::to_string(d));
    }
  }
  const double sum = rho11 + rho22 + rho33 + rho44;
  if (std::abs(sum - 1.0) > tol::num) {
    throw NotDensityMatrix("XState: diagonal sums to " + std::to_string(sum));
  }
  if (std::abs(rho14) > std::sqrt(std::max(0.0, rho11 * rho44)) + tol::num) {
    throw NotDensityMatrix("XState: |rho14| violates block positivity");
  }
  if (std::abs(rho23) > std::sqrt(std::max(0.0, rho22 * rho33)) + tol::num) {
    throw NotDensityMatrix("XState: |rho23| violates block positivity");
  }
}

double XState::diag(int j) const {
  switch (j) {
    case 1: return rho11;
    case 2: return rho22;
    case 3: return rho33;
    case 4: return rho44;
    default: throw std::out_of_range("XState::diag: index must be 1..4");
  }
}

bool XState::has_real_coherences(double eps) const {
  return std::abs(rho14.imag()) < eps && std::abs(rho23.imag()) < eps;
}

Matrix4 XState::to_matrix() const {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = rho11;
  m(1, 1) = rho22;
  m(2, 2) = rho33;
  m(3, 3) = rho44;
  m(0, 3) = rho14;
  m(3, 0) = std::conj(rho14);
  m(1, 2) = rho23;
  m(2, 1) = std::conj(rho23);
  return m;
}

DensityMatrix XState::to_density() const { return DensityMatrix(to_matrix()); }

XState from_dense(const DensityMatrix& m) {
  const Matrix4& r = m.matrix();
  double off = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool x_entry = (i == j) || (i + j == 3);
      if (!x_entry) off = std::max(off, std::abs(r(i, j)));
    }
  }
  if (off > tol::shape) {
    throw NotXShape("from_dense: non-X entry of magnitude " +
                    std::to_string(off));
  }
  return XState::make(r(0, 0).real(), r(1, 1).real(), r(2, 2).real(),
                      r(3, 3).real(), r(0, 3), r(1, 2));
}

XState max_coherence_state(double d1, double d2, double d3, double d4) {
  const double ds[4] = {d1, d2, d3, d4};
  for (double d : ds) {
    if (!(d >= -tol::num)) {
      throw InvalidProbabilities("max_coherence_state: negative weight");
    }
  }
  if (std::abs(d1 + d2 + d3 + d4 - 1.0) > tol::num) {
    throw InvalidProbabilities("max_coherence_state: weights must sum to 1");
  }
  return XState::make(d1, d2, d3, d4,
                      Complex(std::sqrt(std::max(0.0, d1 * d4)), 0.0),
                      Complex(std::sqrt(std::max(0.0, d2 * d3)), 0.0));
}

XState swap_qubits(const XState& x) {
  return XState{x.rho11, x.rho33, x.rho22, x.rho44, x.rho14,
                std::conj(x.rho23)};
}

QubitState reduced_qubit(const DensityMatrix& m, QubitLabel keep) {
  const Matrix4& r = m.matrix();
  Matrix2 out;
  if (keep == QubitLabel::U) {
    // trace out the second factor: indices (a c, b c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        out(a, b) = r(2 * a, 2 * b) + r(2 * a + 1, 2 * b + 1);
  } else {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        out(a, b) = r(a, b) + r(a + 2, b + 2);
  }
  return QubitState(out);
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Eigen::Vector4d hermitian_eigenvalues(const Matrix4& m) {
  const Eigen::SelfAdjointEigenSolver<Matrix4> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

std::array<double, 4> xstate_eigenvalues(const XState& x) {
  const auto block = [](double a, double d, Complex c) {
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(c));
    return std::pair{mid - rad, mid + rad};
  };
  const auto [outer_lo, outer_hi] = block(x.rho11, x.rho44, x.rho14);
  const auto [inner_lo, inner_hi] = block(x.rho22, x.rho33, x.rho23);
  std::array<double, 4> eigs{outer_lo, outer_hi, inner_lo, inner_hi};
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double von_neumann_entropy(const DensityMatrix& m) {
  Eigen::Vector4d eigs = hermitian_eigenvalues(m.matrix());
  return entropy_bits(eigs);
}

double von_neumann_entropy(const QubitState& q) {
  const Eigen::SelfAdjointEigenSolver<Matrix2> es(q.matrix(),
                                                  Eigen::EigenvaluesOnly);
  return entropy_bits(es.eigenvalues());
}

double trace_distance_hermitian(const Matrix4& a, const Matrix4& b) {
  const Eigen::SelfAdjointEigenSolver<Matrix4> es(a - b,
                                                  Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance_hermitian(a.matrix(), b.matrix());
}

}  // namespace xsdyn
