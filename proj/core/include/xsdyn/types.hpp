#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace xsdyn {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

// Tolerances used across the library. Closed-form arithmetic on 4x4
// matrices keeps everything near machine precision, so the algebraic
// tolerances sit there; sweep-level tolerances absorb accumulation.
namespace tol {
inline constexpr double num = 1e-12;      // algebraic identities, matrix-element equality
inline constexpr double shape = 1e-12;    // X-pattern validation
inline constexpr double real_coh = 1e-9;  // real-coherence precondition of closed-form discord
inline constexpr double den = 1e-12;      // discord segment-C denominator guard
inline constexpr double sym = 1e-10;      // symmetry verdicts on p-sweeps
inline constexpr double zero = 1e-10;     // concurrence zero detection
inline constexpr double fit = 1e-8;       // noiseless discrimination acceptance
inline constexpr double invariant = 1e-9; // time-invariance of discord
}  // namespace tol

// Which qubit a one-sided channel acts on. In the computational basis
// {|00>,|01>,|10>,|11>} the first tensor factor is U, the second is L.
enum class QubitLabel { U, L };

inline QubitLabel other(QubitLabel q) {
  return q == QubitLabel::U ? QubitLabel::L : QubitLabel::U;
}

inline char to_char(QubitLabel q) { return q == QubitLabel::U ? 'U' : 'L'; }

struct NotDensityMatrix : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotXShape : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidProbabilities : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidStrength : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadLayout : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ComplexCoherence : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SingularDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xsdyn
