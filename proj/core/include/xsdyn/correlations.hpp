#pragma once

#include <cstdint>

#include "xsdyn/qmat.hpp"
#include "xsdyn/types.hpp"

namespace xsdyn {

/// Concurrence of an X state, 2 max{0, |rho23| - sqrt(rho11 rho44),
/// |rho14| - sqrt(rho22 rho33)}.
double concurrence_x(const XState& x);

/// Wootters spin-flip concurrence of an arbitrary two-qubit state.
/// Independent of the X closed form; serves as its oracle.
double concurrence_oracle(const DensityMatrix& m);

/// The three eigenvalues of M^T M specialised to X states:
///   u1 = 4(|rho14| + |rho23|)^2, u2 = (r12 + r43)^2,
///   u3 = 4(|rho14| - |rho23|)^2.
/// u1 >= u3 holds identically.
struct BellEigenvalues {
  double u1;
  double u2;
  double u3;
};

BellEigenvalues bell_eigenvalues(const XState& x);

/// Maximal CHSH value F = 2 sqrt(u1 + max{u2, u3}), in [0, 2 sqrt 2].
double bell_f_x(const XState& x);

/// Builds the 3x3 correlation matrix M_ij = tr[rho sigma_i (x) sigma_j]
/// numerically and returns 2 sqrt(u + u~) from the two largest eigenvalues
/// of M^T M. Independent route used as the oracle for bell_f_x.
double bell_oracle(const DensityMatrix& m);

/// Coordinates of the closed-form trace-distance discord for X states with
/// real coherences:
///   gamma1 = 2(rho23 + rho14), gamma2 = 2(rho23 - rho14),
///   gamma3 = 1 - 2(rho22 + rho33), x = 2(rho11 + rho22) - 1.
struct GammaCoords {
  double gamma1;
  double gamma2;
  double gamma3;
  double x;
};

/// Throws ComplexCoherence when an imaginary part exceeds tol::real_coh.
GammaCoords gamma_coords(const XState& x);

/// The three regions of X-state space with distinct discord expressions:
///   A: |gamma3| >= |gamma1|
///   B: |gamma3| <  |gamma1| and gamma3^2 >= gamma2^2 + x^2
///   C: otherwise
/// Boundaries are assigned to A and B respectively.
enum class DiscordSegment { A, B, C };

char to_char(DiscordSegment s);
DiscordSegment discord_segment(const GammaCoords& g);

struct DiscordValue {
  double value;
  DiscordSegment segment;
  bool flagged_singular;  // segment-C denominator guard tripped; value taken
                          // at a perturbed point
};

/// Segment-wise closed form: A -> |gamma1|/2, B -> |gamma3|/2,
/// C -> (1/2) sqrt[(g1^2 (g2^2 + x^2) - g2^2 g3^2) / (g1^2 - g3^2 + x^2)].
DiscordValue discord_from_coords(const GammaCoords& g);

/// The unsimplified max/min expression the segment forms derive from.
/// Used as an internal cross-check; indeterminate (0/0) on a measure-zero
/// set where the segment forms still apply.
double discord_minmax_form(const GammaCoords& g);

/// Trace-distance discord of a real-coherence X state, in [0, 1/2].
double discord_x(const XState& x);
DiscordValue discord_x_detailed(const XState& x);

struct DiscordOracleOptions {
  int restarts = 32;
  std::uint64_t seed = 42;
  int max_iterations = 400;
  double ftol = 1e-9;
};

/// Numerically minimises trace_distance(m, rho~) over classical-quantum
/// states rho~ = sum_j |a_j><a_j| (x) W_j (orthonormal basis on U, positive
/// weights on L) by seeded multi-start Nelder-Mead. Upper-bounds the true
/// discord up to optimizer slack.
double discord_oracle(const DensityMatrix& m,
                      const DiscordOracleOptions& options = {});

}  // namespace xsdyn
