#pragma once

#include <array>
#include <cmath>
#include <random>

#include "xsdyn/qmat.hpp"
#include "xsdyn/random_states.hpp"

namespace xsdyn::testing {

inline std::mt19937_64 seeded_rng(std::uint64_t seed = 42) {
  return std::mt19937_64(seed);
}

inline XState bell_phi_plus() {
  return XState::make(0.5, 0.0, 0.0, 0.5, Complex(0.5, 0.0), Complex(0.0, 0.0));
}

inline XState maximally_mixed() { return XState::make(0.25, 0.25, 0.25, 0.25); }

inline XState fig3_state() { return max_coherence_state(0.35, 0.4, 0.05, 0.2); }
inline XState fig6_state() { return max_coherence_state(0.9, 0.0, 0.08, 0.02); }
inline XState fig7_state() {
  return max_coherence_state(0.0, 0.1875, 0.8125, 0.0);
}

/// Worked real-coherence example used throughout: diagonal
/// (0.5, 0.05, 0.05, 0.4) with rho14 = 0.1, rho23 = 0.05, i.e.
/// gamma = (0.3, -0.1, 0.8), x = 0.1.
inline XState worked_state() {
  return XState::make(0.5, 0.05, 0.05, 0.4, Complex(0.1, 0.0),
                      Complex(0.05, 0.0));
}

/// Random diagonal with the entries indexed by `sorted_pairs` forced equal
/// and minimum separations elsewhere; used for the Table-1 column families.
struct Table1Family {
  bool eq_22_33 = false;     // rho22 = rho33
  bool eq_11_44 = false;     // rho11 = rho44
  bool zero_44 = false;      // rho44 = 0
  bool zero_11_44 = false;   // rho11 = rho44 = 0
};

/// Draws a maximal-coherence state in one of the Table-1 column families,
/// keeping the inequality constraints well separated (gap >= 0.1 between
/// rho22 and rho33, rho11 bounded away from rho44 and from 1/4 where the
/// family demands it).
inline XState table1_state(std::mt19937_64& rng, int column) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (;;) {
    double d1, d2, d3, d4;
    switch (column) {
      case 1: {  // rho22 = rho33
        d2 = d3 = 0.05 + 0.2 * u01(rng);
        d1 = u01(rng) * (1.0 - 2.0 * d2);
        d4 = 1.0 - 2.0 * d2 - d1;
        break;
      }
      case 2: {  // rho22 != rho33, rho11 = rho44 != 0
        d1 = d4 = 0.05 + 0.3 * u01(rng);
        d2 = u01(rng) * (1.0 - 2.0 * d1);
        d3 = 1.0 - 2.0 * d1 - d2;
        break;
      }
      case 3: {  // rho22 != rho33, rho11 = rho44 = 0
        d1 = d4 = 0.0;
        d2 = u01(rng);
        d3 = 1.0 - d2;
        break;
      }
      case 4: {  // rho22 != rho33, rho11 != rho44 = 0
        d4 = 0.0;
        d1 = 0.1 + 0.6 * u01(rng);
        d2 = u01(rng) * (1.0 - d1);
        d3 = 1.0 - d1 - d2;
        break;
      }
      default:
        throw std::invalid_argument("table1_state: column must be 1..4");
    }
    if (d1 < -1e-15 || d2 < -1e-15 || d3 < -1e-15 || d4 < -1e-15) continue;
    if (column != 1 && std::abs(d2 - d3) < 0.1) continue;
    if (column == 2 && std::abs(d1 - 0.25) < 0.05) continue;
    if (column == 4 && d1 < 0.05) continue;
    // Nonzero initial concurrence needs the two block products separated.
    if (std::abs(std::sqrt(d1 * d4) - std::sqrt(d2 * d3)) < 0.02) continue;
    return max_coherence_state(d1, d2, d3, d4);
  }
}

}  // namespace xsdyn::testing
