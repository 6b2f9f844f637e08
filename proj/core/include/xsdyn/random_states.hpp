#pragma once

#include <array>
#include <cmath>
#include <random>

#include "xsdyn/qmat.hpp"

namespace xsdyn {

/// How the coherences of a random X state are drawn relative to their
/// positivity bounds sqrt(rho11 rho44) and sqrt(rho22 rho33).
enum class CoherenceMode {
  Zero,          // diagonal state
  Complex,       // random magnitude fraction, random phases
  Real,          // random magnitude fraction, independent random signs
  RealSameSign,  // random magnitude fraction, one shared sign
  Maximal,       // |rho14|, |rho23| at their bounds, real nonnegative
};

/// Random probability 4-vector (flat Dirichlet).
inline std::array<double, 4> random_diagonal(std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::array<double, 4> d{};
  double sum = 0.0;
  for (auto& v : d) {
    v = exp1(rng);
    sum += v;
  }
  for (auto& v : d) v /= sum;
  return d;
}

/// Draws a valid X state: flat Dirichlet diagonal, coherence magnitudes a
/// uniform fraction of the positivity bound.
inline XState random_x_state(std::mt19937_64& rng,
                             CoherenceMode mode = CoherenceMode::Complex) {
  const auto d = random_diagonal(rng);
  const double b14 = std::sqrt(d[0] * d[3]);
  const double b23 = std::sqrt(d[1] * d[2]);

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  Complex c14{0.0, 0.0};
  Complex c23{0.0, 0.0};
  switch (mode) {
    case CoherenceMode::Zero:
      break;
    case CoherenceMode::Complex:
      c14 = std::polar(unit(rng) * b14, angle(rng));
      c23 = std::polar(unit(rng) * b23, angle(rng));
      break;
    case CoherenceMode::Real: {
      const double s14 = unit(rng) < 0.5 ? -1.0 : 1.0;
      const double s23 = unit(rng) < 0.5 ? -1.0 : 1.0;
      c14 = Complex(s14 * unit(rng) * b14, 0.0);
      c23 = Complex(s23 * unit(rng) * b23, 0.0);
      break;
    }
    case CoherenceMode::RealSameSign: {
      const double s = unit(rng) < 0.5 ? -1.0 : 1.0;
      c14 = Complex(s * unit(rng) * b14, 0.0);
      c23 = Complex(s * unit(rng) * b23, 0.0);
      break;
    }
    case CoherenceMode::Maximal:
      c14 = Complex(b14, 0.0);
      c23 = Complex(b23, 0.0);
      break;
  }
  return XState::make(d[0], d[1], d[2], d[3], c14, c23);
}

}  // namespace xsdyn
