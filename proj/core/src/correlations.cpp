#include "xsdyn/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "xsdyn/channels.hpp"
#include "xsdyn/nelder_mead.hpp"

namespace xsdyn {

double concurrence_x(const XState& x) {
  const double b1 = std::abs(x.rho23) - std::sqrt(std::max(0.0, x.rho11 * x.rho44));
  const double b2 = std::abs(x.rho14) - std::sqrt(std::max(0.0, x.rho22 * x.rho33));
  return 2.0 * std::max({0.0, b1, b2});
}

double concurrence_oracle(const DensityMatrix& m) {
  const Matrix4 yy = kron(pauli(2), pauli(2));
  const Matrix4& rho = m.matrix();
  const Matrix4 flipped = yy * rho.conjugate() * yy;

  // sqrt(rho) through the eigendecomposition, clamping tiny negatives.
  Eigen::SelfAdjointEigenSolver<Matrix4> es(rho);
  Eigen::Vector4d lam = es.eigenvalues().cwiseMax(0.0);
  const Matrix4 sqrt_rho = es.eigenvectors() *
                           lam.cwiseSqrt().asDiagonal() *
                           es.eigenvectors().adjoint();

  const Matrix4 r = sqrt_rho * flipped * sqrt_rho;
  Eigen::Vector4d mu = hermitian_eigenvalues(r).cwiseMax(0.0);  // ascending
  const double c = std::sqrt(mu(3)) - std::sqrt(mu(2)) - std::sqrt(mu(1)) -
                   std::sqrt(mu(0));
  return std::max(0.0, c);
}

BellEigenvalues bell_eigenvalues(const XState& x) {
  const double a14 = std::abs(x.rho14);
  const double a23 = std::abs(x.rho23);
  const double s = x.r(1, 2) + x.r(4, 3);
  return BellEigenvalues{4.0 * (a14 + a23) * (a14 + a23), s * s,
                         4.0 * (a14 - a23) * (a14 - a23)};
}

double bell_f_x(const XState& x) {
  const BellEigenvalues u = bell_eigenvalues(x);
  return 2.0 * std::sqrt(u.u1 + std::max(u.u2, u.u3));
}

double bell_oracle(const DensityMatrix& m) {
  Eigen::Matrix3d corr;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const Complex t = (m.matrix() * kron(pauli(i), pauli(j))).trace();
      corr(i - 1, j - 1) = t.real();
    }
  }
  const Eigen::Matrix3d u_rho = corr.transpose() * corr;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(u_rho,
                                                    Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  return 2.0 * std::sqrt(std::max(0.0, ev(2)) + std::max(0.0, ev(1)));
}

GammaCoords gamma_coords(const XState& x) {
  if (!x.has_real_coherences()) {
    throw ComplexCoherence(
        "gamma_coords: closed-form discord needs real coherences");
  }
  const double r14 = x.rho14.real();
  const double r23 = x.rho23.real();
  return GammaCoords{2.0 * (r23 + r14), 2.0 * (r23 - r14),
                     1.0 - 2.0 * (x.rho22 + x.rho33),
                     2.0 * (x.rho11 + x.rho22) - 1.0};
}

char to_char(DiscordSegment s) {
  switch (s) {
    case DiscordSegment::A: return 'A';
    case DiscordSegment::B: return 'B';
    case DiscordSegment::C: return 'C';
  }
  return '?';
}

DiscordSegment discord_segment(const GammaCoords& g) {
  if (std::abs(g.gamma3) >= std::abs(g.gamma1)) return DiscordSegment::A;
  if (g.gamma3 * g.gamma3 >= g.gamma2 * g.gamma2 + g.x * g.x)
    return DiscordSegment::B;
  return DiscordSegment::C;
}

DiscordValue discord_from_coords(const GammaCoords& g) {
  const DiscordSegment seg = discord_segment(g);
  switch (seg) {
    case DiscordSegment::A:
      return DiscordValue{0.5 * std::abs(g.gamma1), seg, false};
    case DiscordSegment::B:
      return DiscordValue{0.5 * std::abs(g.gamma3), seg, false};
    case DiscordSegment::C: break;
  }

  // Segment C keeps gamma1^2 - gamma3^2 > 0, so the denominator is positive;
  // it can still underflow the guard right at the A boundary with x ~ 0.
  GammaCoords c = g;
  bool flagged = false;
  double g1s = c.gamma1 * c.gamma1;
  double g3s = c.gamma3 * c.gamma3;
  double den = g1s - g3s + c.x * c.x;
  if (std::abs(den) < tol::den) {
    flagged = true;
    double delta = 1e-9 * std::max(1.0, std::abs(c.gamma1));
    for (int tries = 0; std::abs(den) < 10.0 * tol::den; ++tries) {
      if (tries >= 6) {
        throw SingularDenominator(
            "discord: segment-C denominator stayed below the guard");
      }
      c.gamma1 = std::copysign(std::abs(g.gamma1) + delta, g.gamma1 == 0.0
                                                               ? 1.0
                                                               : g.gamma1);
      g1s = c.gamma1 * c.gamma1;
      den = g1s - g3s + c.x * c.x;
      delta *= 10.0;
    }
  }
  const double g2s = c.gamma2 * c.gamma2;
  const double num = g1s * (g2s + c.x * c.x) - g2s * g3s;
  const double d = 0.5 * std::sqrt(std::max(0.0, num / den));
  return DiscordValue{d, seg, flagged};
}

double discord_minmax_form(const GammaCoords& g) {
  const double g1s = g.gamma1 * g.gamma1;
  const double g2s = g.gamma2 * g.gamma2;
  const double g3s = g.gamma3 * g.gamma3;
  const double hi = std::max(g3s, g2s + g.x * g.x);
  const double lo = std::min(g3s, g1s);
  const double num = g1s * hi - g2s * lo;
  const double den = hi - lo + g1s - g2s;
  return 0.5 * std::sqrt(std::max(0.0, num / den));
}

DiscordValue discord_x_detailed(const XState& x) {
  return discord_from_coords(gamma_coords(x));
}

double discord_x(const XState& x) { return discord_x_detailed(x).value; }

namespace {

Eigen::Vector2cd basis_vector(double theta, double phi, bool second) {
  const double half = 0.5 * theta;
  const Complex phase = std::polar(1.0, phi);
  Eigen::Vector2cd v;
  if (!second) {
    v << std::cos(half), phase * std::sin(half);
  } else {
    v << -std::conj(phase) * std::sin(half), std::cos(half);
  }
  return v;
}

// Classical-quantum candidate built from 9 smooth unconstrained parameters:
// two basis angles on U, a weight, and radius/direction angles for the two
// L-qubit Bloch vectors.
Matrix4 cq_state(const std::vector<double>& z) {
  const Eigen::Vector2cd a1 = basis_vector(z[0], z[1], false);
  const Eigen::Vector2cd a2 = basis_vector(z[0], z[1], true);

  const double w = 0.5 * (1.0 + std::sin(z[2]));

  const auto l_state = [](double zr, double polar, double azim) {
    const double r = 0.5 * (1.0 + std::sin(zr));
    const double sx = r * std::sin(polar) * std::cos(azim);
    const double sy = r * std::sin(polar) * std::sin(azim);
    const double sz = r * std::cos(polar);
    Matrix2 w2;
    w2 << 0.5 * (1.0 + sz), 0.5 * Complex(sx, -sy), 0.5 * Complex(sx, sy),
        0.5 * (1.0 - sz);
    return w2;
  };
  const Matrix2 w1 = w * l_state(z[3], z[4], z[5]);
  const Matrix2 w2 = (1.0 - w) * l_state(z[6], z[7], z[8]);

  return kron(Matrix2(a1 * a1.adjoint()), w1) +
         kron(Matrix2(a2 * a2.adjoint()), w2);
}

// Inverse of the smooth parameter maps, used to seed structured starts from
// an explicit Bloch-vector description.
void encode_l_state(const Eigen::Vector3d& bloch, double* out3) {
  const double r = std::min(bloch.norm(), 1.0 - 1e-12);
  out3[0] = std::asin(2.0 * r - 1.0);
  out3[1] = r > 1e-14 ? std::acos(std::clamp(bloch(2) / r, -1.0, 1.0)) : 0.0;
  out3[2] = std::atan2(bloch(1), bloch(0));
}

// The state dephased in the U basis (theta, phi): the exact conditional
// L states of rho make a strong starting point for the search.
std::vector<double> measured_start(const Matrix4& rho, double theta,
                                   double phi) {
  std::vector<double> z(9, 0.0);
  z[0] = theta;
  z[1] = phi;
  const Eigen::Vector2cd a1 = basis_vector(theta, phi, false);
  const Eigen::Vector2cd a2 = basis_vector(theta, phi, true);

  const auto conditional = [&rho](const Eigen::Vector2cd& a) {
    Matrix2 w = Matrix2::Zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            w(j, l) += std::conj(a(i)) * rho(2 * i + j, 2 * k + l) * a(k);
    return w;
  };
  const Matrix2 w1 = conditional(a1);
  const Matrix2 w2 = conditional(a2);
  const double t1 = std::max(w1.trace().real(), 1e-14);
  const double t2 = std::max(w2.trace().real(), 1e-14);
  z[2] = std::asin(std::clamp(2.0 * t1 / (t1 + t2) - 1.0, -1.0, 1.0));
  const auto bloch = [](const Matrix2& w, double t) {
    return Eigen::Vector3d{2.0 * w(0, 1).real() / t, -2.0 * w(0, 1).imag() / t,
                           (w(0, 0).real() - w(1, 1).real()) / t};
  };
  encode_l_state(bloch(w1, t1), &z[3]);
  encode_l_state(bloch(w2, t2), &z[6]);
  return z;
}

}  // namespace

double discord_oracle(const DensityMatrix& m,
                      const DiscordOracleOptions& options) {
  const Matrix4& rho = m.matrix();
  const auto objective = [&rho](const std::vector<double>& z) {
    return trace_distance_hermitian(rho, cq_state(z));
  };

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);

  NelderMeadOptions nm;
  nm.max_iterations = options.max_iterations;
  nm.ftol = options.ftol;
  nm.initial_step = 0.35;

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_x(9, 0.0);
  const auto consider = [&](std::vector<double> start) {
    const NelderMeadResult res = nelder_mead(objective, std::move(start), nm);
    if (res.fmin < best) {
      best = res.fmin;
      best_x = res.x;
    }
  };

  // Principal-axis measurement bases with the exact conditional L states.
  consider(measured_start(rho, 0.0, 0.0));            // sigma_3 basis
  consider(measured_start(rho, 0.5 * M_PI, 0.0));     // sigma_1 basis
  consider(measured_start(rho, 0.5 * M_PI, 0.5 * M_PI));  // sigma_2 basis

  for (int r = 0; r < options.restarts; ++r) {
    std::vector<double> start(9);
    start[0] = u01(rng) * M_PI;
    start[1] = u01(rng) * 2.0 * M_PI;
    start[2] = (u01(rng) - 0.5) * M_PI;
    start[3] = (u01(rng) - 0.5) * M_PI;
    start[4] = u01(rng) * M_PI;
    start[5] = u01(rng) * 2.0 * M_PI;
    start[6] = (u01(rng) - 0.5) * M_PI;
    start[7] = u01(rng) * M_PI;
    start[8] = u01(rng) * 2.0 * M_PI;
    consider(std::move(start));
  }

  // Two shrinking polish passes around the incumbent.
  for (double step : {0.03, 0.003}) {
    NelderMeadOptions polish = nm;
    polish.initial_step = step;
    const NelderMeadResult res = nelder_mead(objective, best_x, polish);
    if (res.fmin < best) {
      best = res.fmin;
      best_x = res.x;
    }
  }
  return best;
}

}  // namespace xsdyn
