#include "xsdyn/channels.hpp"

#include <cmath>

namespace xsdyn {

namespace {

void check_strength(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidStrength(std::string(what) + ": p must lie in [0, 1], got " +
                          std::to_string(p));
  }
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::Depolarizing: return "depolarizing";
    case ChannelKind::AmplitudeDamping: return "amplitude_damping";
    case ChannelKind::BitFlip: return "bit_flip";
    case ChannelKind::BitPhaseFlip: return "bit_phase_flip";
    case ChannelKind::Dephasing: return "dephasing";
  }
  return "?";
}

std::optional<ChannelKind> channel_kind_from(std::string_view name) {
  if (name == "depolarizing") return ChannelKind::Depolarizing;
  if (name == "amplitude_damping") return ChannelKind::AmplitudeDamping;
  if (name == "bit_flip") return ChannelKind::BitFlip;
  if (name == "bit_phase_flip") return ChannelKind::BitPhaseFlip;
  if (name == "dephasing") return ChannelKind::Dephasing;
  return std::nullopt;
}

const Matrix2& pauli(int i) {
  static const std::array<Matrix2, 4> mats = [] {
    std::array<Matrix2, 4> m;
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  return mats.at(static_cast<std::size_t>(i));
}

double KrausSet::completeness_defect() const {
  if (ops.empty()) return 1.0;
  const Eigen::Index n = ops.front().rows();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& k : ops) sum += k.adjoint() * k;
  return (sum - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

OneSidedChannel::OneSidedChannel(ChannelKind k, QubitLabel loc, double strength)
    : kind(k), location(loc), p(strength) {
  check_strength(p, "OneSidedChannel");
}

char to_char(ConfigLayout layout) {
  switch (layout) {
    case ConfigLayout::A: return 'a';
    case ConfigLayout::B: return 'b';
    case ConfigLayout::C: return 'c';
    case ConfigLayout::D: return 'd';
  }
  return '?';
}

std::optional<ConfigLayout> config_layout_from(char c) {
  switch (c) {
    case 'a': return ConfigLayout::A;
    case 'b': return ConfigLayout::B;
    case 'c': return ConfigLayout::C;
    case 'd': return ConfigLayout::D;
    default: return std::nullopt;
  }
}

ChannelConfig::ChannelConfig(ConfigLayout l, std::vector<ChannelKind> s,
                             double strength, QubitLabel orient)
    : layout(l), slots(std::move(s)), p(strength), orientation(orient) {
  check_strength(p, "ChannelConfig");
  const std::size_t want =
      (layout == ConfigLayout::A || layout == ConfigLayout::B) ? 2 : 3;
  if (slots.size() != want) {
    throw BadLayout("ChannelConfig: layout " + std::string(1, to_char(layout)) +
                    " takes " + std::to_string(want) + " slots, got " +
                    std::to_string(slots.size()));
  }
}

std::vector<OneSidedChannel> ChannelConfig::expanded(double q) const {
  const QubitLabel near = orientation;  // side carrying the slot sequence
  const QubitLabel far = other(orientation);
  std::vector<OneSidedChannel> out;
  switch (layout) {
    case ConfigLayout::A:
      out = {{slots[0], near, q}, {slots[1], far, q}};
      break;
    case ConfigLayout::B:
      out = {{slots[0], near, q}, {slots[1], near, q}};
      break;
    case ConfigLayout::C:
      out = {{slots[0], near, q}, {slots[1], near, q}, {slots[2], far, q}};
      break;
    case ConfigLayout::D:
      out = {{slots[0], near, q}, {slots[1], near, q}, {slots[2], near, q}};
      break;
  }
  return out;
}

KrausSet kraus_ops(ChannelKind kind, double p) {
  check_strength(p, "kraus_ops");
  const double q = 1.0 - p;
  KrausSet set;
  switch (kind) {
    case ChannelKind::Dephasing:
      set.ops = {std::sqrt(q) * pauli(0), std::sqrt(p) * pauli(3)};
      break;
    case ChannelKind::BitFlip:
      set.ops = {std::sqrt(q) * pauli(0), std::sqrt(p) * pauli(1)};
      break;
    case ChannelKind::BitPhaseFlip:
      set.ops = {std::sqrt(q) * pauli(0), std::sqrt(p) * pauli(2)};
      break;
    case ChannelKind::AmplitudeDamping: {
      Matrix2 k0, k1;
      k0 << 1, 0, 0, std::sqrt(q);
      k1 << 0, std::sqrt(p), 0, 0;
      set.ops = {k0, k1};
      break;
    }
    case ChannelKind::Depolarizing: {
      const double s = 0.5 * std::sqrt(p);
      set.ops = {std::sqrt(1.0 - 0.75 * p) * pauli(0), s * pauli(1),
                 s * pauli(2), s * pauli(3)};
      break;
    }
  }
  return set;
}

KrausSet lift_one_sided(const KrausSet& k, QubitLabel location) {
  if (k.dim() != 2) {
    throw DimensionMismatch("lift_one_sided: need a single-qubit Kraus set");
  }
  KrausSet lifted;
  lifted.ops.reserve(k.ops.size());
  for (const auto& op : k.ops) {
    const Matrix2 k2 = op;
    const Matrix4 big = location == QubitLabel::U ? kron(k2, pauli(0))
                                                  : kron(pauli(0), k2);
    lifted.ops.emplace_back(big);
  }
  return lifted;
}

DensityMatrix apply_kraus(const DensityMatrix& m, const KrausSet& k) {
  if (k.ops.empty() || k.dim() != 4) {
    throw DimensionMismatch("apply_kraus: need a lifted 4x4 Kraus set");
  }
  Matrix4 out = Matrix4::Zero();
  for (const auto& op : k.ops) {
    out.noalias() += op * m.matrix() * op.adjoint();
  }
  return DensityMatrix(out);
}

XState evolve_closed_form(const XState& x, ChannelKind kind, QubitLabel loc,
                          double p) {
  check_strength(p, "evolve_closed_form");
  const double q = 1.0 - p;
  const bool on_u = loc == QubitLabel::U;
  XState out = x;
  switch (kind) {
    case ChannelKind::Depolarizing: {
      const double h = 0.5 * p;
      if (on_u) {
        out.rho11 = x.rho11 + h * x.r(3, 1);
        out.rho22 = x.rho22 + h * x.r(4, 2);
        out.rho33 = x.rho33 + h * x.r(1, 3);
        out.rho44 = x.rho44 + h * x.r(2, 4);
      } else {
        out.rho11 = x.rho11 + h * x.r(2, 1);
        out.rho22 = x.rho22 + h * x.r(1, 2);
        out.rho33 = x.rho33 + h * x.r(4, 3);
        out.rho44 = x.rho44 + h * x.r(3, 4);
      }
      out.rho14 = q * x.rho14;
      out.rho23 = q * x.rho23;
      break;
    }
    case ChannelKind::AmplitudeDamping: {
      const double sq = std::sqrt(q);
      if (on_u) {
        out.rho11 = x.rho11 + p * x.rho33;
        out.rho22 = x.rho22 + p * x.rho44;
        out.rho33 = q * x.rho33;
        out.rho44 = q * x.rho44;
      } else {
        out.rho11 = x.rho11 + p * x.rho22;
        out.rho22 = q * x.rho22;
        out.rho33 = x.rho33 + p * x.rho44;
        out.rho44 = q * x.rho44;
      }
      out.rho14 = sq * x.rho14;
      out.rho23 = sq * x.rho23;
      break;
    }
    case ChannelKind::BitFlip:
    case ChannelKind::BitPhaseFlip: {
      const double sign = kind == ChannelKind::BitFlip ? 1.0 : -1.0;
      if (on_u) {
        out.rho11 = q * x.rho11 + p * x.rho33;
        out.rho22 = q * x.rho22 + p * x.rho44;
        out.rho33 = q * x.rho33 + p * x.rho11;
        out.rho44 = q * x.rho44 + p * x.rho22;
        out.rho14 = q * x.rho14 + sign * p * std::conj(x.rho23);
        out.rho23 = q * x.rho23 + sign * p * std::conj(x.rho14);
      } else {
        out.rho11 = q * x.rho11 + p * x.rho22;
        out.rho22 = q * x.rho22 + p * x.rho11;
        out.rho33 = q * x.rho33 + p * x.rho44;
        out.rho44 = q * x.rho44 + p * x.rho33;
        out.rho14 = q * x.rho14 + sign * p * x.rho23;
        out.rho23 = q * x.rho23 + sign * p * x.rho14;
      }
      break;
    }
    case ChannelKind::Dephasing: {
      // Phi_p^U(X) = Phi_p^L(X) for every X state.
      const double f = 1.0 - 2.0 * p;
      out.rho14 = f * x.rho14;
      out.rho23 = f * x.rho23;
      break;
    }
  }
  out.validate();
  return out;
}

XState evolve_closed_form(const XState& x, const OneSidedChannel& ch) {
  return evolve_closed_form(x, ch.kind, ch.location, ch.p);
}

XState apply_config(const XState& x, const ChannelConfig& cfg, double p) {
  check_strength(p, "apply_config");
  XState state = x;
  for (const auto& ch : cfg.expanded(p)) {
    state = evolve_closed_form(state, ch);
  }
  return state;
}

XState apply_config(const XState& x, const ChannelConfig& cfg) {
  return apply_config(x, cfg, cfg.p);
}

}  // namespace xsdyn
