#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "xsdyn/qmat.hpp"
#include "xsdyn/types.hpp"

namespace xsdyn {

enum class ChannelKind {
  Depolarizing,
  AmplitudeDamping,
  BitFlip,
  BitPhaseFlip,
  Dephasing,
};

std::string_view to_string(ChannelKind kind);
std::optional<ChannelKind> channel_kind_from(std::string_view name);

/// Pauli matrix sigma_i, i in {1,2,3}; pauli(0) is the identity.
const Matrix2& pauli(int i);

/// A Kraus decomposition: operators are 2x2 (single-qubit) or 4x4 (lifted).
struct KrausSet {
  std::vector<Eigen::MatrixXcd> ops;

  Eigen::Index dim() const { return ops.empty() ? 0 : ops.front().rows(); }

  /// Completeness defect || sum_i K_i^dag K_i - I ||_max.
  double completeness_defect() const;
  bool is_complete(double eps = tol::num) const {
    return completeness_defect() <= eps;
  }
};

/// A noise channel of strength p acting on exactly one of the two qubits.
struct OneSidedChannel {
  ChannelKind kind;
  QubitLabel location;
  double p;

  OneSidedChannel(ChannelKind k, QubitLabel loc, double strength);
};

/// The four geometric layouts for combining local channels:
///   A: first slot on U, second slot on L
///   B: both slots in sequence on U
///   C: first two slots in sequence on U, third slot on L
///   D: all three slots in sequence on U
/// All slots share the single strength parameter p. `orientation` L mirrors
/// the layout (exchanges the roles of U and L).
enum class ConfigLayout { A, B, C, D };

char to_char(ConfigLayout layout);
std::optional<ConfigLayout> config_layout_from(char c);

struct ChannelConfig {
  ConfigLayout layout;
  std::vector<ChannelKind> slots;  // 2 kinds for A/B, 3 for C/D
  double p;
  QubitLabel orientation = QubitLabel::U;

  ChannelConfig(ConfigLayout l, std::vector<ChannelKind> s, double strength,
                QubitLabel orient = QubitLabel::U);

  /// The per-slot one-sided channels in application order, at strength q.
  std::vector<OneSidedChannel> expanded(double q) const;
};

/// Single-qubit Kraus operators of the given channel kind at strength p.
KrausSet kraus_ops(ChannelKind kind, double p);

/// Tensors each operator with the identity on the untouched qubit:
/// K -> K (x) I for location U, K -> I (x) K for location L.
KrausSet lift_one_sided(const KrausSet& k, QubitLabel location);

/// Kraus application rho -> sum_i K_i rho K_i^dag; output is validated.
DensityMatrix apply_kraus(const DensityMatrix& m, const KrausSet& k);

/// Closed-form X-state evolution; agrees entrywise with the Kraus route.
XState evolve_closed_form(const XState& x, const OneSidedChannel& ch);
XState evolve_closed_form(const XState& x, ChannelKind kind, QubitLabel loc,
                          double p);

/// Applies a channel combination at its stored strength (or at `p`).
XState apply_config(const XState& x, const ChannelConfig& cfg);
XState apply_config(const XState& x, const ChannelConfig& cfg, double p);

}  // namespace xsdyn
