#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "xsdyn/channels.hpp"
#include "xsdyn/qmat.hpp"

namespace xsdyn {

/// A black box that applies one fixed unknown channel to any probe state and
/// returns the exact output (noiseless tomography).
using ChannelOracle = std::function<DensityMatrix(const DensityMatrix&)>;

/// The two probe pairs: states with rho11 = rho44 = 0.4 and rho22/rho33 in
/// {0, 0.2} exchanged, and states with rho44 = 0, diagonal
/// (0.2, 0.65, 0.15, 0) with rho22/rho33 exchanged; all with maximal
/// coherences.
std::array<XState, 4> discrimination_probes();

/// Hypothesis classes the protocol separates: the individual depolarizing,
/// amplitude-damping and bit-flip channels (with location and strength), and
/// the combination classes {layouts A, C} and {layouts B, D} built from
/// mixed amplitude-damping/depolarizing slots.
enum class HypothesisClass { Single, ComboAC, ComboBD };

struct DiscriminationCandidate {
  HypothesisClass klass;
  std::string kind;    // channel kind, or "layout_a(slots...)" for combos
  QubitLabel location; // combo: orientation of the layout
  double p;
  double residual;
};

enum class DiscriminationStatus { Identified, Ambiguous, NoFit };

struct DiscriminationResult {
  DiscriminationStatus status;
  DiscriminationCandidate best;  // meaningful for Identified/Ambiguous
  std::vector<DiscriminationCandidate> matches;  // every residual < tol::fit
};

/// Sends the four probes through the black box and fits every hypothesis in
/// the set over p in [0,1]. A hypothesis matches when its best residual
/// falls below tol::fit; a unique match identifies the channel (combos are
/// identified up to their class), several matches in distinct classes are
/// Ambiguous, none is NoFit.
DiscriminationResult discriminate_channel(const ChannelOracle& blackbox);

/// The concurrence-comparison protocol in its narrow form: assumes the box
/// is a single depolarizing or amplitude-damping channel and reads kind and
/// location off the probe-pair concurrence signature.
struct SignatureReading {
  ChannelKind kind;
  QubitLabel location;  // meaningful when the signature fixes one
  bool location_known;
};

SignatureReading read_concurrence_signature(const ChannelOracle& blackbox);

}  // namespace xsdyn
