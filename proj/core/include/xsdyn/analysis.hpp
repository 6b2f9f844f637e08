#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xsdyn/channels.hpp"
#include "xsdyn/correlations.hpp"
#include "xsdyn/qmat.hpp"

namespace xsdyn {

enum class Measure { Concurrence, Bell, Discord };

std::string_view to_string(Measure m);
std::optional<Measure> measure_from(std::string_view name);

/// Inclusive uniform grid of channel strengths in [0, 1].
struct SweepGrid {
  double start = 0.0;
  double step = 0.005;
  int points = 201;

  static SweepGrid with_step(double start, double stop, double step);
  static SweepGrid with_points(double start, double stop, int points);

  // Clamped so accumulated rounding can never push a strength above 1.
  double at(int i) const { return std::min(start + step * i, 1.0); }
  double stop() const { return at(points - 1); }
};

enum class Verdict { Symmetric, Asymmetric };

/// Outcome of a U-versus-L decay comparison. The verdict is fixed by the
/// numeric sweep (Symmetric iff numeric_evidence < tol::sym); the analytic
/// predicate rides along and must agree wherever one is known.
struct SymmetryVerdict {
  Verdict verdict;
  std::string analytic_basis;              // predicate name, or "numeric"
  std::optional<bool> analytic_symmetric;  // empty when basis is numeric-only
  double numeric_evidence;                 // max_p |measure_U - measure_L|

  bool symmetric() const { return verdict == Verdict::Symmetric; }
};

/// Swap symmetry of the state itself: rho22 = rho33 and rho23 real.
bool is_swap_symmetric(const XState& x);

/// Whether the evolved density matrices coincide for noise on U and on L,
/// for every p. Analytic characterisation per channel kind:
///   Depolarizing:  rho11 = rho44 and rho22 = rho33
///   AmplitudeDamping: only the invariant state |00><00|
///   BitFlip / BitPhaseFlip: rho11 = rho44, rho22 = rho33, both coherences real
///   Dephasing: every X state
bool dynamics_symmetric(const XState& x, ChannelKind kind);

SymmetryVerdict decay_symmetry(const XState& x, ChannelKind kind, Measure m,
                               const SweepGrid& grid = {});

/// For configs, the comparison is the drawn orientation versus its mirror.
SymmetryVerdict decay_symmetry(const XState& x, const ChannelConfig& cfg,
                               Measure m, const SweepGrid& grid = {});

struct PInterval {
  double lo;
  double hi;
  double length() const { return hi - lo; }
};

struct ZeroSet {
  std::vector<PInterval> intervals;  // maximal closed intervals with C = 0
  bool sudden_death = false;  // a positive-length interval opens at p* < 1
                              // while C(0) > 0
  std::optional<double> onset;  // p* of the first such interval
};

/// Intervals of p where the evolved concurrence vanishes (within tol::zero),
/// boundaries refined by bisection to 1e-8. An isolated touch at a single
/// point is reported as a zero-length interval, not sudden death.
ZeroSet zero_set(const XState& x, ChannelKind kind, QubitLabel location,
                 int scan_points = 2001);

struct SegmentTrajectory {
  std::vector<double> p;
  std::vector<DiscordSegment> segments;
  std::vector<double> crossings;  // bisection-refined boundary locations
  /// Bit-flip persistence window for segment A: the evolved state leaves
  /// |gamma3| >= |gamma1| exactly for p in (first, second). Present only
  /// when the channel is bit flip, the state starts inside A and the
  /// window is nontrivial.
  std::optional<std::pair<double, double>> bitflip_exit_window;
};

SegmentTrajectory segment_trajectory(const XState& x,
                                     const OneSidedChannel& ch,
                                     const SweepGrid& grid = {});

struct TimeInvarianceReport {
  bool invariant;
  double initial_value;
  double max_deviation;   // max_p |D(p) - D(0)| over the grid
  int flagged_points;     // grid points evaluated by continuity (see below)
};

/// Whether the discord trace stays constant (within tol::invariant) over a
/// dense p-grid. Grid points where the evolved coordinates hit the
/// degenerate manifold gamma1 = gamma3 = x = 0 (gamma2 != 0), where the
/// segment closed form is discontinuous, are evaluated by continuity from
/// neighbouring p and flagged.
TimeInvarianceReport time_invariance_report(const XState& x,
                                            const OneSidedChannel& ch,
                                            int points = 401);
bool time_invariant_discord(const XState& x, const OneSidedChannel& ch);

enum class SubsystemClass { Classical, Quantum };

/// A subsystem is classical when its entropy is strictly smaller than the
/// total entropy, quantum otherwise (equal entropies map to Quantum).
struct SubsystemReport {
  SubsystemClass u;
  SubsystemClass l;
  double entropy_total;
  double entropy_u;
  double entropy_l;
};

SubsystemReport classify_subsystems(const DensityMatrix& m);

/// p-traces of the requested measures for noise on U and on L (for configs:
/// drawn orientation and its mirror).
struct MeasureSelection {
  bool concurrence = true;
  bool bell = true;
  bool discord = true;
};

struct SweepResult {
  std::vector<double> p;
  std::vector<double> c_u, c_l;
  std::vector<double> f_u, f_l;
  std::vector<double> d_u, d_l;
};

SweepResult sweep_measures(const XState& x, ChannelKind kind,
                           const MeasureSelection& sel,
                           const SweepGrid& grid = {});
SweepResult sweep_measures(const XState& x, const ChannelConfig& cfg,
                           const MeasureSelection& sel,
                           const SweepGrid& grid = {});

/// Aggregate report for one state under one channel; see json_io for the
/// serialised form.
struct SymmetryReport {
  bool swap_symmetric;
  bool dynamics_sym;
  SymmetryVerdict concurrence;
  SymmetryVerdict bell;
  std::optional<SymmetryVerdict> discord;  // absent for complex coherences
  ZeroSet zeros;                           // at the channel's location
  std::optional<bool> time_invariant;      // absent for complex coherences
  std::optional<SegmentTrajectory> segments;
};

SymmetryReport classify_state_channel(const XState& x,
                                      const OneSidedChannel& ch);

}  // namespace xsdyn
