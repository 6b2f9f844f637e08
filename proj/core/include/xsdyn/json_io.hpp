#pragma once

#include <string>

#include "xsdyn/analysis.hpp"
#include "xsdyn/channels.hpp"
#include "xsdyn/discrimination.hpp"
#include "xsdyn/qmat.hpp"

namespace xsdyn {

/// State schema:
///   {"diag":[d1,d2,d3,d4],
///    "rho14":{"re":x,"im":y}, "rho23":{"re":x,"im":y}}
/// or {"diag":[d1,d2,d3,d4], "coherences":"max"}.
/// Missing coherence fields default to zero. Throws std::invalid_argument
/// on malformed input and the qmat validation errors on invalid values.
XState parse_state_json(const std::string& text);
std::string state_to_json(const XState& x);

/// Channel schema: {"kind":"depolarizing|amplitude_damping|bit_flip|
/// bit_phase_flip|dephasing","location":"U|L","p":0.3}.
OneSidedChannel parse_channel_json(const std::string& text);
std::string channel_to_json(const OneSidedChannel& ch);

/// Config schema: {"layout":"a|b|c|d","slots":["amplitude_damping",...],
/// "p":0.3} with an optional "orientation":"U|L" (default U).
ChannelConfig parse_config_json(const std::string& text);
std::string config_to_json(const ChannelConfig& cfg);

std::string symmetry_report_to_json(const SymmetryReport& report);
std::string discrimination_result_to_json(const DiscriminationResult& r);
std::string subsystem_report_to_json(const SubsystemReport& r);
std::string sweep_result_to_json(const SweepResult& r);

}  // namespace xsdyn
