#include "xsdyn/json_io.hpp"

#include <json.hpp>

namespace xsdyn {

using nlohmann::json;

namespace {

json parse_object(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw std::invalid_argument(std::string(what) + ": malformed JSON object");
  }
  return j;
}

Complex coherence_from(const json& j, const char* field) {
  if (!j.contains(field)) return Complex(0.0, 0.0);
  const json& c = j.at(field);
  if (c.is_number()) return Complex(c.get<double>(), 0.0);
  return Complex(c.value("re", 0.0), c.value("im", 0.0));
}

json verdict_to_json(const SymmetryVerdict& v) {
  json j;
  j["verdict"] = v.symmetric() ? "symmetric" : "asymmetric";
  j["analytic_basis"] = v.analytic_basis;
  if (v.analytic_symmetric.has_value()) {
    j["analytic_symmetric"] = *v.analytic_symmetric;
  }
  j["numeric_evidence"] = v.numeric_evidence;
  return j;
}

}  // namespace

XState parse_state_json(const std::string& text) {
  const json j = parse_object(text, "state");
  if (!j.contains("diag") || !j.at("diag").is_array() ||
      j.at("diag").size() != 4) {
    throw std::invalid_argument("state: \"diag\" must be a 4-element array");
  }
  std::array<double, 4> d{};
  for (int i = 0; i < 4; ++i) d[i] = j.at("diag").at(i).get<double>();

  if (j.value("coherences", "") == std::string("max")) {
    return max_coherence_state(d[0], d[1], d[2], d[3]);
  }
  return XState::make(d[0], d[1], d[2], d[3], coherence_from(j, "rho14"),
                      coherence_from(j, "rho23"));
}

std::string state_to_json(const XState& x) {
  json j;
  j["diag"] = {x.rho11, x.rho22, x.rho33, x.rho44};
  j["rho14"] = {{"re", x.rho14.real()}, {"im", x.rho14.imag()}};
  j["rho23"] = {{"re", x.rho23.real()}, {"im", x.rho23.imag()}};
  return j.dump();
}

OneSidedChannel parse_channel_json(const std::string& text) {
  const json j = parse_object(text, "channel");
  const auto kind = channel_kind_from(j.value("kind", ""));
  if (!kind) {
    throw std::invalid_argument("channel: unknown \"kind\"");
  }
  const std::string loc = j.value("location", "U");
  if (loc != "U" && loc != "L") {
    throw std::invalid_argument("channel: \"location\" must be U or L");
  }
  if (!j.contains("p") || !j.at("p").is_number()) {
    throw std::invalid_argument("channel: missing numeric \"p\"");
  }
  return OneSidedChannel(*kind, loc == "U" ? QubitLabel::U : QubitLabel::L,
                         j.at("p").get<double>());
}

std::string channel_to_json(const OneSidedChannel& ch) {
  json j;
  j["kind"] = std::string(to_string(ch.kind));
  j["location"] = std::string(1, to_char(ch.location));
  j["p"] = ch.p;
  return j.dump();
}

ChannelConfig parse_config_json(const std::string& text) {
  const json j = parse_object(text, "config");
  const std::string layout = j.value("layout", "");
  if (layout.size() != 1 || !config_layout_from(layout[0])) {
    throw std::invalid_argument("config: \"layout\" must be a, b, c or d");
  }
  if (!j.contains("slots") || !j.at("slots").is_array()) {
    throw std::invalid_argument("config: missing \"slots\" array");
  }
  std::vector<ChannelKind> slots;
  for (const auto& s : j.at("slots")) {
    const auto kind = channel_kind_from(s.get<std::string>());
    if (!kind) throw std::invalid_argument("config: unknown slot kind");
    slots.push_back(*kind);
  }
  if (!j.contains("p") || !j.at("p").is_number()) {
    throw std::invalid_argument("config: missing numeric \"p\"");
  }
  const std::string orient = j.value("orientation", "U");
  if (orient != "U" && orient != "L") {
    throw std::invalid_argument("config: \"orientation\" must be U or L");
  }
  return ChannelConfig(*config_layout_from(layout[0]), std::move(slots),
                       j.at("p").get<double>(),
                       orient == "U" ? QubitLabel::U : QubitLabel::L);
}

std::string config_to_json(const ChannelConfig& cfg) {
  json j;
  j["layout"] = std::string(1, to_char(cfg.layout));
  json slots = json::array();
  for (ChannelKind k : cfg.slots) slots.push_back(std::string(to_string(k)));
  j["slots"] = std::move(slots);
  j["p"] = cfg.p;
  j["orientation"] = std::string(1, to_char(cfg.orientation));
  return j.dump();
}

std::string symmetry_report_to_json(const SymmetryReport& report) {
  json j;
  j["swap_symmetric"] = report.swap_symmetric;
  j["dynamics_symmetric"] = report.dynamics_sym;
  json verdicts;
  verdicts["concurrence"] = verdict_to_json(report.concurrence);
  verdicts["bell"] = verdict_to_json(report.bell);
  verdicts["discord"] =
      report.discord ? verdict_to_json(*report.discord) : json(nullptr);
  j["verdicts"] = std::move(verdicts);
  json zeros = json::array();
  for (const auto& iv : report.zeros.intervals) {
    zeros.push_back({iv.lo, iv.hi});
  }
  j["zero_set"] = std::move(zeros);
  j["sudden_death"] = report.zeros.sudden_death;
  j["time_invariant_discord"] =
      report.time_invariant ? json(*report.time_invariant) : json(nullptr);
  if (report.segments) {
    json segs = json::array();
    for (std::size_t i = 0; i < report.segments->p.size(); ++i) {
      segs.push_back({{"p", report.segments->p[i]},
                      {"segment", std::string(1, to_char(
                                      report.segments->segments[i]))}});
    }
    j["segments"] = std::move(segs);
    j["segment_crossings"] = report.segments->crossings;
  } else {
    j["segments"] = json(nullptr);
  }
  return j.dump(2);
}

std::string discrimination_result_to_json(const DiscriminationResult& r) {
  const auto candidate = [](const DiscriminationCandidate& c) {
    json j;
    switch (c.klass) {
      case HypothesisClass::Single: j["class"] = "single"; break;
      case HypothesisClass::ComboAC: j["class"] = "config_ac"; break;
      case HypothesisClass::ComboBD: j["class"] = "config_bd"; break;
    }
    j["kind"] = c.kind;
    j["location"] = std::string(1, to_char(c.location));
    j["p_estimate"] = c.p;
    j["residual"] = c.residual;
    return j;
  };

  json j;
  switch (r.status) {
    case DiscriminationStatus::Identified: j["status"] = "identified"; break;
    case DiscriminationStatus::Ambiguous: j["status"] = "ambiguous"; break;
    case DiscriminationStatus::NoFit: j["status"] = "no_fit"; break;
  }
  if (r.status != DiscriminationStatus::NoFit) {
    j["result"] = candidate(r.best);
  }
  json all = json::array();
  for (const auto& c : r.matches) all.push_back(candidate(c));
  j["matches"] = std::move(all);
  return j.dump(2);
}

std::string subsystem_report_to_json(const SubsystemReport& r) {
  const auto cls = [](SubsystemClass c) {
    return c == SubsystemClass::Classical ? "classical" : "quantum";
  };
  json j;
  j["entropy_total"] = r.entropy_total;
  j["entropy_U"] = r.entropy_u;
  j["entropy_L"] = r.entropy_l;
  j["U"] = cls(r.u);
  j["L"] = cls(r.l);
  return j.dump(2);
}

std::string sweep_result_to_json(const SweepResult& r) {
  json j;
  j["p"] = r.p;
  if (!r.c_u.empty()) {
    j["C_U"] = r.c_u;
    j["C_L"] = r.c_l;
  }
  if (!r.f_u.empty()) {
    j["F_U"] = r.f_u;
    j["F_L"] = r.f_l;
  }
  if (!r.d_u.empty()) {
    j["D_U"] = r.d_u;
    j["D_L"] = r.d_l;
  }
  return j.dump();
}

}  // namespace xsdyn
