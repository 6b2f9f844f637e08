// Batch front end: evolve X states under one-sided channels, sweep the
// correlation measures over the channel strength for both noise locations,
// classify symmetry behaviour, and run the channel-discrimination protocol.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "xsdyn/analysis.hpp"
#include "xsdyn/channels.hpp"
#include "xsdyn/discrimination.hpp"
#include "xsdyn/json_io.hpp"
#include "xsdyn/qmat.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string state;
  std::string channel;
  std::string config;
  std::string measures = "C,F,D";
  std::string grid = "0:1:0.005";
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 42;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --state/--channel/--config take inline JSON or a path to a JSON file.
std::string inline_or_file(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  return slurp(arg);
}

xsdyn::SweepGrid parse_grid(const std::string& spec) {
  double a = 0.0, b = 1.0, step = 0.005;
  char c1 = 0, c2 = 0;
  std::istringstream ss(spec);
  if (!(ss >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':') {
    throw std::invalid_argument("grid must be start:stop:step, got " + spec);
  }
  if (a < 0.0 || b > 1.0) {
    throw std::invalid_argument("grid must lie inside [0, 1]");
  }
  return xsdyn::SweepGrid::with_step(a, b, step);
}

xsdyn::MeasureSelection parse_measures(const std::string& spec) {
  xsdyn::MeasureSelection sel{false, false, false};
  std::istringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "C") {
      sel.concurrence = true;
    } else if (item == "F") {
      sel.bell = true;
    } else if (item == "D") {
      sel.discord = true;
    } else {
      throw std::invalid_argument("unknown measure \"" + item +
                                  "\" (expected C, F or D)");
    }
  }
  if (!sel.concurrence && !sel.bell && !sel.discord) {
    throw std::invalid_argument("at least one measure is required");
  }
  return sel;
}

// 12 significant digits, C-locale decimal point, no trailing noise.
std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string sweep_to_csv(const xsdyn::SweepResult& r) {
  std::string head = "p";
  if (!r.c_u.empty()) head += ",C_U,C_L";
  if (!r.f_u.empty()) head += ",F_U,F_L";
  if (!r.d_u.empty()) head += ",D_U,D_L";
  std::string out = head + "\n";
  for (std::size_t i = 0; i < r.p.size(); ++i) {
    out += fmt12(r.p[i]);
    if (!r.c_u.empty()) {
      out += ',' + fmt12(r.c_u[i]) + ',' + fmt12(r.c_l[i]);
    }
    if (!r.f_u.empty()) {
      out += ',' + fmt12(r.f_u[i]) + ',' + fmt12(r.f_l[i]);
    }
    if (!r.d_u.empty()) {
      out += ',' + fmt12(r.d_u[i]) + ',' + fmt12(r.d_l[i]);
    }
    out += '\n';
  }
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  out << text;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << text;
}

xsdyn::SweepResult run_sweep(const CommonOpts& opt) {
  const xsdyn::XState state =
      xsdyn::parse_state_json(inline_or_file(opt.state));
  const xsdyn::MeasureSelection sel = parse_measures(opt.measures);
  const xsdyn::SweepGrid grid = parse_grid(opt.grid);
  if (!opt.channel.empty()) {
    const auto ch = xsdyn::parse_channel_json(inline_or_file(opt.channel));
    return xsdyn::sweep_measures(state, ch.kind, sel, grid);
  }
  if (!opt.config.empty()) {
    const auto cfg = xsdyn::parse_config_json(inline_or_file(opt.config));
    return xsdyn::sweep_measures(state, cfg, sel, grid);
  }
  throw std::invalid_argument("sweep needs --channel or --config");
}

int cmd_sweep(const CommonOpts& opt) {
  const xsdyn::SweepResult r = run_sweep(opt);
  write_output(opt.format == "json" ? xsdyn::sweep_result_to_json(r) + "\n"
                                    : sweep_to_csv(r),
               opt.out);
  return 0;
}

int cmd_evolve(const CommonOpts& opt) {
  const xsdyn::XState state =
      xsdyn::parse_state_json(inline_or_file(opt.state));
  xsdyn::XState evolved;
  if (!opt.channel.empty()) {
    evolved = evolve_closed_form(
        state, xsdyn::parse_channel_json(inline_or_file(opt.channel)));
  } else if (!opt.config.empty()) {
    evolved = apply_config(
        state, xsdyn::parse_config_json(inline_or_file(opt.config)));
  } else {
    throw std::invalid_argument("evolve needs --channel or --config");
  }
  write_output(xsdyn::state_to_json(evolved) + "\n", opt.out);
  return 0;
}

int cmd_classify(const CommonOpts& opt) {
  const xsdyn::XState state =
      xsdyn::parse_state_json(inline_or_file(opt.state));
  if (opt.channel.empty()) {
    throw std::invalid_argument("classify needs --channel");
  }
  const auto ch = xsdyn::parse_channel_json(inline_or_file(opt.channel));
  const xsdyn::SymmetryReport rep = classify_state_channel(state, ch);
  write_output(xsdyn::symmetry_report_to_json(rep) + "\n", opt.out);
  return 0;
}

// The hidden description names a single channel or a config; it is used
// only to build the black box handed to the inference routine.
int cmd_discriminate(const CommonOpts& opt) {
  if (opt.channel.empty() && opt.config.empty()) {
    throw std::invalid_argument("discriminate needs --hidden-channel or --hidden-config");
  }
  xsdyn::ChannelOracle box;
  if (!opt.channel.empty()) {
    const auto hidden = xsdyn::parse_channel_json(inline_or_file(opt.channel));
    box = [hidden](const xsdyn::DensityMatrix& probe) {
      return evolve_closed_form(xsdyn::from_dense(probe), hidden).to_density();
    };
  } else {
    const auto hidden = xsdyn::parse_config_json(inline_or_file(opt.config));
    box = [hidden](const xsdyn::DensityMatrix& probe) {
      return apply_config(xsdyn::from_dense(probe), hidden).to_density();
    };
  }
  const xsdyn::DiscriminationResult r = xsdyn::discriminate_channel(box);
  write_output(xsdyn::discrimination_result_to_json(r) + "\n", opt.out);
  return r.status == xsdyn::DiscriminationStatus::Identified ? 0 : 2;
}

int cmd_figure(int id, const std::string& out_dir) {
  using xsdyn::ChannelKind;
  const xsdyn::SweepGrid grid = xsdyn::SweepGrid::with_step(0.0, 1.0, 0.002);
  const fs::path dir(out_dir.empty() ? std::string("figure") + std::to_string(id)
                                     : out_dir);
  fs::create_directories(dir);

  const auto sweep_csv = [&](const xsdyn::XState& x, ChannelKind kind,
                             xsdyn::MeasureSelection sel) {
    return sweep_to_csv(xsdyn::sweep_measures(x, kind, sel, grid));
  };
  const xsdyn::MeasureSelection conc_only{true, false, false};

  switch (id) {
    case 3: {
      const auto x = xsdyn::max_coherence_state(0.35, 0.4, 0.05, 0.2);
      write_file(dir / "fig3_amplitude_damping.csv",
                 sweep_csv(x, ChannelKind::AmplitudeDamping, conc_only));
      break;
    }
    case 4:
    case 5: {
      const auto state_a = id == 4
                               ? xsdyn::max_coherence_state(0.4, 0.0, 0.2, 0.4)
                               : xsdyn::max_coherence_state(0.2, 0.65, 0.15, 0.0);
      const auto state_b = id == 4
                               ? xsdyn::max_coherence_state(0.4, 0.2, 0.0, 0.4)
                               : xsdyn::max_coherence_state(0.2, 0.15, 0.65, 0.0);
      const std::string tag = "fig" + std::to_string(id);
      write_file(dir / (tag + "_stateA_depolarizing.csv"),
                 sweep_csv(state_a, ChannelKind::Depolarizing, conc_only));
      write_file(dir / (tag + "_stateB_depolarizing.csv"),
                 sweep_csv(state_b, ChannelKind::Depolarizing, conc_only));
      write_file(dir / (tag + "_stateA_amplitude_damping.csv"),
                 sweep_csv(state_a, ChannelKind::AmplitudeDamping, conc_only));
      write_file(dir / (tag + "_stateB_amplitude_damping.csv"),
                 sweep_csv(state_b, ChannelKind::AmplitudeDamping, conc_only));
      break;
    }
    case 6: {
      const auto x = xsdyn::max_coherence_state(0.9, 0.0, 0.08, 0.02);
      write_file(dir / "fig6_amplitude_damping.csv",
                 sweep_csv(x, ChannelKind::AmplitudeDamping, conc_only));
      write_file(dir / "fig6_depolarizing.csv",
                 sweep_csv(x, ChannelKind::Depolarizing, conc_only));
      write_file(dir / "fig6_entropies.json",
                 xsdyn::subsystem_report_to_json(
                     xsdyn::classify_subsystems(x.to_density())) +
                     "\n");
      break;
    }
    case 7: {
      const auto x = xsdyn::max_coherence_state(0.0, 0.1875, 0.8125, 0.0);
      write_file(dir / "fig7_amplitude_damping.csv",
                 sweep_csv(x, ChannelKind::AmplitudeDamping,
                           xsdyn::MeasureSelection{true, true, false}));
      break;
    }
    default:
      throw std::invalid_argument("figure id must be 3..7");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit X-state dynamics under one-sided noisy channels"};
  app.require_subcommand(1);
  CommonOpts opt;

  const auto add_io = [&](CLI::App* sub, bool needs_state) {
    auto* s = sub->add_option("--state", opt.state,
                              "X state (inline JSON or file path)");
    if (needs_state) s->required();
    sub->add_option("--channel", opt.channel,
                    "one-sided channel (inline JSON or file path)");
    sub->add_option("--config", opt.config,
                    "channel combination (inline JSON or file path)");
    sub->add_option("--out", opt.out, "output path (default stdout)");
    sub->add_option("--seed", opt.seed, "seed for stochastic components");
  };

  auto* sweep = app.add_subcommand(
      "sweep", "p-sweep of the selected measures for both noise locations");
  add_io(sweep, true);
  sweep->add_option("--measures", opt.measures, "subset of C,F,D");
  sweep->add_option("--grid", opt.grid, "p grid start:stop:step");
  sweep->add_option("--format", opt.format)
      ->check(CLI::IsMember({"csv", "json"}));

  auto* evolve = app.add_subcommand("evolve", "apply a channel or config once");
  add_io(evolve, true);

  auto* classify = app.add_subcommand(
      "classify", "symmetry report for a state under a channel");
  add_io(classify, true);

  auto* discriminate = app.add_subcommand(
      "discriminate", "identify a hidden channel from the four-probe protocol");
  discriminate->add_option("--channel,--hidden-channel", opt.channel,
                           "hidden single channel (JSON), applied but never "
                           "read by the inference");
  discriminate->add_option("--config,--hidden-config", opt.config,
                           "hidden channel combination (JSON)");
  discriminate->add_option("--out", opt.out, "output path (default stdout)");
  discriminate->add_option("--seed", opt.seed, "seed for stochastic components");

  int figure_id = 0;
  auto* figure = app.add_subcommand(
      "figure", "emit the CSV data for one of the bundled figure ids");
  figure->add_option("id", figure_id, "figure id (3..7)")->required();
  figure->add_option("--out", opt.out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) return cmd_sweep(opt);
    if (evolve->parsed()) return cmd_evolve(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (discriminate->parsed()) return cmd_discriminate(opt);
    if (figure->parsed()) return cmd_figure(figure_id, opt.out);
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
