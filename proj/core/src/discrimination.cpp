#include "xsdyn/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xsdyn/correlations.hpp"

namespace xsdyn {

std::array<XState, 4> discrimination_probes() {
  return {max_coherence_state(0.4, 0.0, 0.2, 0.4),
          max_coherence_state(0.4, 0.2, 0.0, 0.4),
          max_coherence_state(0.2, 0.65, 0.15, 0.0),
          max_coherence_state(0.2, 0.15, 0.65, 0.0)};
}

namespace {

struct Hypothesis {
  HypothesisClass klass;
  std::string kind;
  QubitLabel location;
  std::function<XState(const XState&, double)> act;
};

std::string combo_name(const ChannelConfig& cfg) {
  std::string s = "layout_";
  s += to_char(cfg.layout);
  s += '(';
  for (std::size_t i = 0; i < cfg.slots.size(); ++i) {
    if (i) s += ',';
    s += to_string(cfg.slots[i]);
  }
  s += ')';
  return s;
}

std::vector<Hypothesis> hypothesis_set() {
  std::vector<Hypothesis> hs;

  for (ChannelKind kind : {ChannelKind::Depolarizing,
                           ChannelKind::AmplitudeDamping,
                           ChannelKind::BitFlip}) {
    for (QubitLabel loc : {QubitLabel::U, QubitLabel::L}) {
      hs.push_back(Hypothesis{HypothesisClass::Single,
                              std::string(to_string(kind)), loc,
                              [kind, loc](const XState& x, double p) {
                                return evolve_closed_form(x, kind, loc, p);
                              }});
    }
  }

  // Mixed amplitude-damping/depolarizing combinations. Slot tuples with a
  // single kind reduce to that one-sided channel at another strength and are
  // covered by the single hypotheses above.
  const ChannelKind ad = ChannelKind::AmplitudeDamping;
  const ChannelKind dep = ChannelKind::Depolarizing;
  const auto add_combo = [&](ConfigLayout layout,
                             std::vector<ChannelKind> slots,
                             QubitLabel orient) {
    ChannelConfig cfg(layout, std::move(slots), 0.0, orient);
    hs.push_back(Hypothesis{
        (layout == ConfigLayout::A || layout == ConfigLayout::C)
            ? HypothesisClass::ComboAC
            : HypothesisClass::ComboBD,
        combo_name(cfg), orient,
        [cfg](const XState& x, double p) { return apply_config(x, cfg, p); }});
  };

  for (auto pair : {std::pair{ad, dep}, std::pair{dep, ad}}) {
    // Layout A's mirror equals itself with the slots exchanged, so one
    // orientation already covers both.
    add_combo(ConfigLayout::A, {pair.first, pair.second}, QubitLabel::U);
    for (QubitLabel orient : {QubitLabel::U, QubitLabel::L}) {
      add_combo(ConfigLayout::B, {pair.first, pair.second}, orient);
    }
  }
  for (ChannelKind a : {ad, dep}) {
    for (ChannelKind b : {ad, dep}) {
      for (ChannelKind c : {ad, dep}) {
        if (a == b && b == c) continue;
        for (QubitLabel orient : {QubitLabel::U, QubitLabel::L}) {
          add_combo(ConfigLayout::C, {a, b, c}, orient);
          add_combo(ConfigLayout::D, {a, b, c}, orient);
        }
      }
    }
  }
  return hs;
}

}  // namespace

DiscriminationResult discriminate_channel(const ChannelOracle& blackbox) {
  const std::array<XState, 4> probes = discrimination_probes();
  std::array<Matrix4, 4> observed;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    observed[i] = blackbox(probes[i].to_density()).matrix();
  }

  const auto residual_at = [&](const Hypothesis& h, double p) {
    double r = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const Matrix4 predicted = h.act(probes[i], p).to_matrix();
      r = std::max(r, (predicted - observed[i]).cwiseAbs().maxCoeff());
    }
    return r;
  };

  DiscriminationResult result;
  result.status = DiscriminationStatus::NoFit;

  for (const Hypothesis& h : hypothesis_set()) {
    // Coarse scan, then golden-section refinement around the best cell.
    const int cells = 1000;
    double best_p = 0.0;
    double best_r = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= cells; ++i) {
      const double p = static_cast<double>(i) / cells;
      const double r = residual_at(h, p);
      if (r < best_r) {
        best_r = r;
        best_p = p;
      }
    }
    double lo = std::max(0.0, best_p - 2.0 / cells);
    double hi = std::min(1.0, best_p + 2.0 / cells);
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = residual_at(h, x1);
    double f2 = residual_at(h, x2);
    for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = residual_at(h, x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = residual_at(h, x2);
      }
    }
    const double p_hat = 0.5 * (lo + hi);
    const double r_hat = residual_at(h, p_hat);
    if (std::min(r_hat, best_r) < tol::fit) {
      const bool coarse_wins = best_r < r_hat;
      result.matches.push_back(DiscriminationCandidate{
          h.klass, h.kind, h.location, coarse_wins ? best_p : p_hat,
          std::min(r_hat, best_r)});
    }
  }

  if (result.matches.empty()) return result;

  std::sort(result.matches.begin(), result.matches.end(),
            [](const auto& a, const auto& b) { return a.residual < b.residual; });
  result.best = result.matches.front();

  const bool same_class = std::all_of(
      result.matches.begin(), result.matches.end(), [&](const auto& c) {
        return c.klass == result.best.klass &&
               (c.klass != HypothesisClass::Single ||
                (c.kind == result.best.kind &&
                 c.location == result.best.location));
      });
  result.status = same_class ? DiscriminationStatus::Identified
                             : DiscriminationStatus::Ambiguous;
  return result;
}

SignatureReading read_concurrence_signature(const ChannelOracle& blackbox) {
  const auto probes = discrimination_probes();
  std::array<double, 4> c{};
  for (std::size_t i = 0; i < probes.size(); ++i) {
    c[i] = concurrence_oracle(blackbox(probes[i].to_density()));
  }

  SignatureReading reading{};
  if (std::abs(c[0] - c[1]) <= 1e-9) {
    // Equal concurrence on the rho11 = rho44 pair identifies depolarizing;
    // its location shows on the rho44 = 0 pair.
    reading.kind = ChannelKind::Depolarizing;
    reading.location_known = std::abs(c[2] - c[3]) > 1e-9;
    reading.location = c[2] < c[3] ? QubitLabel::U : QubitLabel::L;
  } else {
    reading.kind = ChannelKind::AmplitudeDamping;
    reading.location_known = true;
    reading.location = c[0] < c[1] ? QubitLabel::U : QubitLabel::L;
  }
  return reading;
}

}  // namespace xsdyn
