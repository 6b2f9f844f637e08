#include "xsdyn/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

namespace xsdyn {

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  const double alpha = 1.0;   // reflection
  const double gamma = 2.0;   // expansion
  const double rho = 0.5;     // contraction
  const double sigma = 0.5;   // shrink

  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;

  std::vector<double> fvals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fvals[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fvals[a] < fvals[b]; });

    if (fvals[order[n]] - fvals[order[0]] < options.ftol) break;

    const auto& best = simplex[order[0]];
    const auto& worst = simplex[order[n]];

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[order[i]][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j)
        x[j] = centroid[j] + t * (centroid[j] - worst[j]);
      return x;
    };

    const std::vector<double> reflected = blend(alpha);
    const double f_ref = f(reflected);

    if (f_ref < fvals[order[0]]) {
      const std::vector<double> expanded = blend(gamma);
      const double f_exp = f(expanded);
      if (f_exp < f_ref) {
        simplex[order[n]] = expanded;
        fvals[order[n]] = f_exp;
      } else {
        simplex[order[n]] = reflected;
        fvals[order[n]] = f_ref;
      }
      continue;
    }
    if (f_ref < fvals[order[n - 1]]) {
      simplex[order[n]] = reflected;
      fvals[order[n]] = f_ref;
      continue;
    }

    const bool outside = f_ref < fvals[order[n]];
    const std::vector<double> contracted = blend(outside ? rho : -rho);
    const double f_con = f(contracted);
    if (f_con < std::min(f_ref, fvals[order[n]])) {
      simplex[order[n]] = contracted;
      fvals[order[n]] = f_con;
      continue;
    }

    for (std::size_t i = 1; i <= n; ++i) {
      auto& vertex = simplex[order[i]];
      for (std::size_t j = 0; j < n; ++j)
        vertex[j] = best[j] + sigma * (vertex[j] - best[j]);
      fvals[order[i]] = f(vertex);
    }
  }

  std::size_t ibest = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (fvals[i] < fvals[ibest]) ibest = i;
  return NelderMeadResult{simplex[ibest], fvals[ibest], iter};
}

}  // namespace xsdyn
