#pragma once

#include <functional>
#include <vector>

namespace xsdyn {

struct NelderMeadOptions {
  int max_iterations = 400;
  double ftol = 1e-9;       // stop when the simplex f-spread drops below this
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fmin;
  int iterations;
};

/// Plain Nelder-Mead downhill simplex for small unconstrained problems.
/// Deterministic given the starting point.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, const NelderMeadOptions& options = {});

}  // namespace xsdyn
