#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qcevo {

struct NelderMeadOptions {
    double initial_step = 0.5;  // edge length of the starting simplex along each axis
    double tolerance = 1e-6;    // stop once the simplex's objective spread falls below this
    int max_evaluations = 1000;
};

struct NelderMeadResult {
    std::vector<double> x;  // best point ever evaluated
    double value = 0.0;
    int evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Unconstrained downhill simplex (reflection 1, expansion 2, contraction
/// 1/2, shrink 1/2). The returned point is the best one evaluated, so the
/// result is never worse than f(x0). Every evaluation, including f(x0),
/// counts against `max_evaluations`.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options);

}  // namespace qcevo
