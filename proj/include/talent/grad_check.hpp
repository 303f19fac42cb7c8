#pragma once

#include <functional>
#include <string>

#include "talent/params.hpp"

namespace talent {

struct GradCheckReport {
    bool passed = false;
    double max_rel_err = 0.0;
    std::string worst_entry;  // "name[i]" of the worst element
};

/// Central-difference check of the analytic gradients stored in params.grad.
/// `loss` must be a pure, deterministic function of the current parameter
/// values (it is called repeatedly with perturbed entries). Relative error
/// uses max(1, |analytic|, |numeric|) as the denominator; non-finite values
/// fail the check and name the offending entry.
GradCheckReport grad_check(ParamSet& params, const std::function<double()>& loss, double tol,
                           double h = 1e-5);

}  // namespace talent
