#include "talent/grad_check.hpp"

#include <cmath>

namespace talent {

GradCheckReport grad_check(ParamSet& params, const std::function<double()>& loss, double tol,
                           double h) {
    GradCheckReport report;
    report.passed = true;
    for (std::size_t p = 0; p < params.size(); ++p) {
        Param& param = params.entry(p);
        for (std::size_t i = 0; i < param.value.data.size(); ++i) {
            const double saved = param.value.data[i];
            param.value.data[i] = saved + h;
            const double f_plus = loss();
            param.value.data[i] = saved - h;
            const double f_minus = loss();
            param.value.data[i] = saved;

            const double numeric = (f_plus - f_minus) / (2.0 * h);
            const double analytic = param.grad.data[i];
            const std::string entry = param.name + "[" + std::to_string(i) + "]";
            if (!std::isfinite(numeric) || !std::isfinite(analytic)) {
                report.passed = false;
                report.max_rel_err = std::numeric_limits<double>::infinity();
                report.worst_entry = entry;
                return report;
            }
            const double denom = std::max({1.0, std::abs(analytic), std::abs(numeric)});
            const double rel = std::abs(analytic - numeric) / denom;
            if (rel > report.max_rel_err) {
                report.max_rel_err = rel;
                report.worst_entry = entry;
            }
        }
    }
    report.passed = report.max_rel_err < tol;
    return report;
}

}  // namespace talent
