#include "talent/params.hpp"

#include <cmath>

#include "talent/errors.hpp"

namespace talent {

Param& ParamSet::add(const std::string& name, std::size_t rows, std::size_t cols) {
    if (index_.count(name) > 0) throw ConfigError("duplicate parameter name: " + name);
    index_[name] = entries_.size();
    entries_.push_back(Param{name, Matrix(rows, cols), Matrix(rows, cols)});
    return entries_.back();
}

Param& ParamSet::add_random(const std::string& name, std::size_t rows, std::size_t cols,
                            std::uint64_t seed, double stddev) {
    Param& p = add(name, rows, cols);
    Rng rng = Rng(seed).fork(name);
    for (double& v : p.value.data) v = rng.normal(0.0, stddev);
    return p;
}

Param& ParamSet::at(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) throw ConfigError("unknown parameter: " + name);
    return entries_[it->second];
}

const Param& ParamSet::at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ConfigError("unknown parameter: " + name);
    return entries_[it->second];
}

void ParamSet::zero_grads() {
    for (Param& p : entries_) p.grad.fill(0.0);
}

std::size_t ParamSet::total_values() const {
    std::size_t n = 0;
    for (const Param& p : entries_) n += p.value.size();
    return n;
}

AdamWState AdamWState::for_params(const ParamSet& params, double beta1, double beta2, double eps,
                                  double weight_decay) {
    AdamWState s;
    s.beta1 = beta1;
    s.beta2 = beta2;
    s.eps = eps;
    s.weight_decay = weight_decay;
    s.m.reserve(params.size());
    s.v.reserve(params.size());
    for (const Param& p : params) {
        s.m.emplace_back(p.value.rows, p.value.cols);
        s.v.emplace_back(p.value.rows, p.value.cols);
    }
    return s;
}

void adamw_step(ParamSet& params, AdamWState& state, double lr) {
    if (state.m.size() != params.size())
        throw TrainingError("optimizer state does not match parameter set");
    state.step += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
    for (std::size_t p = 0; p < params.size(); ++p) {
        Param& param = params.entry(p);
        Matrix& m = state.m[p];
        Matrix& v = state.v[p];
        for (std::size_t i = 0; i < param.value.data.size(); ++i) {
            const double g = param.grad.data[i];
            if (!std::isfinite(g))
                throw TrainingError("non-finite gradient in parameter '" + param.name + "'");
            double& theta = param.value.data[i];
            // Decoupled decay first, then the bias-corrected Adam update.
            theta -= lr * state.weight_decay * theta;
            m.data[i] = state.beta1 * m.data[i] + (1.0 - state.beta1) * g;
            v.data[i] = state.beta2 * v.data[i] + (1.0 - state.beta2) * g * g;
            const double m_hat = m.data[i] / bc1;
            const double v_hat = v.data[i] / bc2;
            theta -= lr * m_hat / (std::sqrt(v_hat) + state.eps);
        }
    }
}

double exp_lr(double lr0, double gamma, std::uint64_t epoch) {
    return lr0 * std::pow(gamma, static_cast<double>(epoch));
}

}  // namespace talent
