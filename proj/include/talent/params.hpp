#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "talent/matrix.hpp"
#include "talent/rng.hpp"

namespace talent {

struct Param {
    std::string name;
    Matrix value;
    Matrix grad;
};

/// Named (value, gradient) pairs with stable insertion order. The single
/// training-state carrier for every learnable weight in the project.
class ParamSet {
public:
    Param& add(const std::string& name, std::size_t rows, std::size_t cols);
    /// Adds the parameter and fills it with normal(0, stddev) draws from an
    /// RNG keyed on (seed, name), so init is independent of insertion order.
    Param& add_random(const std::string& name, std::size_t rows, std::size_t cols,
                      std::uint64_t seed, double stddev);

    Param& at(const std::string& name);
    const Param& at(const std::string& name) const;
    bool has(const std::string& name) const { return index_.count(name) > 0; }

    std::size_t size() const { return entries_.size(); }
    Param& entry(std::size_t i) { return entries_[i]; }
    const Param& entry(std::size_t i) const { return entries_[i]; }

    std::vector<Param>::iterator begin() { return entries_.begin(); }
    std::vector<Param>::iterator end() { return entries_.end(); }
    std::vector<Param>::const_iterator begin() const { return entries_.begin(); }
    std::vector<Param>::const_iterator end() const { return entries_.end(); }

    void zero_grads();
    std::size_t total_values() const;

private:
    std::vector<Param> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// AdamW state: first/second moments per parameter plus the step counter.
struct AdamWState {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 0.01;
    std::uint64_t step = 0;
    std::vector<Matrix> m;
    std::vector<Matrix> v;

    static AdamWState for_params(const ParamSet& params, double beta1 = 0.9, double beta2 = 0.999,
                                 double eps = 1e-8, double weight_decay = 0.01);
};

/// One decoupled-weight-decay Adam step over every entry; increments the
/// step counter by exactly one. Throws TrainingError naming the parameter
/// if any gradient entry is non-finite.
void adamw_step(ParamSet& params, AdamWState& state, double lr);

/// Exponential schedule: lr0 * gamma^epoch.
double exp_lr(double lr0, double gamma, std::uint64_t epoch);

}  // namespace talent
