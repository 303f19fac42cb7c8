#include "talent/ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "talent/errors.hpp"

namespace talent {

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

Matrix activation(Activation kind, const Matrix& x) {
    Matrix out = x;
    switch (kind) {
        case Activation::Sigmoid:
            for (double& v : out.data) v = sigmoid(v);
            break;
        case Activation::Tanh:
            for (double& v : out.data) v = std::tanh(v);
            break;
        case Activation::Relu:
            for (double& v : out.data) v = v > 0.0 ? v : 0.0;
            break;
    }
    return out;
}

Matrix activation_grad_from_output(Activation kind, const Matrix& y) {
    Matrix out = y;
    switch (kind) {
        case Activation::Sigmoid:
            for (double& v : out.data) v = v * (1.0 - v);
            break;
        case Activation::Tanh:
            for (double& v : out.data) v = 1.0 - v * v;
            break;
        case Activation::Relu:
            for (double& v : out.data) v = v > 0.0 ? 1.0 : 0.0;
            break;
    }
    return out;
}

std::vector<double> softmax(std::span<const double> x) {
    if (x.empty()) throw DomainError("softmax: empty input");
    const double mx = *std::max_element(x.begin(), x.end());
    std::vector<double> out(x.size());
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = std::exp(x[i] - mx);
        total += out[i];
    }
    for (double& v : out) v /= total;
    return out;
}

std::vector<double> layer_norm(std::span<const double> x, std::span<const double> gamma,
                               std::span<const double> beta, double eps) {
    if (x.size() != gamma.size() || x.size() != beta.size())
        throw DimensionError("layer_norm: lengths " + std::to_string(x.size()) + "/" +
                             std::to_string(gamma.size()) + "/" + std::to_string(beta.size()));
    if (x.empty()) throw DomainError("layer_norm: empty input");
    const double n = static_cast<double>(x.size());
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    var /= n;  // population variance
    const double inv_std = 1.0 / std::sqrt(var + eps);
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = gamma[i] * (x[i] - mean) * inv_std + beta[i];
    return out;
}

BceResult bce_with_logits(std::span<const double> logits, std::span<const double> targets) {
    if (logits.size() != targets.size())
        throw DimensionError("bce_with_logits: " + std::to_string(logits.size()) + " logits vs " +
                             std::to_string(targets.size()) + " targets");
    if (logits.empty()) throw DomainError("bce_with_logits: empty input");
    const double n = static_cast<double>(logits.size());
    BceResult res;
    res.grad.resize(logits.size());
    for (std::size_t i = 0; i < logits.size(); ++i) {
        const double z = logits[i];
        const double y = targets[i];
        res.loss += std::max(z, 0.0) - z * y + std::log1p(std::exp(-std::abs(z)));
        res.grad[i] = (sigmoid(z) - y) / n;
    }
    res.loss /= n;
    return res;
}

}  // namespace talent
