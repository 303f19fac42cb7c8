#pragma once

#include <span>
#include <vector>

#include "talent/matrix.hpp"

namespace talent {

enum class Activation { Sigmoid, Tanh, Relu };

/// Numerically stable logistic function.
double sigmoid(double z);

Matrix activation(Activation kind, const Matrix& x);
/// Derivative expressed through the activation output y (not the input).
Matrix activation_grad_from_output(Activation kind, const Matrix& y);

/// Shift-stable softmax; throws DomainError on empty input.
std::vector<double> softmax(std::span<const double> x);

/// gamma * (x - mean) / sqrt(pop_var + eps) + beta, elementwise.
std::vector<double> layer_norm(std::span<const double> x, std::span<const double> gamma,
                               std::span<const double> beta, double eps);

struct BceResult {
    double loss = 0.0;
    std::vector<double> grad;  // d loss / d logits
};

/// Mean binary cross-entropy over slots, computed from logits in the stable
/// form max(z,0) - z*y + log1p(exp(-|z|)); gradient is (sigmoid(z) - y) / n.
BceResult bce_with_logits(std::span<const double> logits, std::span<const double> targets);

}  // namespace talent
