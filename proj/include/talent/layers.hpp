#pragma once

#include <vector>

#include "talent/matrix.hpp"
#include "talent/params.hpp"

namespace talent {

// Cached forward/backward building blocks. Each forward fills a cache; the
// matching backward consumes it, accumulates into Param::grad, and returns
// the gradient with respect to the block input.

struct LinearCache {
    Matrix x;
};

/// y = x W + b (b optional, broadcast over rows).
Matrix linear_forward(const Matrix& x, const Param& w, const Param* b, LinearCache* cache);
Matrix linear_backward(const Matrix& d_out, const LinearCache& cache, Param& w, Param* b);

struct LayerNormCache {
    Matrix x_hat;
    std::vector<double> inv_std;
};

/// Row-wise layer norm with learned gamma/beta (1 x d each).
Matrix layer_norm_forward(const Matrix& x, const Param& gamma, const Param& beta, double eps,
                          LayerNormCache* cache);
Matrix layer_norm_backward(const Matrix& d_out, const LayerNormCache& cache, Param& gamma,
                           Param& beta);

struct ReluCache {
    Matrix mask;
};

Matrix relu_forward(const Matrix& x, ReluCache* cache);
Matrix relu_backward(const Matrix& d_out, const ReluCache& cache);

/// Row-wise softmax of a score matrix (used inside attention).
Matrix softmax_rows(const Matrix& scores);
/// Backward of row-wise softmax given its output p: dx = p ⊙ (dy - rowdot(dy, p)).
Matrix softmax_rows_backward(const Matrix& d_out, const Matrix& probs);

}  // namespace talent
