#include "talent/layers.hpp"

#include <cmath>

#include "talent/errors.hpp"

namespace talent {

Matrix linear_forward(const Matrix& x, const Param& w, const Param* b, LinearCache* cache) {
    Matrix y = matmul(x, w.value);
    if (b != nullptr) y = add_row_broadcast(y, b->value);
    if (cache != nullptr) cache->x = x;
    return y;
}

Matrix linear_backward(const Matrix& d_out, const LinearCache& cache, Param& w, Param* b) {
    add_in_place(w.grad, matmul_tn(cache.x, d_out));
    if (b != nullptr) add_in_place(b->grad, column_sums(d_out));
    return matmul_nt(d_out, w.value);
}

Matrix layer_norm_forward(const Matrix& x, const Param& gamma, const Param& beta, double eps,
                          LayerNormCache* cache) {
    if (gamma.value.cols != x.cols || beta.value.cols != x.cols)
        throw DimensionError("layer_norm_forward: affine width mismatch");
    const double n = static_cast<double>(x.cols);
    Matrix out(x.rows, x.cols);
    Matrix x_hat(x.rows, x.cols);
    std::vector<double> inv_std(x.rows);
    for (std::size_t r = 0; r < x.rows; ++r) {
        double mean = 0.0;
        for (std::size_t c = 0; c < x.cols; ++c) mean += x(r, c);
        mean /= n;
        double var = 0.0;
        for (std::size_t c = 0; c < x.cols; ++c) {
            const double d = x(r, c) - mean;
            var += d * d;
        }
        var /= n;
        const double is = 1.0 / std::sqrt(var + eps);
        inv_std[r] = is;
        for (std::size_t c = 0; c < x.cols; ++c) {
            x_hat(r, c) = (x(r, c) - mean) * is;
            out(r, c) = gamma.value(0, c) * x_hat(r, c) + beta.value(0, c);
        }
    }
    if (cache != nullptr) {
        cache->x_hat = std::move(x_hat);
        cache->inv_std = std::move(inv_std);
    }
    return out;
}

Matrix layer_norm_backward(const Matrix& d_out, const LayerNormCache& cache, Param& gamma,
                           Param& beta) {
    const Matrix& x_hat = cache.x_hat;
    const double n = static_cast<double>(d_out.cols);
    Matrix dx(d_out.rows, d_out.cols);
    for (std::size_t r = 0; r < d_out.rows; ++r) {
        double sum_dxhat = 0.0;
        double sum_dxhat_xhat = 0.0;
        for (std::size_t c = 0; c < d_out.cols; ++c) {
            const double g = d_out(r, c);
            gamma.grad(0, c) += g * x_hat(r, c);
            beta.grad(0, c) += g;
            const double dxh = g * gamma.value(0, c);
            sum_dxhat += dxh;
            sum_dxhat_xhat += dxh * x_hat(r, c);
        }
        const double is = cache.inv_std[r];
        for (std::size_t c = 0; c < d_out.cols; ++c) {
            const double dxh = d_out(r, c) * gamma.value(0, c);
            dx(r, c) = is * (dxh - sum_dxhat / n - x_hat(r, c) * sum_dxhat_xhat / n);
        }
    }
    return dx;
}

Matrix relu_forward(const Matrix& x, ReluCache* cache) {
    Matrix out = x;
    Matrix mask(x.rows, x.cols);
    for (std::size_t i = 0; i < x.data.size(); ++i) {
        if (x.data[i] > 0.0) {
            mask.data[i] = 1.0;
        } else {
            out.data[i] = 0.0;
        }
    }
    if (cache != nullptr) cache->mask = std::move(mask);
    return out;
}

Matrix relu_backward(const Matrix& d_out, const ReluCache& cache) {
    return hadamard(d_out, cache.mask);
}

Matrix softmax_rows(const Matrix& scores) {
    Matrix out(scores.rows, scores.cols);
    for (std::size_t r = 0; r < scores.rows; ++r) {
        double mx = -std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < scores.cols; ++c) mx = std::max(mx, scores(r, c));
        double total = 0.0;
        for (std::size_t c = 0; c < scores.cols; ++c) {
            const double e = std::exp(scores(r, c) - mx);
            out(r, c) = e;
            total += e;
        }
        for (std::size_t c = 0; c < scores.cols; ++c) out(r, c) /= total;
    }
    return out;
}

Matrix softmax_rows_backward(const Matrix& d_out, const Matrix& probs) {
    Matrix dx(d_out.rows, d_out.cols);
    for (std::size_t r = 0; r < d_out.rows; ++r) {
        double dot = 0.0;
        for (std::size_t c = 0; c < d_out.cols; ++c) dot += d_out(r, c) * probs(r, c);
        for (std::size_t c = 0; c < d_out.cols; ++c)
            dx(r, c) = probs(r, c) * (d_out(r, c) - dot);
    }
    return dx;
}

}  // namespace talent
