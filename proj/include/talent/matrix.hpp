#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace talent {

/// Row-major dense matrix of 64-bit floats. The single numeric carrier for
/// weights, activations and gradients in this library.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

    std::size_t size() const { return rows * cols; }
    bool empty() const { return size() == 0; }

    bool same_shape(const Matrix& other) const {
        return rows == other.rows && cols == other.cols;
    }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    bool all_finite() const;
};

bool operator==(const Matrix& a, const Matrix& b);

Matrix matmul(const Matrix& a, const Matrix& b);
// a * b^T and a^T * b; the two contractions that show up in every backward pass.
Matrix matmul_nt(const Matrix& a, const Matrix& b);
Matrix matmul_tn(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
void add_in_place(Matrix& a, const Matrix& b);
void add_scaled_in_place(Matrix& a, const Matrix& b, double s);

/// Adds a 1 x cols bias row to every row of x.
Matrix add_row_broadcast(const Matrix& x, const Matrix& bias_row);
/// Column sums as a 1 x cols matrix (gradient of a broadcast bias).
Matrix column_sums(const Matrix& x);

}  // namespace talent
