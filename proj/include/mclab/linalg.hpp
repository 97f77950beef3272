#pragma once

#include <cstddef>
#include <vector>

namespace mclab {

// Design matrices are stored row-wise; every row is one sample.
using FeatureMatrix = std::vector<std::vector<double>>;

// Minimal dense matrix, row-major. Only what the regularised least-squares
// and Bayesian solves need.
struct Mat {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(size_t i, size_t j) { return data[i * cols + j]; }
    double operator()(size_t i, size_t j) const { return data[i * cols + j]; }

    static Mat identity(size_t n);
    bool symmetric(double rel_tol) const;
};

// X^T X and X^T y over a row-wise design matrix.
Mat gram(const FeatureMatrix& x);
std::vector<double> mat_vec(const Mat& a, const std::vector<double>& v);

// Lower-triangular L with A = L L^T. Throws std::runtime_error when A is
// not positive-definite (non-positive pivot).
Mat cholesky(const Mat& a);

// Solves A x = b through a precomputed Cholesky factor.
std::vector<double> cholesky_solve(const Mat& l, const std::vector<double>& b);

// A^{-1} column by column through the factor; symmetrised on return.
Mat cholesky_inverse(const Mat& l);

} // namespace mclab
