#include "mclab/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace mclab {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

bool Mat::symmetric(double rel_tol) const {
    if (rows != cols) {
        return false;
    }
    double scale = 0.0;
    for (double v : data) {
        scale = std::max(scale, std::abs(v));
    }
    const double tol = rel_tol * std::max(scale, 1.0);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = i + 1; j < cols; ++j) {
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) {
                return false;
            }
        }
    }
    return true;
}

Mat gram(const FeatureMatrix& x) {
    const size_t d = x.empty() ? 0 : x.front().size();
    Mat g(d, d);
    for (const auto& row : x) {
        for (size_t i = 0; i < d; ++i) {
            for (size_t j = i; j < d; ++j) {
                g(i, j) += row[i] * row[j];
            }
        }
    }
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < i; ++j) {
            g(i, j) = g(j, i);
        }
    }
    return g;
}

std::vector<double> mat_vec(const Mat& a, const std::vector<double>& v) {
    if (v.size() != a.cols) {
        throw std::invalid_argument("mat_vec: dimension mismatch");
    }
    std::vector<double> out(a.rows, 0.0);
    for (size_t i = 0; i < a.rows; ++i) {
        double s = 0.0;
        for (size_t j = 0; j < a.cols; ++j) {
            s += a(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

Mat cholesky(const Mat& a) {
    if (a.rows != a.cols) {
        throw std::invalid_argument("cholesky: matrix must be square");
    }
    const size_t n = a.rows;
    Mat l(n, n);
    for (size_t j = 0; j < n; ++j) {
        double diag = a(j, j);
        for (size_t k = 0; k < j; ++k) {
            diag -= l(j, k) * l(j, k);
        }
        if (!(diag > 0.0)) {
            throw std::runtime_error("cholesky: matrix is not positive-definite");
        }
        l(j, j) = std::sqrt(diag);
        for (size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (size_t k = 0; k < j; ++k) {
                s -= l(i, k) * l(j, k);
            }
            l(i, j) = s / l(j, j);
        }
    }
    return l;
}

std::vector<double> cholesky_solve(const Mat& l, const std::vector<double>& b) {
    const size_t n = l.rows;
    if (b.size() != n) {
        throw std::invalid_argument("cholesky_solve: dimension mismatch");
    }
    std::vector<double> y(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (size_t k = 0; k < i; ++k) {
            s -= l(i, k) * y[k];
        }
        y[i] = s / l(i, i);
    }
    std::vector<double> x(n, 0.0);
    for (size_t ii = n; ii > 0; --ii) {
        const size_t i = ii - 1;
        double s = y[i];
        for (size_t k = i + 1; k < n; ++k) {
            s -= l(k, i) * x[k];
        }
        x[i] = s / l(i, i);
    }
    return x;
}

Mat cholesky_inverse(const Mat& l) {
    const size_t n = l.rows;
    Mat inv(n, n);
    std::vector<double> e(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        const std::vector<double> col = cholesky_solve(l, e);
        for (size_t i = 0; i < n; ++i) {
            inv(i, j) = col[i];
        }
        e[j] = 0.0;
    }
    // kill round-off asymmetry
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = v;
            inv(j, i) = v;
        }
    }
    return inv;
}

} // namespace mclab
