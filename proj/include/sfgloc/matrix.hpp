#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sfgloc {

// Dense row-major double matrix; small enough on purpose.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    double* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
    const double* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }

    std::size_t size() const { return a.size(); }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

    static Matrix zeros(int r, int c) { return Matrix(r, c); }
    static Matrix full(int r, int c, double v) {
        Matrix m(r, c);
        std::fill(m.a.begin(), m.a.end(), v);
        return m;
    }
    static Matrix randn(int r, int c, double stddev, std::mt19937_64& rng) {
        Matrix m(r, c);
        std::normal_distribution<double> d(0.0, stddev);
        for (double& v : m.a)
            v = d(rng);
        return m;
    }
};

// C = A * B
Matrix matmul(const Matrix& A, const Matrix& B);
// C = A * B^T
Matrix matmul_nt(const Matrix& A, const Matrix& B);
// C = A^T * B
Matrix matmul_tn(const Matrix& A, const Matrix& B);

void add_inplace(Matrix& dst, const Matrix& src);        // dst += src
void axpy_inplace(Matrix& dst, double c, const Matrix& src); // dst += c*src

double dot_rows(const Matrix& A, int i, const Matrix& B, int j);
double row_norm(const Matrix& A, int i);

} // namespace sfgloc
