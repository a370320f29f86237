#pragma once

#include <optional>
#include <vector>

#include "twc/scalar.hpp"

namespace twc {

// Dense matrix over the configured field. Dimensions stay at desk scale,
// so everything is plain row-major storage with exact Gaussian elimination.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

    static Matrix identity(int n, const Field& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // matrix product
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;

    Matrix slice(int r0, int r1, int c0, int c1) const;
    void paste(int r0, int c0, const Matrix& m);

    int rank() const;
    std::optional<Matrix> inverse() const;
    std::string str() const;  // [[a,b],[c,d]]

private:
    int rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

// Solves A x = b exactly; returns one solution (free variables set to zero)
// with deterministic pivoting, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const Matrix& A, const std::vector<Scalar>& b);

// Basis of the kernel of A, deterministic order (one vector per free column).
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& A);

}  // namespace twc
