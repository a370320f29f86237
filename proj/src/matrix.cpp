#include "twc/matrix.hpp"

namespace twc {

Matrix Matrix::identity(int n, const Field& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in +");
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in -");
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch in *");
    Matrix m(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= c;
    return m;
}

Matrix Matrix::slice(int r0, int r1, int c0, int c1) const {
    Matrix m(r1 - r0, c1 - c0, field_);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) m.at(i - r0, j - c0) = at(i, j);
    return m;
}

void Matrix::paste(int r0, int c0, const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) at(r0 + i, c0 + j) = m.at(i, j);
}

namespace {

// Row echelon form in place; returns pivot columns. First-nonzero pivoting
// keeps every downstream witness deterministic.
std::vector<int> echelon(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = m.at(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int Matrix::rank() const {
    Matrix m = *this;
    return static_cast<int>(echelon(m).size());
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix aug(rows_, 2 * cols_, field_);
    aug.paste(0, 0, *this);
    aug.paste(0, cols_, identity(rows_, field_));
    auto piv = echelon(aug);
    if (static_cast<int>(piv.size()) != rows_ || (rows_ > 0 && piv.back() >= cols_)) return std::nullopt;
    for (int i = 0; i < rows_; ++i)
        if (piv[i] != i) return std::nullopt;
    return aug.slice(0, rows_, cols_, 2 * cols_);
}

std::string Matrix::str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += at(i, j).str();
        }
        s += "]";
    }
    return s + "]";
}

std::optional<std::vector<Scalar>> solve_linear(const Matrix& A, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw Error("solve_linear: rhs size mismatch");
    Matrix aug(A.rows(), A.cols() + 1, A.field());
    aug.paste(0, 0, A);
    for (int i = 0; i < A.rows(); ++i) aug.at(i, A.cols()) = b[i];
    auto piv = echelon(aug);
    if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(A.cols(), Scalar::zero(A.field()));
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<int>(r), A.cols());
    return x;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& A) {
    Matrix m = A;
    auto piv = echelon(m);
    std::vector<bool> is_pivot(A.cols(), false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> out;
    for (int c = 0; c < A.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(A.cols(), Scalar::zero(A.field()));
        v[c] = Scalar::one(A.field());
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m.at(static_cast<int>(r), c);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace twc
