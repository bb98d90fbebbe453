#include "gentle/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace gentle {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Echelon rref(Matrix m) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::size_t rank_of_vectors(const std::vector<Vector>& vs, std::size_t dim) {
    if (vs.empty()) return 0;
    return rank(Matrix::from_columns(vs, dim));
}

std::vector<Vector> nullspace(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) { return LinearSolver(a).solve(b); }

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Rational inv = Rational(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

LinearSolver::LinearSolver(const Matrix& m) : rows_(m.rows()), cols_(m.cols()) {
    Matrix aug(rows_, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = m(i, j);
        aug(i, cols_ + i) = 1;
    }
    // Reduce only on the left block so that the right block records the row operations.
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && aug(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(piv, j), aug(row, j));
        Rational inv = Rational(1) / aug(row, col);
        for (std::size_t j = 0; j < aug.cols(); ++j)
            if (!aug(row, j).is_zero()) aug(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || aug(i, col).is_zero()) continue;
            Rational f = aug(i, col);
            for (std::size_t j = 0; j < aug.cols(); ++j)
                if (!aug(row, j).is_zero()) aug(i, j) -= f * aug(row, j);
        }
        pivots_.push_back(col);
        ++row;
    }
    transform_ = Matrix(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) transform_(i, j) = aug(i, cols_ + j);
}

std::optional<Vector> LinearSolver::solve(const Vector& b) const {
    if (b.size() != rows_) throw std::invalid_argument("right-hand side length mismatch");
    Vector w = transform_.apply(b);
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (!w[i].is_zero()) return std::nullopt;
    Vector x(cols_);
    for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = w[r];
    return x;
}

bool is_zero_vector(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace gentle

namespace gentle {

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}

std::uint64_t reduce_mod(std::int64_t x) {
    const std::int64_t r = x % static_cast<std::int64_t>(kPrime);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kPrime) : r);
}

}  // namespace

bool invertible_mod_prime(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) return false;
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = m(i, j);
            const std::uint64_t den = reduce_mod(x.den());
            if (den == 0) return false;
            a[i * n + j] = mulmod(reduce_mod(x.num()), powmod(den, kPrime - 2));
        }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return false;
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
        const std::uint64_t inv = powmod(a[c * n + c], kPrime - 2);
        for (std::size_t i = c + 1; i < n; ++i) {
            const std::uint64_t f = mulmod(a[i * n + c], inv);
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j)
                a[i * n + j] = (a[i * n + j] + kPrime - mulmod(f, a[c * n + j])) % kPrime;
        }
    }
    return true;
}

}  // namespace gentle
