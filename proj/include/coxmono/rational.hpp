#ifndef COXMONO_RATIONAL_HPP
#define COXMONO_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxmono {

// Arbitrary-precision rational. mpq_class keeps values canonical
// (reduced, positive denominator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator<(const RationalMatrix& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        for (size_t k = 0; k < entries_.size(); ++k) {
            int c = cmp(entries_[k], o.entries_[k]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        RationalMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    RationalVector apply(const RationalVector& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("matrix-vector dimension mismatch");
        RationalVector r(rows_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    RationalMatrix transpose() const {
        RationalMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rational det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        RationalMatrix a(*this);
        Rational d(1);
        int n = rows_;
        for (int col = 0, row = 0; col < n && row < n; ++col, ++row) {
            int piv = -1;
            for (int i = row; i < n; ++i)
                if (a(i, col) != 0) { piv = i; break; }
            if (piv < 0) return Rational(0);
            if (piv != row) {
                for (int j = 0; j < n; ++j) swap(a(piv, j), a(row, j));
                d = -d;
            }
            d *= a(row, col);
            Rational inv = 1 / a(row, col);
            for (int i = row + 1; i < n; ++i) {
                if (a(i, col) == 0) continue;
                Rational f = a(i, col) * inv;
                for (int j = col; j < n; ++j) a(i, j) -= f * a(row, j);
            }
        }
        return d;
    }

private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

enum class LinSolveStatus { Unique, Inconsistent, Underdetermined };

struct LinSolveResult {
    LinSolveStatus status;
    RationalVector solution;  // valid iff status == Unique
};

// Exact Gaussian elimination with first-nonzero pivoting. Reports
// inconsistent and underdetermined systems as distinct outcomes.
inline LinSolveResult solve_linear(const RationalMatrix& a, const RationalVector& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_linear: rhs size mismatch");
    int m = a.rows(), n = a.cols();
    RationalMatrix aug(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (aug(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = col; j <= n; ++j) swap(aug(piv, j), aug(row, j));
        Rational inv = 1 / aug(row, col);
        for (int j = col; j <= n; ++j) aug(row, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || aug(i, col) == 0) continue;
            Rational f = aug(i, col);
            for (int j = col; j <= n; ++j) aug(i, j) -= f * aug(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (aug(i, n) != 0) return {LinSolveStatus::Inconsistent, {}};
    if (static_cast<int>(pivot_col.size()) < n) return {LinSolveStatus::Underdetermined, {}};
    RationalVector x(n, Rational(0));
    for (int r = 0; r < n; ++r) x[pivot_col[r]] = aug(r, n);
    return {LinSolveStatus::Unique, x};
}

// Rank of a matrix, by the same elimination.
inline int matrix_rank(const RationalMatrix& a) {
    RationalMatrix m(a);
    int rows = m.rows(), cols = m.cols(), rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < cols; ++j) swap(m(piv, j), m(rank, j));
        Rational inv = 1 / m(rank, col);
        for (int i = rank + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) * inv;
            for (int j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

// Inverse of a square nonsingular matrix.
inline RationalMatrix inverse(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = a.rows();
    RationalMatrix inv(n, n);
    for (int col = 0; col < n; ++col) {
        RationalVector e(n, Rational(0));
        e[col] = 1;
        LinSolveResult r = solve_linear(a, e);
        if (r.status != LinSolveStatus::Unique)
            throw std::domain_error("inverse of singular matrix");
        for (int i = 0; i < n; ++i) inv(i, col) = r.solution[i];
    }
    return inv;
}

// Basis of the kernel of a single linear form (nonzero), as matrix columns.
inline RationalMatrix form_kernel_basis(const RationalVector& form) {
    int n = static_cast<int>(form.size());
    int lead = -1;
    for (int i = 0; i < n; ++i)
        if (form[i] != 0) { lead = i; break; }
    if (lead < 0) throw std::invalid_argument("kernel of the zero form");
    RationalMatrix b(n, n - 1);
    int col = 0;
    for (int j = 0; j < n; ++j) {
        if (j == lead) continue;
        b(j, col) = 1;
        b(lead, col) = -form[j] / form[lead];
        ++col;
    }
    return b;
}

}  // namespace coxmono

#endif
