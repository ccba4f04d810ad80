#include <stdexcept>

#include "wph/matrix.hpp"

namespace wph {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) r.at(i, j) += v * other.at(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

bool RationalMatrix::is_zero() const {
    for (const Rational& v : a_)
        if (v != 0) return false;
    return true;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix shape mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

RationalMatrix vconcat(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

long rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // clear denominators row by row; row scaling does not change the rank
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer den(1);
        for (std::size_t j = 0; j < cols; ++j) den = lcm(den, m.at(i, j).get_den());
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& v = m.at(i, j);
            a[i][j] = v.get_num() * (den / v.get_den());
        }
    }

    // Bareiss: divisions below are exact, intermediate entries are minors
    Integer prev(1);
    std::size_t r = 0;
    std::vector<std::size_t> row_of(rows), col_of(cols);
    for (std::size_t i = 0; i < rows; ++i) row_of[i] = i;
    for (std::size_t j = 0; j < cols; ++j) col_of[j] = j;

    while (r < rows && r < cols) {
        std::size_t pi = r, pj = r;
        bool found = false;
        for (std::size_t i = r; i < rows && !found; ++i)
            for (std::size_t j = r; j < cols && !found; ++j)
                if (a[row_of[i]][col_of[j]] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(row_of[r], row_of[pi]);
        std::swap(col_of[r], col_of[pj]);

        const Integer& pivot = a[row_of[r]][col_of[r]];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = r + 1; j < cols; ++j) {
                Integer t = a[row_of[i]][col_of[j]] * pivot -
                            a[row_of[i]][col_of[r]] * a[row_of[r]][col_of[j]];
                mpz_divexact(a[row_of[i]][col_of[j]].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[row_of[i]][col_of[r]] = 0;
        }
        prev = pivot;
        ++r;
    }
    return static_cast<long>(r);
}

namespace {

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    RationalMatrix work = m;
    const std::vector<std::size_t> pivots = rref(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix work = hconcat(m, RationalMatrix::identity(n));
    const std::vector<std::size_t> pivots = rref(work);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = work.at(i, n + j);
    return inv;
}

}  // namespace wph
