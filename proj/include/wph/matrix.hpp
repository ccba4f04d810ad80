#ifndef WPH_MATRIX_HPP
#define WPH_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wph/rational.hpp"

namespace wph {

/// Dense exact-rational matrix. All instances in this project are small
/// (at most a few hundred rows), so no sparse storage.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator-() const;
    bool operator==(const RationalMatrix& other) const;
    bool operator!=(const RationalMatrix& other) const { return !(*this == other); }
    bool is_zero() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    std::vector<Rational> column(std::size_t j) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix vconcat(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
long rank(const RationalMatrix& m);

/// Basis of the right null space; size is cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Inverse via Gauss-Jordan; empty optional when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace wph

#endif
