#ifndef WPH_QPOLY_HPP
#define WPH_QPOLY_HPP

#include <array>
#include <utility>
#include <vector>

#include "wph/rational.hpp"

namespace wph {

/// Univariate polynomial over the rationals, coefficient of t^i at index i,
/// no trailing zeros. Supports the pencil-certificate arithmetic: exact
/// division, gcd, squarefree decomposition, modular arithmetic.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rational& c);
    explicit QPoly(std::vector<Rational> coeffs);

    static QPoly t();  // the variable

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading_coefficient() const { return c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }

    QPoly operator+(const QPoly& g) const;
    QPoly operator-(const QPoly& g) const;
    QPoly operator*(const QPoly& g) const;
    QPoly operator*(const Rational& s) const;
    QPoly operator-() const;
    bool operator==(const QPoly& g) const { return c_ == g.c_; }
    bool operator!=(const QPoly& g) const { return c_ != g.c_; }

    /// Euclidean division, g nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& g) const;
    QPoly operator%(const QPoly& g) const { return divmod(g).second; }

    /// Quotient when the division is known exact; throws std::logic_error on
    /// a nonzero remainder.
    QPoly exact_div(const QPoly& g) const;

    QPoly derivative() const;
    QPoly monic() const;
    /// Integer coefficients, content 1, positive leading coefficient.
    QPoly primitive() const;

    Rational eval(const Rational& x) const;

private:
    void normalize();
    std::vector<Rational> c_;
};

/// Monic gcd.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
std::array<QPoly, 3> xgcd(const QPoly& a, const QPoly& b);

/// Yun's algorithm: pairwise-coprime squarefree (factor, multiplicity) pairs
/// with product over factor^multiplicity equal to f up to a constant.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

}  // namespace wph

#endif
