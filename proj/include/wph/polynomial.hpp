#ifndef WPH_POLYNOMIAL_HPP
#define WPH_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wph/monomial.hpp"
#include "wph/rational.hpp"
#include "wph/weight_system.hpp"

namespace wph {

/// Sparse exact-rational polynomial over a fixed weight system.
/// Terms are kept sorted descending in the weighted-degrevlex order (leading
/// term first) with no zero coefficients stored.
class WeightedPolynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    explicit WeightedPolynomial(const WeightSystem& ws) : ws_(ws) {}
    WeightedPolynomial(const WeightSystem& ws, const Monomial& m, const Rational& c);

    /// Builds from an arbitrary term list; combines like terms, drops zeros.
    static WeightedPolynomial from_terms(const WeightSystem& ws, std::vector<Term> terms);

    const WeightSystem& weight_system() const { return ws_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Leading term in the weighted-degrevlex order.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().first; }
    const Rational& leading_coefficient() const { return leading_term().second; }

    /// Degree k such that every monomial has weighted degree k, when one
    /// exists. The zero polynomial reports homogeneous with no degree.
    bool is_homogeneous() const;
    std::optional<long> homogeneous_degree() const;

    WeightedPolynomial operator+(const WeightedPolynomial& g) const;
    WeightedPolynomial operator-(const WeightedPolynomial& g) const;
    WeightedPolynomial operator*(const WeightedPolynomial& g) const;
    WeightedPolynomial operator-() const;
    WeightedPolynomial operator*(const Rational& c) const;

    /// this -= c * m * g, the hot path of polynomial division.
    void sub_scaled(const Rational& c, const Monomial& m, const WeightedPolynomial& g);

    WeightedPolynomial multiplied_by(const Monomial& m, const Rational& c) const;

    /// Divides by the leading coefficient.
    WeightedPolynomial monic() const;

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient.
    WeightedPolynomial primitive() const;

    WeightedPolynomial partial_derivative(std::size_t var) const;

    bool operator==(const WeightedPolynomial& g) const;
    bool operator!=(const WeightedPolynomial& g) const { return !(*this == g); }

    /// Canonical rendering; parses back to an equal polynomial.
    std::string to_string() const;

private:
    void normalize();

    std::vector<Term> terms_;
    WeightSystem ws_;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Parses the polynomial grammar: variables x1..x4, integer or rational
/// (p/q) coefficients, operators + - * ^, whitespace insignificant, ^ binds
/// tighter than *. Throws ParseError with the offending position.
WeightedPolynomial parse_polynomial(const std::string& text, const WeightSystem& ws);

/// Sum of pure powers x_i^(d/w_i). Throws std::domain_error ("no Fermat
/// member") when some weight does not divide the degree.
WeightedPolynomial fermat_polynomial(const WeightSystem& ws);

/// Dense random homogeneous polynomial of degree k with coefficients drawn
/// uniformly from {-9..9} \ {0}.
WeightedPolynomial random_homogeneous(const WeightSystem& ws, long k, Rng& rng);

}  // namespace wph

#endif
