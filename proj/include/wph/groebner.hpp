#ifndef WPH_GROEBNER_HPP
#define WPH_GROEBNER_HPP

#include <array>
#include <optional>
#include <vector>

#include "wph/polynomial.hpp"

namespace wph {

enum class OrderKind { WDegRevLex };

/// Degree-compatible monomial order attached to a weight system.
class MonomialOrder {
public:
    explicit MonomialOrder(const WeightSystem& ws, OrderKind kind = OrderKind::WDegRevLex)
        : ws_(ws), kind_(kind) {}

    const WeightSystem& weight_system() const { return ws_; }
    OrderKind kind() const { return kind_; }

    int cmp(const Monomial& a, const Monomial& b) const { return cmp_wdegrevlex(a, b, ws_); }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

private:
    WeightSystem ws_;
    OrderKind kind_;
};

/// Reduced Groebner basis of a homogeneous ideal. Generators are monic,
/// homogeneous, and sorted with the largest leading monomial first.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<WeightedPolynomial> generators, const MonomialOrder& order);

    const std::vector<WeightedPolynomial>& generators() const { return gens_; }
    const std::vector<Monomial>& leading_monomials() const { return leads_; }
    const MonomialOrder& order() const { return order_; }
    const WeightSystem& weight_system() const { return order_.weight_system(); }
    std::size_t size() const { return gens_.size(); }
    bool contains_unit() const;

    /// caps[i] = smallest e with x_i^e among the leading monomials; empty
    /// when some variable has no pure power (non-zero-dimensional ideal).
    std::optional<std::array<long, kNumVars>> pure_power_caps() const;

private:
    std::vector<WeightedPolynomial> gens_;
    std::vector<Monomial> leads_;
    MonomialOrder order_;
};

/// Buchberger with the coprime-lcm and chain pair-elimination criteria,
/// followed by interreduction to the unique reduced basis. Inputs must be
/// homogeneous.
GroebnerBasis buchberger(const std::vector<WeightedPolynomial>& generators,
                         const MonomialOrder& order);

/// Remainder of multivariate division by the basis; no term of the result is
/// divisible by any leading monomial, and p - result lies in the ideal.
WeightedPolynomial normal_form(const WeightedPolynomial& p, const GroebnerBasis& gb);

/// True iff every variable has a pure power among the leading monomials,
/// i.e. the quotient ring is finite-dimensional.
bool is_zero_dimensional(const GroebnerBasis& gb);

/// Monomials of weighted degree k outside the leading-term ideal, in
/// canonical listing order. Their count is dim of the degree-k quotient slice.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, long k);

}  // namespace wph

#endif
