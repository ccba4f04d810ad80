#ifndef WPH_MONOMIAL_HPP
#define WPH_MONOMIAL_HPP

#include <array>
#include <string>
#include <vector>

#include "wph/weight_system.hpp"

namespace wph {

/// Exponent vector of a monomial x1^k1 x2^k2 x3^k3 x4^k4.
struct Monomial {
    std::array<int, kNumVars> k{0, 0, 0, 0};

    static Monomial unit() { return Monomial{}; }
    static Monomial variable(std::size_t i, int e = 1) {
        Monomial m;
        m.k[i] = e;
        return m;
    }

    bool is_unit() const { return k == std::array<int, kNumVars>{0, 0, 0, 0}; }

    long weighted_degree(const WeightSystem& ws) const {
        long d = 0;
        for (std::size_t i = 0; i < kNumVars; ++i) d += static_cast<long>(k[i]) * ws.weight(i);
        return d;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (k[i] > m.k[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r;
        for (std::size_t i = 0; i < kNumVars; ++i) r.k[i] = k[i] + m.k[i];
        return r;
    }

    /// Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const {
        Monomial r;
        for (std::size_t i = 0; i < kNumVars; ++i) r.k[i] = k[i] - m.k[i];
        return r;
    }

    bool operator==(const Monomial& m) const { return k == m.k; }
    bool operator!=(const Monomial& m) const { return k != m.k; }

    std::string to_string() const;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Lexicographic comparison on exponent tuples: -1, 0 or +1.
int cmp_lex(const Monomial& a, const Monomial& b);

/// Weighted degree, ties broken by reverse lexicographic (x1 > x2 > x3 > x4).
/// This is the default order for Groebner computations.
int cmp_wdegrevlex(const Monomial& a, const Monomial& b, const WeightSystem& ws);

/// Canonical listing order: weighted degree then lex on exponent tuples,
/// both descending. Used for basis listings and rendering.
bool canonical_before(const Monomial& a, const Monomial& b, const WeightSystem& ws);

/// All monomials of weighted degree exactly k, in canonical listing order.
std::vector<Monomial> monomials_of_degree(const WeightSystem& ws, long k);

/// Same, restricted to exponents k_i <= caps[i]. caps[i] < 0 means unbounded.
std::vector<Monomial> monomials_of_degree_capped(const WeightSystem& ws, long k,
                                                 const std::array<long, kNumVars>& caps);

}  // namespace wph

#endif
