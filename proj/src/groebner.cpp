#include <algorithm>
#include <set>
#include <stdexcept>

#include "wph/groebner.hpp"

namespace wph {

GroebnerBasis::GroebnerBasis(std::vector<WeightedPolynomial> generators,
                             const MonomialOrder& order)
    : gens_(std::move(generators)), order_(order) {
    leads_.reserve(gens_.size());
    for (const auto& g : gens_) leads_.push_back(g.leading_monomial());
}

bool GroebnerBasis::contains_unit() const {
    return gens_.size() == 1 && leads_[0].is_unit();
}

std::optional<std::array<long, kNumVars>> GroebnerBasis::pure_power_caps() const {
    std::array<long, kNumVars> caps;
    caps.fill(-1);
    for (const Monomial& lm : leads_) {
        int nonzero = -1;
        bool pure = true;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (lm.k[i] > 0) {
                if (nonzero >= 0) {
                    pure = false;
                    break;
                }
                nonzero = static_cast<int>(i);
            }
        }
        if (!pure) continue;
        if (nonzero < 0) {
            // unit ideal: every variable is capped at exponent 0
            caps.fill(0);
            return caps;
        }
        const long e = lm.k[nonzero];
        if (caps[nonzero] < 0 || e < caps[nonzero]) caps[nonzero] = e;
    }
    for (long c : caps)
        if (c < 0) return std::nullopt;
    return caps;
}

namespace {

// Division and S-polynomial arithmetic run on integer-coefficient term
// vectors (fraction-free, with periodic content stripping); rationals appear
// only when converting back. This keeps coefficient growth under control.

using IntTerm = std::pair<Monomial, Integer>;

struct IntPoly {
    // sorted descending in the active order, no zero coefficients
    std::vector<IntTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& leading_monomial() const { return terms.front().first; }
    const Integer& leading_coefficient() const { return terms.front().second; }
};

/// Strips the integer content (and a sign making the lead positive).
Integer strip_content(IntPoly& p) {
    if (p.is_zero()) return Integer(1);
    Integer content(0);
    for (const auto& [m, c] : p.terms) {
        content = gcd(content, c);
        if (content == 1) break;
    }
    if (p.leading_coefficient() < 0) content = -content;
    if (content != 1)
        for (auto& [m, c] : p.terms) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(),
                                                  content.get_mpz_t());
    return content;
}

/// p = scale * result with result primitive.
IntPoly to_int(const WeightedPolynomial& p, Rational& scale) {
    IntPoly out;
    out.terms.reserve(p.term_count());
    Integer den(1);
    for (const auto& [m, c] : p.terms()) den = lcm(den, c.get_den());
    for (const auto& [m, c] : p.terms())
        out.terms.emplace_back(m, Integer(c.get_num() * (den / c.get_den())));
    const Integer content = strip_content(out);
    scale = make_rational(content, den);
    return out;
}

/// self <- a*self - b*(m * g), all integer, order preserved by merging.
void fused_update(IntPoly& self, const Integer& a, const Integer& b, const Monomial& m,
                  const IntPoly& g, const MonomialOrder& order) {
    std::vector<IntTerm> result;
    result.reserve(self.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < self.terms.size() && j < g.terms.size()) {
        const Monomial gm = g.terms[j].first * m;
        const int cv = order.cmp(self.terms[i].first, gm);
        if (cv > 0) {
            result.emplace_back(self.terms[i].first, Integer(a * self.terms[i].second));
            ++i;
        } else if (cv < 0) {
            result.emplace_back(gm, Integer(-b * g.terms[j].second));
            ++j;
        } else {
            Integer c = a * self.terms[i].second - b * g.terms[j].second;
            if (c != 0) result.emplace_back(self.terms[i].first, std::move(c));
            ++i, ++j;
        }
    }
    for (; i < self.terms.size(); ++i)
        result.emplace_back(self.terms[i].first, Integer(a * self.terms[i].second));
    for (; j < g.terms.size(); ++j)
        result.emplace_back(g.terms[j].first * m, Integer(-b * g.terms[j].second));
    self.terms = std::move(result);
}

/// Fraction-free full remainder. Maintains p == work/mu + remainder modulo
/// the ideal generated by the divisors; emitted terms are exact.
WeightedPolynomial reduce_full(const WeightedPolynomial& p,
                               const std::vector<IntPoly>& divisors,
                               const MonomialOrder& order) {
    Rational initial_scale;
    IntPoly work = to_int(p, initial_scale);
    Rational mu = initial_scale == 0 ? Rational(1) : Rational(1) / initial_scale;

    std::vector<WeightedPolynomial::Term> remainder;
    int steps_since_strip = 0;
    while (!work.is_zero()) {
        const Monomial lm = work.leading_monomial();
        const IntPoly* divisor = nullptr;
        for (const auto& g : divisors) {
            if (g.leading_monomial().divides(lm)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            remainder.emplace_back(lm, Rational(work.leading_coefficient()) / mu);
            work.terms.erase(work.terms.begin());
            continue;
        }
        const Integer d = gcd(work.leading_coefficient(), divisor->leading_coefficient());
        Integer a = divisor->leading_coefficient() / d;
        Integer b = work.leading_coefficient() / d;
        if (a < 0) {
            a = -a;
            b = -b;
        }
        fused_update(work, a, b, lm / divisor->leading_monomial(), *divisor, order);
        mu *= a;
        if (++steps_since_strip >= 16) {
            steps_since_strip = 0;
            mu /= Rational(strip_content(work));
        }
    }
    return WeightedPolynomial::from_terms(order.weight_system(), std::move(remainder));
}

std::vector<IntPoly> to_int_basis(const std::vector<WeightedPolynomial>& gens) {
    std::vector<IntPoly> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        Rational scale;
        out.push_back(to_int(g, scale));
    }
    return out;
}

/// Fraction-free S-polynomial: (lc_g/d) u f - (lc_f/d) v g for u, v the
/// cofactors of the leading-monomial lcm and d = gcd of the leads.
IntPoly s_polynomial(const IntPoly& f, const IntPoly& g, const MonomialOrder& order) {
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    const Integer d = gcd(f.leading_coefficient(), g.leading_coefficient());
    IntPoly s;
    s.terms.reserve(f.terms.size());
    const Integer cf = g.leading_coefficient() / d;
    for (const auto& [m, c] : f.terms)
        s.terms.emplace_back(m * (l / f.leading_monomial()), Integer(cf * c));
    fused_update(s, Integer(1), Integer(f.leading_coefficient() / d),
                 l / g.leading_monomial(), g, order);
    strip_content(s);
    return s;
}

struct PendingPair {
    long degree;  // weighted degree of the lcm (normal selection strategy)
    std::size_t i, j;

    bool operator<(const PendingPair& other) const {
        if (degree != other.degree) return degree < other.degree;
        if (j != other.j) return j < other.j;
        return i < other.i;
    }
};

WeightedPolynomial from_int(const IntPoly& p, const WeightSystem& ws) {
    std::vector<WeightedPolynomial::Term> terms;
    terms.reserve(p.terms.size());
    for (const auto& [m, c] : p.terms) terms.emplace_back(m, Rational(c));
    return WeightedPolynomial::from_terms(ws, std::move(terms));
}

}  // namespace

WeightedPolynomial normal_form(const WeightedPolynomial& p, const GroebnerBasis& gb) {
    if (p.is_zero()) return p;
    return reduce_full(p, to_int_basis(gb.generators()), gb.order());
}

GroebnerBasis buchberger(const std::vector<WeightedPolynomial>& generators,
                         const MonomialOrder& order) {
    const WeightSystem& ws = order.weight_system();
    std::vector<IntPoly> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("buchberger: inputs must be homogeneous");
        Rational scale;
        basis.push_back(to_int(g, scale));
    }

    std::set<PendingPair> queue;
    auto pair_lcm = [&](std::size_t i, std::size_t j) {
        return lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
    };

    // Gebauer-Moeller pair update: the M, F and both B criteria
    auto update_pairs = [&](std::size_t t) {
        const Monomial& lt = basis[t].leading_monomial();

        // B: discard queued pairs whose lcm is properly covered by the new lead
        for (auto it = queue.begin(); it != queue.end();) {
            const Monomial l = pair_lcm(it->i, it->j);
            if (lt.divides(l) && pair_lcm(it->i, t) != l && pair_lcm(it->j, t) != l)
                it = queue.erase(it);
            else
                ++it;
        }

        // M: drop (i,t) when another new pair's lcm properly divides its lcm
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < t; ++i) {
            const Monomial li = pair_lcm(i, t);
            bool dominated = false;
            for (std::size_t j = 0; j < t && !dominated; ++j) {
                if (j == i) continue;
                const Monomial lj = pair_lcm(j, t);
                if (lj != li && lj.divides(li)) dominated = true;
            }
            if (!dominated) kept.push_back(i);
        }

        // F: one representative per lcm class, preferring a coprime pair so
        // the whole class falls to the product criterion
        std::vector<bool> taken(kept.size(), false);
        for (std::size_t a = 0; a < kept.size(); ++a) {
            if (taken[a]) continue;
            const Monomial la = pair_lcm(kept[a], t);
            std::size_t representative = a;
            bool coprime_rep = coprime(basis[kept[a]].leading_monomial(), lt);
            for (std::size_t b = a + 1; b < kept.size(); ++b) {
                if (taken[b] || pair_lcm(kept[b], t) != la) continue;
                taken[b] = true;
                if (!coprime_rep && coprime(basis[kept[b]].leading_monomial(), lt)) {
                    representative = b;
                    coprime_rep = true;
                }
            }
            taken[a] = true;
            if (!coprime_rep)  // product criterion kills coprime representatives
                queue.insert({la.weighted_degree(ws), kept[representative], t});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) update_pairs(j);

    while (!queue.empty()) {
        const PendingPair pair = *queue.begin();
        queue.erase(queue.begin());

        const WeightedPolynomial r =
            reduce_full(from_int(s_polynomial(basis[pair.i], basis[pair.j], order), ws),
                        basis, order);
        if (r.is_zero()) continue;
        Rational scale;
        basis.push_back(to_int(r, scale));
        update_pairs(basis.size() - 1);
    }

    // minimalize: drop generators whose leading monomial is divisible by
    // another's (ties keep the earliest)
    std::vector<IntPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = basis[i].leading_monomial();
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].leading_monomial();
            if (lj.divides(li) && (li != lj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each generator against the others, then make monic
    std::vector<WeightedPolynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<IntPoly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(reduce_full(from_int(minimal[i], ws), others, order).monic());
    }

    std::sort(reduced.begin(), reduced.end(),
              [&](const WeightedPolynomial& a, const WeightedPolynomial& b) {
                  return order.cmp(a.leading_monomial(), b.leading_monomial()) > 0;
              });
    return GroebnerBasis(std::move(reduced), order);
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
    return gb.pure_power_caps().has_value();
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, long k) {
    const WeightSystem& ws = gb.weight_system();
    std::array<long, kNumVars> caps{-1, -1, -1, -1};
    if (auto pure = gb.pure_power_caps()) {
        // standard monomials satisfy k_i < cap_i; prune the enumeration
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if ((*pure)[i] == 0) return {};  // unit ideal
            caps[i] = (*pure)[i] - 1;
        }
    }
    std::vector<Monomial> out;
    for (const Monomial& m : monomials_of_degree_capped(ws, k, caps)) {
        bool divisible = false;
        for (const Monomial& lm : gb.leading_monomials()) {
            if (lm.divides(m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) out.push_back(m);
    }
    return out;
}

}  // namespace wph
