#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wph/monomial.hpp"
#include "wph/polynomial.hpp"
#include "wph/weight_system.hpp"

namespace wph {

WeightSystem::WeightSystem(const std::array<int, kNumVars>& weights, int degree)
    : w_(weights), d_(degree) {
    int g = 0;
    sigma_ = 0;
    for (int w : w_) {
        if (w < 1) throw std::invalid_argument("weights must be positive");
        g = std::gcd(g, w);
        sigma_ += w;
    }
    if (g != 1) throw std::invalid_argument("weight system must be reduced: gcd(weights) = 1");
    if (d_ < 1) throw std::invalid_argument("degree must be positive");
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (k[i] == 0) continue;
        if (!first) os << '*';
        os << 'x' << (i + 1);
        if (k[i] > 1) os << '^' << k[i];
        first = false;
    }
    if (first) os << '1';
    return os.str();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.k[i] = std::max(a.k[i], b.k[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (a.k[i] > 0 && b.k[i] > 0) return false;
    return true;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (a.k[i] != b.k[i]) return a.k[i] < b.k[i] ? -1 : 1;
    }
    return 0;
}

int cmp_wdegrevlex(const Monomial& a, const Monomial& b, const WeightSystem& ws) {
    const long da = a.weighted_degree(ws);
    const long db = b.weighted_degree(ws);
    if (da != db) return da < db ? -1 : 1;
    // a < b iff the rightmost nonzero entry of a - b is positive
    for (std::size_t i = kNumVars; i-- > 0;) {
        if (a.k[i] != b.k[i]) return a.k[i] > b.k[i] ? -1 : 1;
    }
    return 0;
}

bool canonical_before(const Monomial& a, const Monomial& b, const WeightSystem& ws) {
    const long da = a.weighted_degree(ws);
    const long db = b.weighted_degree(ws);
    if (da != db) return da > db;
    return cmp_lex(a, b) > 0;
}

namespace {

void enumerate_rec(const WeightSystem& ws, std::size_t var, long remaining,
                   const std::array<long, kNumVars>& caps, Monomial& current,
                   std::vector<Monomial>& out) {
    if (var + 1 == kNumVars) {
        const int w = ws.weight(var);
        if (remaining % w != 0) return;
        const long e = remaining / w;
        if (caps[var] >= 0 && e > caps[var]) return;
        current.k[var] = static_cast<int>(e);
        out.push_back(current);
        current.k[var] = 0;
        return;
    }
    long hi = remaining / ws.weight(var);
    if (caps[var] >= 0) hi = std::min(hi, caps[var]);
    for (long e = hi; e >= 0; --e) {  // descending: emits lex-descending order
        current.k[var] = static_cast<int>(e);
        enumerate_rec(ws, var + 1, remaining - e * ws.weight(var), caps, current, out);
    }
    current.k[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree_capped(const WeightSystem& ws, long k,
                                                 const std::array<long, kNumVars>& caps) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    Monomial current;
    enumerate_rec(ws, 0, k, caps, current, out);
    return out;
}

std::vector<Monomial> monomials_of_degree(const WeightSystem& ws, long k) {
    return monomials_of_degree_capped(ws, k, {-1, -1, -1, -1});
}

// ---------------------------------------------------------------------------
// WeightedPolynomial

WeightedPolynomial::WeightedPolynomial(const WeightSystem& ws, const Monomial& m,
                                       const Rational& c)
    : ws_(ws) {
    if (c != 0) terms_.emplace_back(m, c);
}

WeightedPolynomial WeightedPolynomial::from_terms(const WeightSystem& ws,
                                                  std::vector<Term> terms) {
    WeightedPolynomial p(ws);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void WeightedPolynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
        return cmp_wdegrevlex(a.first, b.first, ws_) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
            if (merged.back().second == 0) merged.pop_back();
        } else if (t.second != 0) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

const WeightedPolynomial::Term& WeightedPolynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

bool WeightedPolynomial::is_homogeneous() const { return homogeneous_degree().has_value() || is_zero(); }

std::optional<long> WeightedPolynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const long d = terms_.front().first.weighted_degree(ws_);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(ws_) != d) return std::nullopt;
    return d;
}

WeightedPolynomial WeightedPolynomial::operator+(const WeightedPolynomial& g) const {
    if (ws_ != g.ws_) throw std::invalid_argument("weight system mismatch");
    WeightedPolynomial r(ws_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        const int c = cmp_wdegrevlex(terms_[i].first, g.terms_[j].first, ws_);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(g.terms_[j++]);
        } else {
            Rational sum = terms_[i].second + g.terms_[j].second;
            if (sum != 0) r.terms_.emplace_back(terms_[i].first, sum);
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
    return r;
}

WeightedPolynomial WeightedPolynomial::operator-() const {
    WeightedPolynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

WeightedPolynomial WeightedPolynomial::operator-(const WeightedPolynomial& g) const {
    return *this + (-g);
}

WeightedPolynomial WeightedPolynomial::operator*(const Rational& c) const {
    WeightedPolynomial r(ws_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

WeightedPolynomial WeightedPolynomial::multiplied_by(const Monomial& m, const Rational& c) const {
    WeightedPolynomial r(ws_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    // multiplication by a fixed monomial preserves the term order
    for (const auto& [mono, coeff] : terms_) r.terms_.emplace_back(mono * m, coeff * c);
    return r;
}

WeightedPolynomial WeightedPolynomial::operator*(const WeightedPolynomial& g) const {
    if (ws_ != g.ws_) throw std::invalid_argument("weight system mismatch");
    WeightedPolynomial r(ws_);
    if (is_zero() || g.is_zero()) return r;
    std::vector<Term> acc;
    acc.reserve(terms_.size() * g.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : g.terms_) acc.emplace_back(ma * mb, ca * cb);
    return from_terms(ws_, std::move(acc));
}

void WeightedPolynomial::sub_scaled(const Rational& c, const Monomial& m,
                                    const WeightedPolynomial& g) {
    std::vector<Term> result;
    result.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        const Monomial gm = g.terms_[j].first * m;
        const int cv = cmp_wdegrevlex(terms_[i].first, gm, ws_);
        if (cv > 0) {
            result.push_back(std::move(terms_[i++]));
        } else if (cv < 0) {
            result.emplace_back(gm, -c * g.terms_[j].second);
            ++j;
        } else {
            Rational sum = terms_[i].second - c * g.terms_[j].second;
            if (sum != 0) result.emplace_back(terms_[i].first, std::move(sum));
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) result.push_back(std::move(terms_[i]));
    for (; j < g.terms_.size(); ++j)
        result.emplace_back(g.terms_[j].first * m, -c * g.terms_[j].second);
    terms_ = std::move(result);
}

WeightedPolynomial WeightedPolynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_coefficient());
}

WeightedPolynomial WeightedPolynomial::primitive() const {
    if (is_zero()) return *this;
    Integer den(1);
    for (const auto& [m, c] : terms_) den = lcm(den, c.get_den());
    Integer content(0);
    for (const auto& [m, c] : terms_) {
        Integer num = c.get_num() * (den / c.get_den());
        content = gcd(content, num);
    }
    Rational scale = make_rational(den, content);
    if (leading_coefficient() < 0) scale = -scale;
    return *this * scale;
}

WeightedPolynomial WeightedPolynomial::partial_derivative(std::size_t var) const {
    WeightedPolynomial r(ws_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        if (m.k[var] == 0) continue;
        Monomial d = m;
        d.k[var] -= 1;
        r.terms_.emplace_back(d, c * m.k[var]);
    }
    // degrevlex order is preserved by the uniform exponent shift
    std::sort(r.terms_.begin(), r.terms_.end(), [this](const Term& a, const Term& b) {
        return cmp_wdegrevlex(a.first, b.first, ws_) > 0;
    });
    return r;
}

bool WeightedPolynomial::operator==(const WeightedPolynomial& g) const {
    return ws_ == g.ws_ && terms_ == g.terms_;
}

std::string WeightedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<Term> ordered = terms_;
    std::sort(ordered.begin(), ordered.end(), [this](const Term& a, const Term& b) {
        return canonical_before(a.first, b.first, ws_);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (m.is_unit()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << m.to_string();
        } else {
            os << mag.get_str() << '*' << m.to_string();
        }
    }
    return os.str();
}

WeightedPolynomial fermat_polynomial(const WeightSystem& ws) {
    std::vector<WeightedPolynomial::Term> terms;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (ws.degree() % ws.weight(i) != 0)
            throw std::domain_error("no Fermat member: weight " + std::to_string(ws.weight(i)) +
                                    " does not divide degree " + std::to_string(ws.degree()));
        terms.emplace_back(Monomial::variable(i, ws.degree() / ws.weight(i)), Rational(1));
    }
    return WeightedPolynomial::from_terms(ws, std::move(terms));
}

WeightedPolynomial random_homogeneous(const WeightSystem& ws, long k, Rng& rng) {
    std::vector<WeightedPolynomial::Term> terms;
    for (const Monomial& m : monomials_of_degree(ws, k))
        terms.emplace_back(m, Rational(rng.uniform_nonzero(-9, 9)));
    return WeightedPolynomial::from_terms(ws, std::move(terms));
}

}  // namespace wph
