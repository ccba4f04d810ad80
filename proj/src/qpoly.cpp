#include <stdexcept>

#include "wph/qpoly.hpp"

namespace wph {

QPoly::QPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

QPoly QPoly::t() { return QPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& g) const {
    std::vector<Rational> r(std::max(c_.size(), g.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r[i] += g.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& g) const { return *this + (-g); }

QPoly QPoly::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v = -v;
    QPoly p;
    p.c_ = std::move(r);
    return p;
}

QPoly QPoly::operator*(const QPoly& g) const {
    if (is_zero() || g.is_zero()) return QPoly();
    std::vector<Rational> r(c_.size() + g.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) r[i + j] += c_[i] * g.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rational& s) const {
    if (s == 0) return QPoly();
    std::vector<Rational> r = c_;
    for (auto& v : r) v *= s;
    QPoly p;
    p.c_ = std::move(r);
    return p;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& g) const {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    QPoly rem = *this;
    if (degree() < g.degree()) return {QPoly(), rem};
    std::vector<Rational> q(degree() - g.degree() + 1, Rational(0));
    const Rational& lead = g.leading_coefficient();
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        const long shift = rem.degree() - g.degree();
        const Rational factor = rem.leading_coefficient() / lead;
        q[shift] = factor;
        std::vector<Rational> next = rem.c_;
        for (std::size_t i = 0; i < g.c_.size(); ++i) next[i + shift] -= factor * g.c_[i];
        rem = QPoly(std::move(next));
    }
    return {QPoly(std::move(q)), rem};
}

QPoly QPoly::exact_div(const QPoly& g) const {
    auto [q, r] = divmod(g);
    if (!r.is_zero()) throw std::logic_error("exact_div with nonzero remainder");
    return q;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_coefficient());
}

QPoly QPoly::primitive() const {
    if (is_zero()) return *this;
    Integer den(1);
    for (const Rational& c : c_) den = lcm(den, c.get_den());
    Integer content(0);
    for (const Rational& c : c_) content = gcd(content, Integer(c.get_num() * (den / c.get_den())));
    Rational scale = make_rational(den, content);
    if (leading_coefficient() < 0) scale = -scale;
    return *this * scale;
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly f = a, g = b;
    while (!g.is_zero()) {
        QPoly r = f % g;
        f = g;
        g = r.is_zero() ? r : r.monic();  // monic remainders control growth
    }
    return f.is_zero() ? f : f.monic();
}

std::array<QPoly, 3> xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0(Rational(1)), s1, t0, t1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        QPoly s = s0 - q * s1;
        QPoly t = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = Rational(1) / r0.leading_coefficient();
    return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
    std::vector<std::pair<QPoly, int>> out;
    if (f.degree() < 1) return out;
    // Yun's algorithm over a field of characteristic zero
    QPoly a = f.monic();
    QPoly da = a.derivative();
    QPoly g = gcd(a, da);
    QPoly b = a.exact_div(g);
    QPoly c = da.exact_div(g);
    QPoly d = c - b.derivative();
    int multiplicity = 1;
    while (b.degree() > 0) {
        QPoly factor = gcd(b, d);
        if (factor.degree() > 0) out.emplace_back(factor, multiplicity);
        b = b.exact_div(factor);
        c = d.exact_div(factor);
        d = c - b.derivative();
        ++multiplicity;
    }
    return out;
}

}  // namespace wph
