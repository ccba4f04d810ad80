#include <algorithm>
#include <stdexcept>

#include "wph/jacobian_ring.hpp"

namespace wph {

std::vector<WeightedPolynomial> jacobian_ideal(const WeightedPolynomial& f) {
    if (!f.is_homogeneous())
        throw std::invalid_argument("jacobian_ideal: f must be homogeneous");
    std::vector<WeightedPolynomial> partials;
    partials.reserve(kNumVars);
    for (std::size_t i = 0; i < kNumVars; ++i) partials.push_back(f.partial_derivative(i));
    return partials;
}

bool is_quasi_smooth(const WeightedPolynomial& f) {
    const MonomialOrder order(f.weight_system());
    return is_zero_dimensional(buchberger(jacobian_ideal(f), order));
}

JacobianRingModel::JacobianRingModel(WeightedPolynomial f, GroebnerBasis gb)
    : f_(std::move(f)), ws_(f_.weight_system()), gb_(std::move(gb)) {
    const long d = ws_.degree();
    const long sigma = ws_.sigma();
    // socle bound (n+2)d - 2*sigma for surfaces (n = 2); the actual socle is
    // measured below rather than assumed
    socle_bound_ = 4 * d - 2 * sigma;

    const auto caps = gb_.pure_power_caps();
    if (!caps) throw NotQuasiSmoothError("Jacobian ideal is not zero-dimensional");
    long max_standard_degree = 0;
    bool unit_ideal = false;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if ((*caps)[i] == 0) unit_ideal = true;
        max_standard_degree += ((*caps)[i] - 1) * ws_.weight(i);
    }
    if (unit_ideal) max_standard_degree = 0;

    band_ = std::max({2 * std::max(socle_bound_, 0L), max_standard_degree, 3 * d - sigma, d});

    bases_.reserve(band_ + 1);
    hilbert_.reserve(band_ + 1);
    index_.resize(band_ + 1);
    for (long k = 0; k <= band_; ++k) {
        bases_.push_back(standard_monomials(gb_, k));
        hilbert_.push_back(static_cast<long>(bases_.back().size()));
        for (std::size_t idx = 0; idx < bases_.back().size(); ++idx)
            index_[k].emplace(bases_.back()[idx].k, idx);
        if (hilbert_.back() > 0) socle_degree_ = k;
    }
    // every standard monomial is bounded by the pure-power caps, so degrees
    // beyond max_standard_degree (hence beyond the band) are provably zero
    if (socle_degree_ >= 0) {
        socle_dim_ = hilbert_[socle_degree_];
        if (socle_dim_ == 1) socle_monomial_ = bases_[socle_degree_].front();
    }
}

const Monomial& JacobianRingModel::socle_monomial() const {
    if (socle_dim_ != 1) throw std::logic_error("socle is not one-dimensional");
    return socle_monomial_;
}

long JacobianRingModel::dim(long k) const {
    if (k < 0 || k > band_) return 0;
    return hilbert_[k];
}

const std::vector<Monomial>& JacobianRingModel::basis(long k) const {
    if (k < 0 || k > band_) throw std::out_of_range("degree outside the cached band");
    return bases_[k];
}

std::vector<Rational> JacobianRingModel::coordinates(const WeightedPolynomial& reduced,
                                                     long k) const {
    std::vector<Rational> coords(dim(k), Rational(0));
    for (const auto& [m, c] : reduced.terms()) {
        const auto it = index_[k].find(m.k);
        if (it == index_[k].end())
            throw std::logic_error("polynomial is not reduced to the degree-" +
                                   std::to_string(k) + " standard basis");
        coords[it->second] = c;
    }
    return coords;
}

Rational JacobianRingModel::socle_coefficient(const WeightedPolynomial& p) const {
    if (socle_dim_ != 1) throw std::logic_error("socle is not one-dimensional");
    const WeightedPolynomial reduced = normal_form(p, gb_);
    for (const auto& [m, c] : reduced.terms())
        if (m == socle_monomial_) return c;
    return Rational(0);
}

JacobianRingModel jacobian_ring(const WeightedPolynomial& f) {
    if (!f.is_homogeneous())
        throw std::invalid_argument("jacobian_ring: f must be homogeneous");
    const MonomialOrder order(f.weight_system());
    GroebnerBasis gb = buchberger(jacobian_ideal(f), order);
    if (!is_zero_dimensional(gb))
        throw NotQuasiSmoothError("f is not quasi-smooth: the partial derivatives have a "
                                  "common zero away from the origin");
    return JacobianRingModel(f, std::move(gb));
}

DualityReport duality_check(const JacobianRingModel& model, long i) {
    const long n = model.socle_degree();
    if (i < 0 || i > n) throw std::invalid_argument("duality_check: degree out of range");
    DualityReport report;
    report.degree = i;
    if (model.socle_dimension() != 1) {
        report.nondegenerate = false;
        return report;
    }
    const auto& left = model.basis(i);
    const auto& right = model.basis(n - i);
    RationalMatrix pairing(left.size(), right.size());
    for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t b = 0; b < right.size(); ++b) {
            pairing.at(a, b) = model.socle_coefficient(
                WeightedPolynomial(model.weight_system(), left[a] * right[b], Rational(1)));
        }
    report.pairing_matrix = pairing;
    report.nondegenerate =
        left.size() == right.size() && rank(pairing) == static_cast<long>(left.size());
    return report;
}

RationalMatrix multiplication_matrix(const JacobianRingModel& model,
                                     const WeightedPolynomial& g, long from_degree) {
    const auto b = g.homogeneous_degree();
    if (!b && !g.is_zero())
        throw std::invalid_argument("multiplication_matrix: g must be homogeneous");
    const long target = from_degree + (b ? *b : 0);
    if (from_degree < 0 || from_degree > model.band() || target > model.band())
        throw std::out_of_range("multiplication_matrix: degree outside the cached band");

    const auto& source = model.basis(from_degree);
    RationalMatrix m(model.dim(target), source.size());
    if (g.is_zero()) return m;
    for (std::size_t j = 0; j < source.size(); ++j) {
        const WeightedPolynomial image = normal_form(
            g.multiplied_by(source[j], Rational(1)), model.groebner());
        const auto coords = model.coordinates(image, target);
        for (std::size_t i = 0; i < coords.size(); ++i) m.at(i, j) = coords[i];
    }
    return m;
}

WeightedPolynomial random_quasi_smooth(const WeightSystem& ws, std::uint64_t seed) {
    constexpr int kMaxAttempts = 64;
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        WeightedPolynomial f = random_homogeneous(ws, ws.degree(), rng);
        if (!f.is_zero() && is_quasi_smooth(f)) return f;
    }
    throw ExhaustionError("no quasi-smooth member found after " + std::to_string(kMaxAttempts) +
                          " attempts; S_d^0 may be empty or thin for this weight system");
}

}  // namespace wph
