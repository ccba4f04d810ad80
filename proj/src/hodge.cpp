#include <algorithm>
#include <stdexcept>

#include "wph/hodge.hpp"

namespace wph {

HodgeProfile hodge_numbers(const WeightSystem& ws, const JacobianRingModel& model) {
    if (model.weight_system() != ws)
        throw std::invalid_argument("hodge_numbers: model built for a different weight system");
    const long d = ws.degree();
    const long sigma = ws.sigma();
    HodgeProfile profile;
    profile.weights = ws.weights();
    profile.degree = ws.degree();
    profile.source_degrees = {d - sigma, 2 * d - sigma, 3 * d - sigma};
    profile.h20 = model.dim(profile.source_degrees[0]);
    profile.h11_prim = model.dim(profile.source_degrees[1]);
    profile.h02 = model.dim(profile.source_degrees[2]);
    return profile;
}

DomainGeometry domain_geometry(long p, long q) {
    if (p < 1 || q < 1) throw std::invalid_argument("domain_geometry: p, q must be positive");
    DomainGeometry g;
    g.p = p;
    g.q = q;
    g.dim_domain = p * (p - 1) / 2 + p * q;
    g.dim_horizontal = p * q;
    g.is_contact = (p == 2);
    if (q % 2 == 0) {
        g.geodesic_orbit_dim = p * (q / 2);
        g.complex_structure_space_dim_real = q * (q - 1) / 2 - (q / 2) * (q / 2);
        g.complex_structure_space_dim_complex = g.complex_structure_space_dim_real / 2;
    }
    if (g.is_contact) {
        g.max_integral_dim = p * q / 2;
        g.max_integral_exact = true;
        const long genus = p * q / 2;
        g.lagrangian_grassmannian_dim = genus * (genus + 1) / 2;
    } else {
        // geodesic orbits realize this dimension; without the contact bound
        // it is only a lower bound for integral elements
        g.max_integral_dim = g.geodesic_orbit_dim;
        g.max_integral_exact = false;
    }
    return g;
}

QuaternionicDomainGeometry quaternionic_domain_geometry(long n) {
    if (n < 1) throw std::invalid_argument("quaternionic_domain_geometry: n must be positive");
    QuaternionicDomainGeometry g;
    g.n = n;
    g.dim_domain = 2 * n + 1;
    g.dim_horizontal = 2 * n;
    g.lagrangian_dim = n * (n + 1) / 2;
    g.geodesic_orbit_dim = n;
    return g;
}

RationalMatrix duality_gram(const JacobianRingModel& model) {
    const long d = model.weight_system().degree();
    const long sigma = model.weight_system().sigma();
    const long middle = 2 * d - sigma;
    if (model.socle_dimension() != 1 || model.socle_degree() != 2 * middle)
        throw std::logic_error("duality_gram: middle slice does not self-pair into the socle");
    return duality_check(model, middle).pairing_matrix;
}

PeriodDifferentialReport period_differential(const JacobianRingModel& model, PencilMode mode,
                                             std::uint64_t seed) {
    const WeightSystem& ws = model.weight_system();
    const long d = ws.degree();
    const long sigma = ws.sigma();
    const long src = d - sigma;
    const long dst = 2 * d - sigma;

    PeriodDifferentialReport report;
    report.h20 = model.dim(src);
    report.h11 = model.dim(dst);
    report.dim_source = model.dim(d);

    // matrix of m: R_d -> Hom(R_{d-sigma}, R_{2d-sigma}), columns indexed by
    // the basis of R_d, row blocks by the basis vectors of R_{d-sigma}
    std::vector<RationalMatrix> blocks;
    if (src >= 0) {
        for (const Monomial& v : model.basis(src)) {
            blocks.push_back(multiplication_matrix(
                model, WeightedPolynomial(ws, v, Rational(1)), d));
        }
    }
    RationalMatrix m(0, report.dim_source);
    for (const auto& block : blocks) m = vconcat(m, block);
    report.matrix_m = m;
    report.rank_m = rank(m);
    report.kernel_dim = report.dim_source - report.rank_m;

    if (report.h20 == 2) {
        report.A = blocks[0];
        report.B = blocks[1];
        report.pencil = pencil_min_rank(*report.A, *report.B, mode, seed);
        report.span_rank = rank(hconcat(*report.A, *report.B));

        // an integral element of the contact structure is at most Lagrangian
        if (report.rank_m > report.h20 * report.h11 / 2)
            throw ConsistencyError("period differential rank exceeds the Lagrangian bound");

        const long middle = 2 * d - sigma;
        if (model.socle_dimension() == 1 && model.socle_degree() == 2 * middle) {
            // omega vanishes on the image iff A^t G B is symmetric
            const RationalMatrix gram = duality_gram(model);
            const RationalMatrix pairing = report.A->transpose() * gram * (*report.B);
            report.isotropy_ok = (pairing == pairing.transpose());
        }
    }
    return report;
}

PeriodDifferentialReport tangent_report_from_span(const RationalMatrix& span, long q,
                                                  PencilMode mode, std::uint64_t seed) {
    if (static_cast<long>(span.rows()) != 2 * q)
        throw std::invalid_argument("tangent_report_from_span: expected 2q rows");
    PeriodDifferentialReport report;
    report.h20 = 2;
    report.h11 = q;
    report.dim_source = static_cast<long>(span.cols());
    report.matrix_m = span;
    report.rank_m = rank(span);
    report.kernel_dim = report.dim_source - report.rank_m;

    RationalMatrix a(q, span.cols()), b(q, span.cols());
    for (long i = 0; i < q; ++i)
        for (std::size_t j = 0; j < span.cols(); ++j) {
            a.at(i, j) = span.at(i, j);
            b.at(i, j) = span.at(q + i, j);
        }
    report.A = a;
    report.B = b;
    report.pencil = pencil_min_rank(a, b, mode, seed);
    report.span_rank = rank(hconcat(a, b));
    return report;
}

Rational symplectic_form(const JacobianRingModel& model, const WeightedPolynomial& phi,
                         const WeightedPolynomial& psi) {
    const WeightSystem& ws = model.weight_system();
    const long d = ws.degree();
    const long src = d - ws.sigma();
    if (model.dim(src) != 2)
        throw std::invalid_argument("symplectic_form: requires h20 = 2");
    const auto dp = phi.homogeneous_degree(), dq = psi.homogeneous_degree();
    if ((dp && *dp != d) || (dq && *dq != d))
        throw std::invalid_argument("symplectic_form: degree mismatch, arguments must lie in R_d");
    const WeightedPolynomial v1(ws, model.basis(src)[0], Rational(1));
    const WeightedPolynomial v2(ws, model.basis(src)[1], Rational(1));
    return model.socle_coefficient(phi * v1 * (psi * v2)) -
           model.socle_coefficient(psi * v1 * (phi * v2));
}

Rational symplectic_form_hom(const JacobianRingModel& model, const RationalMatrix& X,
                             const RationalMatrix& Y) {
    const RationalMatrix gram = duality_gram(model);
    if (X.rows() != gram.rows() || Y.rows() != gram.rows() || X.cols() != 2 || Y.cols() != 2)
        throw std::invalid_argument("symplectic_form_hom: expected h11 x 2 tangent vectors");
    auto pair_through = [&](const std::vector<Rational>& u, const std::vector<Rational>& w) {
        Rational acc(0);
        const auto gu = gram.apply(w);
        for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * gu[i];
        return acc;
    };
    return pair_through(X.column(0), Y.column(1)) - pair_through(Y.column(0), X.column(1));
}

namespace {

void check_complex_structure(const RationalMatrix& J) {
    if (J.rows() != J.cols()) throw std::invalid_argument("J must be square");
    const RationalMatrix product = J * J;
    const RationalMatrix orth = J.transpose() * J;
    const RationalMatrix id = RationalMatrix::identity(J.rows());
    if (product != -id) throw std::invalid_argument("J^2 != -identity");
    if (orth != id) throw std::invalid_argument("J is not orthogonal");
}

}  // namespace

std::vector<RationalMatrix> geodesic_tangent_space(const RationalMatrix& J) {
    check_complex_structure(J);
    const std::size_t q = J.rows();
    // solutions of J X = X ihat are exactly the pairs (u, Ju)
    std::vector<RationalMatrix> basis;
    basis.reserve(q);
    for (std::size_t k = 0; k < q; ++k) {
        RationalMatrix x(q, 2);
        x.at(k, 0) = 1;
        for (std::size_t i = 0; i < q; ++i) x.at(i, 1) = J.at(i, k);
        basis.push_back(std::move(x));
    }
    return basis;
}

bool span_contained_in_geodesic_tangent_space(const RationalMatrix& span,
                                              const RationalMatrix& J) {
    check_complex_structure(J);
    const std::size_t q = J.rows();
    if (span.rows() != 2 * q)
        throw std::invalid_argument("span rows must be 2q (stacked q x 2 tangent vectors)");
    for (std::size_t col = 0; col < span.cols(); ++col) {
        // X = [u | w] must satisfy Ju = w and Jw = -u
        std::vector<Rational> u(q), w(q);
        for (std::size_t i = 0; i < q; ++i) {
            u[i] = span.at(i, col);
            w[i] = span.at(q + i, col);
        }
        const auto ju = J.apply(u);
        const auto jw = J.apply(w);
        for (std::size_t i = 0; i < q; ++i)
            if (ju[i] != w[i] || jw[i] != -u[i]) return false;
    }
    return true;
}

RationalMatrix random_orthogonal_complex_structure(long q, Rng& rng) {
    if (q < 2 || q % 2 != 0)
        throw std::invalid_argument("random_orthogonal_complex_structure: q must be even");
    RationalMatrix skew(q, q);
    for (long i = 0; i < q; ++i)
        for (long j = i + 1; j < q; ++j) {
            const Rational v(rng.uniform(-3, 3));
            skew.at(i, j) = v;
            skew.at(j, i) = -v;
        }
    const RationalMatrix id = RationalMatrix::identity(q);
    RationalMatrix i_plus(q, q), i_minus(q, q);
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < q; ++j) {
            i_plus.at(i, j) = id.at(i, j) + skew.at(i, j);
            i_minus.at(i, j) = id.at(i, j) - skew.at(i, j);
        }
    // I + S is invertible for every rational skew S
    const RationalMatrix cayley = i_minus * *inverse(i_plus);

    RationalMatrix j0(q, q);
    for (long i = 0; i < q / 2; ++i) {
        j0.at(i, q / 2 + i) = -1;
        j0.at(q / 2 + i, i) = 1;
    }
    return cayley * j0 * cayley.transpose();
}

NonGeodesyCertificate non_geodesy_certificate(const PeriodDifferentialReport& report,
                                              const DomainGeometry& geometry) {
    if (!geometry.is_contact)
        throw std::invalid_argument("non_geodesy_certificate: geometry is not contact");
    if (!report.pencil)
        throw std::invalid_argument("non_geodesy_certificate: report carries no pencil data");
    NonGeodesyCertificate cert;
    cert.threshold = geometry.q / 2;
    cert.min_wv_dim = report.pencil->min_rank;
    cert.verdict = cert.min_wv_dim > cert.threshold;
    cert.span_full = report.span_rank == geometry.q;
    cert.mode = report.pencil->mode;
    return cert;
}

}  // namespace wph
