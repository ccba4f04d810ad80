// Acceptance suite: one line per criterion, exact values, wall-clock caps
// enforced in code. Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "wph/hodge.hpp"
#include "wph/search.hpp"

using namespace wph;
using Clock = std::chrono::steady_clock;

namespace {

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<void()>& body) {
        const auto start = Clock::now();
        std::string failure;
        try {
            body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (failure.empty() && budget_seconds > 0 && elapsed > budget_seconds)
            failure = "time budget exceeded (" + std::to_string(elapsed) + "s > " +
                      std::to_string(budget_seconds) + "s)";
        std::ostringstream line;
        line << (failure.empty() ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2)
             << std::setfill('0') << number << ": " << label << " (" << std::fixed
             << std::setprecision(2) << elapsed << " s)";
        if (!failure.empty()) line << " -- " << failure;
        std::cout << line.str() << std::endl;
        if (!failure.empty()) ++failures;
    }
};

void require(bool condition, const std::string& what) {
    if (!condition) throw std::runtime_error(what);
}

const WeightSystem kContactWS({1, 1, 2, 5}, 10);

std::map<int, long> x3_blocks(const std::vector<Monomial>& basis) {
    std::map<int, long> blocks;
    for (const Monomial& m : basis) {
        require(m.k[3] == 0, "basis monomial involves x4");
        blocks[m.k[2]]++;
    }
    return blocks;
}

}  // namespace

int main() {
    Harness harness;

    const WeightedPolynomial f0 = fermat_polynomial(kContactWS);

    harness.criterion(1, "Jacobian ideal of the Fermat member reduces to {x1^9, x2^9, x3^4, x4}",
                      1.0, [&] {
        const GroebnerBasis gb = buchberger(jacobian_ideal(f0), MonomialOrder(kContactWS));
        require(gb.size() == 4, "basis size != 4");
        const std::vector<std::string> expected = {"x1^9", "x2^9", "x3^4", "x4"};
        for (std::size_t i = 0; i < 4; ++i) {
            require(gb.generators()[i].to_string() == expected[i],
                    "generator mismatch: " + gb.generators()[i].to_string());
            require(gb.generators()[i].leading_coefficient() == 1, "generator not monic");
        }
    });

    const JacobianRingModel model = jacobian_ring(f0);

    harness.criterion(2, "Hilbert data: dims (2, 28, 28, 2, 1) and vanishing for 22 < k <= 44",
                      5.0, [&] {
        require(model.dim(1) == 2, "dim R_1 != 2");
        require(model.dim(10) == 28, "dim R_10 != 28");
        require(model.dim(11) == 28, "dim R_11 != 28");
        require(model.dim(21) == 2, "dim R_21 != 2");
        require(model.dim(22) == 1, "dim R_22 != 1");
        require(model.band() >= 44, "verified band too small");
        for (long k = 23; k <= 44; ++k)
            require(model.dim(k) == 0, "dim R_" + std::to_string(k) + " != 0");
    });

    harness.criterion(3, "standard monomials partition by x3-power: R_11 (6,8,8,6), R_10 (5,7,9,7)",
                      5.0, [&] {
        const auto b11 = x3_blocks(model.basis(11));
        require(b11 == std::map<int, long>{{3, 6}, {2, 8}, {1, 8}, {0, 6}},
                "R_11 block sizes are not (6, 8, 8, 6)");
        const auto b10 = x3_blocks(model.basis(10));
        require(b10 == std::map<int, long>{{3, 5}, {2, 7}, {1, 9}, {0, 7}},
                "R_10 block sizes are not (5, 7, 9, 7)");
    });

    harness.criterion(4, "dim S_10 = 49 and dim J_10 = 21 by brute-force enumeration", 5.0, [&] {
        const auto s10 = monomials_of_degree(kContactWS, 10);
        require(static_cast<long>(s10.size()) == 49, "dim S_10 != 49");
        require(oracles::monomial_count_series({1, 1, 2, 5}, 10)[10] == 49,
                "series oracle disagrees on dim S_10");

        // J_10 is spanned by the partials times all monomials of the
        // complementary degrees; its rank is computed two independent ways
        std::map<std::array<int, kNumVars>, std::size_t> column_of;
        for (std::size_t j = 0; j < s10.size(); ++j) column_of[s10[j].k] = j;
        std::vector<std::vector<Rational>> rows;
        for (const WeightedPolynomial& partial : jacobian_ideal(f0)) {
            if (partial.is_zero()) continue;
            const long cofactor_degree = 10 - *partial.homogeneous_degree();
            for (const Monomial& m : monomials_of_degree(kContactWS, cofactor_degree)) {
                std::vector<Rational> row(s10.size(), Rational(0));
                const WeightedPolynomial product = partial.multiplied_by(m, Rational(1));
                for (const auto& [mono, coeff] : product.terms())
                    row[column_of.at(mono.k)] = coeff;
                rows.push_back(std::move(row));
            }
        }
        RationalMatrix span(rows.size(), s10.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < s10.size(); ++j) span.at(i, j) = rows[i][j];
        require(rank(span) == 21, "dim J_10 != 21 (fraction-free)");
        require(oracles::row_echelon_rank(span) == 21, "dim J_10 != 21 (row echelon)");
        require(49 - 21 == model.dim(10), "49 - 21 != dim R_10");
    });

    PeriodDifferentialReport report;
    harness.criterion(5, "period-differential matrix is 56x28 of rank 28 with empty kernel",
                      10.0, [&] {
        report = period_differential(model, PencilMode::Exact);
        require(report.matrix_m.rows() == 56 && report.matrix_m.cols() == 28,
                "matrix shape is not 56x28");
        require(report.rank_m == 28, "rank != 28");
        require(report.kernel_dim == 0, "kernel not empty");
        require(kernel_basis(report.matrix_m).empty(), "kernel basis not empty");
    });

    harness.criterion(6, "pencil certificate: generic 26, min 26, empty drop set (exact mode)",
                      300.0, [&] {
        const PencilRankCertificate cert =
            pencil_min_rank(report.A.value(), report.B.value(), PencilMode::Exact);
        require(cert.generic_rank == 26, "generic rank != 26");
        require(cert.min_rank == 26, "min rank != 26");
        require(cert.drop_points.empty(), "drop set not empty");
        require(cert.certifying, "certificate not in exact mode");
    });

    harness.criterion(7, "span rank of [A|B] is 28 (W x1 + W x2 = H^{1,1})", 5.0, [&] {
        require(rank(hconcat(report.A.value(), report.B.value())) == 28, "span rank != 28");
        require(report.span_rank == 28, "report span rank != 28");
    });

    harness.criterion(8, "non-geodesy verdict: 26 > 14, and W avoids 10 random geodesic tangents",
                      60.0, [&] {
        const DomainGeometry geometry = domain_geometry(2, 28);
        const NonGeodesyCertificate cert = non_geodesy_certificate(report, geometry);
        require(cert.threshold == 14, "threshold != 14");
        require(cert.min_wv_dim == 26, "min dim Wv != 26");
        require(cert.verdict, "verdict is false");
        require(cert.span_full, "span not full");
        Rng rng(8);
        for (int trial = 0; trial < 10; ++trial) {
            const RationalMatrix j = random_orthogonal_complex_structure(28, rng);
            require(!span_contained_in_geodesic_tangent_space(report.matrix_m, j),
                    "W lies in a geodesic tangent space");
        }
    });

    harness.criterion(9, "domain geometry: (2,28) and (4,44) dimension tables", 1.0, [&] {
        const DomainGeometry contact = domain_geometry(2, 28);
        require(contact.dim_domain == 57, "dim D != 57");
        require(contact.dim_horizontal == 56, "horizontal != 56");
        require(contact.is_contact, "not contact");
        require(contact.max_integral_dim == 28, "max integral != 28");
        require(contact.lagrangian_grassmannian_dim == 406, "Lagrangian dim != 406");
        require(contact.complex_structure_space_dim_real == 182, "J-space real dim != 182");
        require(contact.complex_structure_space_dim_complex == 91, "J-space complex dim != 91");
        const DomainGeometry quintic = domain_geometry(4, 44);
        require(quintic.dim_domain == 182, "dim D != 182");
        require(quintic.dim_horizontal == 176, "horizontal != 176");
        require(!quintic.is_contact, "unexpected contact");
        require(quintic.max_integral_dim == 88, "geodesic orbit dim != 88");
    });

    harness.criterion(10, "quintic sanity: Fermat member of S_5(1,1,1,1) has h = (4, 44, 4)",
                      30.0, [&] {
        const WeightSystem quintic({1, 1, 1, 1}, 5);
        const JacobianRingModel mq = jacobian_ring(fermat_polynomial(quintic));
        const HodgeProfile h = hodge_numbers(quintic, mq);
        require(h.h20 == 4 && h.h11_prim == 44 && h.h02 == 4, "h != (4, 44, 4)");
    });

    harness.criterion(11, "negative control: 20 random members of S_4(1,1,2,5) are singular",
                      60.0, [&] {
        const WeightSystem quartic({1, 1, 2, 5}, 4);
        Rng rng(11);
        for (int trial = 0; trial < 20; ++trial) {
            const WeightedPolynomial f = random_homogeneous(quartic, 4, rng);
            require(!is_quasi_smooth(f), "a quartic member tested quasi-smooth");
        }
    });

    harness.criterion(12, "property suite: Hilbert independence, duality, isotropy, Euler, ranks",
                      600.0, [&] {
        // Hilbert-function independence over five random quasi-smooth members
        std::vector<JacobianRingModel> random_models;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const WeightedPolynomial f = random_quasi_smooth(kContactWS, seed);
            random_models.push_back(jacobian_ring(f));
            for (long k = 0; k <= 22; ++k)
                require(random_models.back().dim(k) == model.dim(k),
                        "Hilbert mismatch at seed " + std::to_string(seed) + ", degree " +
                            std::to_string(k));
        }

        // duality non-degeneracy at the paper degrees
        for (long i : {0L, 1L, 10L, 11L, 21L, 22L})
            require(duality_check(model, i).nondegenerate,
                    "pairing degenerate at i = " + std::to_string(i));

        // isotropy of the image of the period differential
        require(report.isotropy_ok && *report.isotropy_ok, "isotropy fails at f0");
        Rng pair_rng(12);
        for (std::size_t idx = 0; idx < 3; ++idx) {
            const JacobianRingModel& rm = random_models[idx];
            const WeightedPolynomial v1(kContactWS, rm.basis(1)[0], Rational(1));
            const WeightedPolynomial v2(kContactWS, rm.basis(1)[1], Rational(1));
            const RationalMatrix a = multiplication_matrix(rm, v1, 10);
            const RationalMatrix b = multiplication_matrix(rm, v2, 10);
            const RationalMatrix gram = duality_gram(rm);
            const RationalMatrix pairing = a.transpose() * gram * b;
            require(pairing == pairing.transpose(), "isotropy fails on a random member");
            for (int t = 0; t < 5; ++t) {
                const WeightedPolynomial phi = random_homogeneous(kContactWS, 10, pair_rng);
                const WeightedPolynomial psi = random_homogeneous(kContactWS, 10, pair_rng);
                require(symplectic_form(rm, phi, psi) == 0, "symplectic form nonzero");
            }
        }

        // Euler relation on 100 random homogeneous polynomials
        Rng euler_rng(100);
        for (int trial = 0; trial < 100; ++trial) {
            const long d = euler_rng.uniform(1, 14);
            const WeightedPolynomial f = random_homogeneous(kContactWS, d, euler_rng);
            WeightedPolynomial acc(kContactWS);
            for (std::size_t i = 0; i < kNumVars; ++i) {
                const WeightedPolynomial xi(kContactWS, Monomial::variable(i), Rational(1));
                acc = acc + xi * f.partial_derivative(i) * Rational(kContactWS.weight(i));
            }
            require(acc == f * Rational(d), "Euler relation fails");
        }

        // fraction-free rank vs the independent row-echelon oracle
        Rng rank_rng(200);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t rows = rank_rng.uniform(1, 30);
            const std::size_t cols = rank_rng.uniform(1, 30);
            const RationalMatrix m = oracles::random_matrix(rows, cols, rank_rng);
            require(rank(m) == oracles::row_echelon_rank(m), "rank oracle disagreement");
        }
    });

    harness.criterion(13, "search over weights <= (2,2,3,6), degrees <= 12 flags the paper family",
                      900.0, [&] {
        const SearchReport result = search({2, 2, 3, 6}, 12, SearchOptions{});
        bool found = false;
        for (const SearchRow& row : result.rows) {
            if (row.weights == std::array<int, kNumVars>{1, 1, 2, 5} && row.degree == 10) {
                found = true;
                require(row.status == "ok", "paper row not analyzed");
                require(row.maximal, "paper row not flagged maximal");
                require(row.rank_m == 28, "paper row rank != 28");
                require(row.hodge && row.hodge->h11_prim == 28, "paper row h11 != 28");
            }
        }
        require(found, "paper row missing from the search report");
    });

    std::cout << (harness.failures == 0 ? "ACCEPTANCE: all criteria passed"
                                        : "ACCEPTANCE: " + std::to_string(harness.failures) +
                                              " criterion(s) failed")
              << std::endl;
    return harness.failures;
}
