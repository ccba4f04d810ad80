#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wph/jacobian_ring.hpp"

using namespace wph;

namespace {

const WeightSystem kContactWS({1, 1, 2, 5}, 10);

const JacobianRingModel& fermat_model() {
    static const JacobianRingModel model = jacobian_ring(fermat_polynomial(kContactWS));
    return model;
}

}  // namespace

TEST_CASE("jacobian_ideal") {
    const auto partials = jacobian_ideal(fermat_polynomial(kContactWS));
    REQUIRE(partials.size() == 4);
    CHECK(partials[0] == parse_polynomial("10*x1^9", kContactWS));
    CHECK(partials[1] == parse_polynomial("10*x2^9", kContactWS));
    CHECK(partials[2] == parse_polynomial("5*x3^4", kContactWS));
    CHECK(partials[3] == parse_polynomial("2*x4", kContactWS));

    // no quartic in these weights involves x4, so its partial vanishes
    const WeightSystem quartic({1, 1, 2, 5}, 4);
    Rng rng(23);
    const auto quartic_partials = jacobian_ideal(random_homogeneous(quartic, 4, rng));
    CHECK(quartic_partials[3].is_zero());

    const WeightSystem deg2({1, 1, 2, 5}, 2);
    const auto xy = jacobian_ideal(parse_polynomial("x1*x2", deg2));
    CHECK(xy[0] == parse_polynomial("x2", deg2));
    CHECK(xy[1] == parse_polynomial("x1", deg2));
    CHECK(xy[2].is_zero());
    CHECK(xy[3].is_zero());
}

TEST_CASE("is_quasi_smooth") {
    CHECK(is_quasi_smooth(fermat_polynomial(kContactWS)));

    const WeightSystem quartic({1, 1, 2, 5}, 4);
    Rng rng(29);
    CHECK_FALSE(is_quasi_smooth(random_homogeneous(quartic, 4, rng)));

    CHECK_FALSE(is_quasi_smooth(parse_polynomial("x1^10", kContactWS)));
}

TEST_CASE("jacobian_ring: socle and Hilbert data at the Fermat point") {
    const auto& model = fermat_model();
    CHECK(model.socle_bound() == 22);
    CHECK(model.socle_degree() == 22);
    CHECK(model.socle_dimension() == 1);
    CHECK(model.socle_monomial().to_string() == "x1^8*x2^8*x3^3");

    CHECK(model.dim(1) == 2);
    CHECK(model.dim(10) == 28);
    CHECK(model.dim(11) == 28);
    CHECK(model.dim(21) == 2);
    CHECK(model.dim(22) == 1);

    // full Hilbert vector against the monomial-exclusion oracle, then the
    // verified vanishing band above the socle
    for (long k = 0; k <= 22; ++k) CHECK(model.dim(k) == oracles::fermat_standard_count(k));
    CHECK(model.band() >= 44);
    for (long k = 23; k <= model.band(); ++k) CHECK(model.dim(k) == 0);
}

TEST_CASE("jacobian_ring rejects non-quasi-smooth input") {
    CHECK_THROWS_AS(jacobian_ring(parse_polynomial("x1^10", kContactWS)), NotQuasiSmoothError);
}

TEST_CASE("duality_check: examples and properties") {
    const auto& model = fermat_model();

    const DualityReport at1 = duality_check(model, 1);
    CHECK(at1.pairing_matrix.rows() == 2);
    CHECK(at1.pairing_matrix.cols() == 2);
    CHECK(at1.nondegenerate);

    const DualityReport at0 = duality_check(model, 0);
    CHECK(at0.pairing_matrix.rows() == 1);
    CHECK(at0.pairing_matrix.at(0, 0) == 1);
    CHECK(at0.nondegenerate);

    const DualityReport at10 = duality_check(model, 10);
    CHECK(at10.pairing_matrix.rows() == 28);
    CHECK(rank(at10.pairing_matrix) == 28);
    CHECK(at10.nondegenerate);

    // socle normalization
    const DualityReport top = duality_check(model, 22);
    CHECK(top.pairing_matrix.rows() == 1);
    CHECK(top.pairing_matrix.at(0, 0) == 1);

    // Hilbert symmetry and pairing transpose symmetry
    for (long i = 0; i <= 22; ++i) CHECK(model.dim(i) == model.dim(22 - i));
    for (long i : {1L, 10L, 11L}) {
        const auto left = duality_check(model, i);
        const auto right = duality_check(model, 22 - i);
        CHECK(left.pairing_matrix == right.pairing_matrix.transpose());
    }

    CHECK_THROWS_AS(duality_check(model, 23), std::invalid_argument);
}

TEST_CASE("multiplication_matrix: examples") {
    const auto& model = fermat_model();

    const RationalMatrix by_x1 =
        multiplication_matrix(model, parse_polynomial("x1", kContactWS), 10);
    CHECK(by_x1.rows() == 28);
    CHECK(by_x1.cols() == 28);
    CHECK(rank(by_x1) == 26);
    CHECK(kernel_basis(by_x1).size() == 2);

    const RationalMatrix by_one =
        multiplication_matrix(model, parse_polynomial("1", kContactWS), 11);
    CHECK(by_one == RationalMatrix::identity(28));

    const RationalMatrix by_x4 =
        multiplication_matrix(model, parse_polynomial("x4", kContactWS), 10);
    CHECK(by_x4.is_zero());

    CHECK_THROWS_AS(multiplication_matrix(model, parse_polynomial("x1", kContactWS), 9999),
                    std::out_of_range);
}

TEST_CASE("multiplication matrices compose") {
    const auto& model = fermat_model();
    Rng rng(37);
    const WeightedPolynomial g = random_homogeneous(kContactWS, 2, rng);
    const WeightedPolynomial h = random_homogeneous(kContactWS, 3, rng);
    const RationalMatrix direct = multiplication_matrix(model, g * h, 10);
    const RationalMatrix composed = multiplication_matrix(model, g, 13) *
                                    multiplication_matrix(model, h, 10);
    CHECK(direct == composed);
}

TEST_CASE("random_quasi_smooth: Hilbert independence and failure modes") {
    const WeightedPolynomial f = random_quasi_smooth(kContactWS, 1);
    CHECK(is_quasi_smooth(f));
    const JacobianRingModel model = jacobian_ring(f);
    for (long k = 0; k <= 22; ++k) CHECK(model.dim(k) == fermat_model().dim(k));
    CHECK(model.socle_degree() == 22);
    CHECK(model.socle_dimension() == 1);

    // determinism
    CHECK(random_quasi_smooth(kContactWS, 1) == f);

    CHECK_THROWS_AS(random_quasi_smooth(WeightSystem({1, 1, 2, 5}, 4), 11), ExhaustionError);

    const WeightSystem quintic({1, 1, 1, 1}, 5);
    const WeightedPolynomial fq = random_quasi_smooth(quintic, 1);
    const JacobianRingModel mq = jacobian_ring(fq);
    CHECK(mq.dim(quintic.degree() - quintic.sigma()) == 4);  // h^{2,0} of a quintic surface
}

TEST_CASE("quasi-smoothness is equivalent to the verified vanishing band") {
    const auto& model = fermat_model();
    bool vanishes = true;
    for (long k = model.socle_degree() + 1; k <= model.band(); ++k)
        if (model.dim(k) != 0) vanishes = false;
    CHECK(vanishes);
}
