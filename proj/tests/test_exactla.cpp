#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wph/matrix.hpp"
#include "wph/pencil.hpp"

using namespace wph;

namespace {

RationalMatrix diag(const std::vector<long>& entries) {
    RationalMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

const PencilDropPoint* find_drop(const PencilRankCertificate& cert, const std::string& form) {
    for (const auto& d : cert.drop_points)
        if (d.form == form) return &d;
    return nullptr;
}

}  // namespace

TEST_CASE("rank: basic cases") {
    CHECK(rank(RationalMatrix(4, 6)) == 0);
    CHECK(rank(RationalMatrix::identity(5)) == 5);

    Rng rng(2);
    RationalMatrix m = oracles::random_matrix(5, 5, rng);
    for (std::size_t j = 0; j < 5; ++j) m.at(4, j) = m.at(2, j);  // duplicate row
    const long r = rank(m);
    CHECK(r <= 4);
    CHECK(r == oracles::row_echelon_rank(m));
}

TEST_CASE("rank agrees with the independent row-echelon oracle") {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = rng.uniform(1, 12);
        const std::size_t cols = rng.uniform(1, 12);
        RationalMatrix m = oracles::random_matrix(rows, cols, rng, -5, 5);
        if (trial % 3 == 0) {
            // rational entries as well
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m.at(i, j) /= Rational(rng.uniform(1, 7));
        }
        const long r = rank(m);
        CHECK(r == oracles::row_echelon_rank(m));
        CHECK(r == rank(m.transpose()));
    }
}

TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(RationalMatrix::identity(4)).empty());

    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = rng.uniform(1, 10);
        const std::size_t cols = rng.uniform(1, 10);
        const RationalMatrix m = oracles::random_matrix(rows, cols, rng, -4, 4);
        const auto kernel = kernel_basis(m);
        CHECK(static_cast<long>(kernel.size()) == static_cast<long>(cols) - rank(m));
        for (const auto& v : kernel) {
            const auto image = m.apply(v);
            for (const auto& entry : image) CHECK(entry == 0);
        }
    }
}

TEST_CASE("inverse") {
    Rng rng(41);
    RationalMatrix m = oracles::random_matrix(6, 6, rng);
    while (rank(m) < 6) m = oracles::random_matrix(6, 6, rng);
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == RationalMatrix::identity(6));
    CHECK_FALSE(inverse(RationalMatrix(3, 3)).has_value());
}

TEST_CASE("pencil: equal identities drop only on a + b") {
    const RationalMatrix id = RationalMatrix::identity(4);
    const auto cert = pencil_min_rank(id, id, PencilMode::Exact);
    CHECK(cert.generic_rank == 4);
    CHECK(cert.min_rank == 0);
    CHECK(cert.certifying);
    REQUIRE(cert.drop_points.size() == 1);
    CHECK(cert.drop_points[0].form == "a + b");
    CHECK(cert.drop_points[0].rank == 0);
}

TEST_CASE("pencil: complementary diagonal projectors drop at both chart points") {
    const auto cert = pencil_min_rank(diag({1, 0}), diag({0, 1}), PencilMode::Exact);
    CHECK(cert.generic_rank == 2);
    CHECK(cert.min_rank == 1);
    REQUIRE(cert.drop_points.size() == 2);
    const auto* at_zero = find_drop(cert, "b");
    const auto* at_infinity = find_drop(cert, "a");
    REQUIRE(at_zero != nullptr);
    REQUIRE(at_infinity != nullptr);
    CHECK(at_zero->rank == 1);
    CHECK(at_infinity->rank == 1);
    CHECK(at_infinity->at_infinity);
}

TEST_CASE("pencil: vanishing second matrix drops at infinity only") {
    Rng rng(3);
    RationalMatrix a = oracles::random_matrix(3, 3, rng);
    while (rank(a) < 3) a = oracles::random_matrix(3, 3, rng);
    const auto cert = pencil_min_rank(a, RationalMatrix(3, 3), PencilMode::Exact);
    CHECK(cert.generic_rank == 3);
    CHECK(cert.min_rank == 0);
    REQUIRE(cert.drop_points.size() == 1);
    CHECK(cert.drop_points[0].at_infinity);
    CHECK(cert.drop_points[0].rank == 0);
}

TEST_CASE("pencil: three rational drop points with distinct ranks") {
    // a*diag(1,1,1,0) + b*diag(0,1,1,1) = diag(a, a+b, a+b, b)
    const auto cert = pencil_min_rank(diag({1, 1, 1, 0}), diag({0, 1, 1, 1}), PencilMode::Exact);
    CHECK(cert.generic_rank == 4);
    CHECK(cert.min_rank == 2);
    REQUIRE(cert.drop_points.size() == 3);
    CHECK(find_drop(cert, "b") != nullptr);
    CHECK(find_drop(cert, "a") != nullptr);
    CHECK(find_drop(cert, "a + b") != nullptr);
    CHECK(find_drop(cert, "b")->rank == 3);
    CHECK(find_drop(cert, "a")->rank == 3);
    CHECK(find_drop(cert, "a + b")->rank == 2);

    // certificate soundness: seeded points avoiding the drop forms attain
    // the generic rank, and the chart points attain the recorded values
    Rng rng(77);
    const RationalMatrix A = diag({1, 1, 1, 0}), B = diag({0, 1, 1, 1});
    int checked = 0;
    while (checked < 50) {
        const Rational av(rng.uniform(-20, 20)), bv(rng.uniform(-20, 20));
        if ((av == 0 && bv == 0) || av == 0 || bv == 0 || av + bv == 0) continue;
        RationalMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m.at(i, j) = av * A.at(i, j) + bv * B.at(i, j);
        CHECK(rank(m) == cert.generic_rank);
        ++checked;
    }
}

TEST_CASE("pencil: rank drop at a complex pair is found through the extension") {
    // A + tB = [[1, -t], [t, 1]] has determinant 1 + t^2
    RationalMatrix b(2, 2);
    b.at(0, 1) = -1;
    b.at(1, 0) = 1;
    const auto cert = pencil_min_rank(RationalMatrix::identity(2), b, PencilMode::Exact);
    CHECK(cert.generic_rank == 2);
    CHECK(cert.min_rank == 1);
    REQUIRE(cert.drop_points.size() == 1);
    CHECK(cert.drop_points[0].form == "a^2 + b^2");
    CHECK(cert.drop_points[0].rank == 1);
}

TEST_CASE("pencil: dynamic evaluation splits coprime root clusters") {
    // a*diag(0,-1,1) + b*diag(1,1,0) = diag(b, b-a, a): minor a*b*(b-a)
    const auto cert = pencil_min_rank(diag({0, -1, 1}), diag({1, 1, 0}), PencilMode::Exact);
    CHECK(cert.generic_rank == 3);
    CHECK(cert.min_rank == 2);
    CHECK(cert.drop_points.size() == 3);
    CHECK(find_drop(cert, "b") != nullptr);      // t = 0, i.e. (1:0)
    CHECK(find_drop(cert, "a") != nullptr);      // (0:1)
    CHECK(find_drop(cert, "a - b") != nullptr);  // t = 1
    for (const auto& d : cert.drop_points) CHECK(d.rank == 2);
}

TEST_CASE("pencil: sampled mode is a non-certifying lower-bound check") {
    const RationalMatrix A = diag({1, 1, 1, 0}), B = diag({0, 1, 1, 1});
    const auto exact = pencil_min_rank(A, B, PencilMode::Exact);
    const auto sampled = pencil_min_rank(A, B, PencilMode::Sampled, 7);
    CHECK_FALSE(sampled.certifying);
    CHECK(sampled.seed == 7);
    CHECK(sampled.min_rank >= exact.min_rank);
    CHECK(sampled.generic_rank == exact.generic_rank);
    // the chart points are always sampled, so both rational chart drops show
    CHECK(sampled.min_rank <= 3);

    // sampled mode misses drops at non-real points
    RationalMatrix rot(2, 2);
    rot.at(0, 1) = -1;
    rot.at(1, 0) = 1;
    const auto sampled_rot =
        pencil_min_rank(RationalMatrix::identity(2), rot, PencilMode::Sampled, 1);
    CHECK(sampled_rot.min_rank == 2);  // exact mode proves 1
}

TEST_CASE("pencil: shape mismatch is rejected") {
    CHECK_THROWS_AS(pencil_min_rank(RationalMatrix(2, 3), RationalMatrix(3, 2),
                                    PencilMode::Exact),
                    std::invalid_argument);
}
