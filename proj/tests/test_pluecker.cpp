#include "higgledy/pluecker.hpp"

#include <gtest/gtest.h>

#include <random>

#include "higgledy/constructions.hpp"

using namespace higgledy;

namespace {

Subspace random_rank(const Space& sp, std::size_t rank, std::mt19937_64& rng) {
    const Field& F = sp.field;
    while (true) {
        Mat m(rank, sp.ncoords());
        for (auto& x : m.a) x = F.element(rng() % F.size());
        if (rank_of(F, m) == rank) return Subspace::from_rows(F, std::move(m));
    }
}

}  // namespace

TEST(Pluecker, PairIndexIsRowMajorUpperTriangle) {
    EXPECT_EQ(pair_count(4), 6u);
    EXPECT_EQ(pair_index(4, 0, 1), 0u);
    EXPECT_EQ(pair_index(4, 0, 2), 1u);
    EXPECT_EQ(pair_index(4, 0, 3), 2u);
    EXPECT_EQ(pair_index(4, 1, 2), 3u);
    EXPECT_EQ(pair_index(4, 1, 3), 4u);
    EXPECT_EQ(pair_index(4, 2, 3), 5u);
}

// Frozen coordinates of a known tangent line: at t = 1 in PG(3,7) the
// entries (j - i) t^{i+j-1} read (1,2,3,1,2,1).
TEST(Pluecker, MomentTangentCoordinates) {
    const Space sp(Field::prime(7), 3);
    const auto pl = line_pluecker(sp.field, moment_tangent(sp, sp.field.one()));
    const std::uint32_t want[] = {1, 2, 3, 1, 2, 1};
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(pl.coords[i].v, want[i]);
}

// Independent formula check across every parameter of every field up to
// GF(9) in dimensions 2..5, plus GF(11) in dimension 3.
TEST(Pluecker, TangentCoordinatesMatchClosedForm) {
    for (const char* qs : {"2", "3", "4", "5", "7", "8", "9", "11"}) {
        const Field F = Field::parse(qs);
        for (int d = 2; d <= 5; ++d) {
            if (F.size() == 11 && d != 3) continue;
            const Space sp(F, d);
            const std::size_t n = sp.ncoords();
            for (std::uint64_t ti = 0; ti < F.size(); ++ti) {
                const Scalar t = F.element(ti);
                const auto pl = line_pluecker(F, moment_tangent(sp, t));
                PlueckerVector direct{n, Vec(n * (n - 1) / 2, F.zero())};
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        direct.coords[pair_index(n, i, j)] =
                            F.mul(F.from_int(static_cast<std::int64_t>(j - i)),
                                  F.pow(t, static_cast<std::int64_t>(i + j) - 1));
                normalize(F, direct.coords);
                ASSERT_EQ(pl, direct) << "q = " << qs << " d = " << d << " t = " << ti;
            }
        }
    }
}

// The coordinate pairing vanishes exactly on incident pairs; the geometric
// meet is the independent oracle.  Exhaustive in PG(3,2) and PG(3,3), where
// codim-2 subspaces are again lines.
TEST(Pluecker, PairingVanishesIffCodim2MeetsLine) {
    for (std::uint64_t q : {2, 3}) {
        const Space sp(Field::prime(q), 3);
        const Field& F = sp.field;
        const auto lines = all_subspaces(sp, 1, Budget{});
        for (const auto& h : lines) {
            const auto hp = codim2_pluecker(F, h);
            for (const auto& line : lines) {
                const bool incident = meets(F, h, line);
                const bool pairs_to_zero = pluecker_pairing(F, hp, line_pluecker(F, line)).v == 0;
                ASSERT_EQ(incident, pairs_to_zero);
            }
        }
    }
}

TEST(Pluecker, PairingMatchesMeetsOnRandomPairsInPg45) {
    const Space sp(Field::prime(5), 4);
    const Field& F = sp.field;
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 1000; ++trial) {
        const Subspace h = random_rank(sp, 3, rng);  // codim 2
        const Subspace line = random_rank(sp, 2, rng);
        const bool incident = meets(F, h, line);
        const bool pairs_to_zero =
            pluecker_pairing(F, codim2_pluecker(F, h), line_pluecker(F, line)).v == 0;
        ASSERT_EQ(incident, pairs_to_zero);
    }
}

TEST(Pluecker, QuadraticRelationsSeparateDecomposables) {
    const Field F = Field::prime(2);
    const Space sp(F, 3);
    for (const auto& line : all_subspaces(sp, 1, Budget{}))
        EXPECT_TRUE(satisfies_pluecker_relations(F, line_pluecker(F, line)));
    // P_01 = P_23 = 1, rest 0: the three-term relation evaluates to 1.
    PlueckerVector bad{4, Vec(6, F.zero())};
    bad.coords[pair_index(4, 0, 1)] = F.one();
    bad.coords[pair_index(4, 2, 3)] = F.one();
    EXPECT_FALSE(satisfies_pluecker_relations(F, bad));
    EXPECT_FALSE(pluecker_line(F, bad).has_value());
}

TEST(Pluecker, LineRoundTripExhaustiveSmall) {
    const Field F = Field::prime(2);
    const Space sp(F, 3);
    for (const auto& line : all_subspaces(sp, 1, Budget{})) {
        const auto back = pluecker_line(F, line_pluecker(F, line));
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, line);
    }
}

TEST(Pluecker, LineRoundTripRandomLarger) {
    const Space sp(Field::prime(5), 4);
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 50; ++trial) {
        const Subspace line = random_rank(sp, 2, rng);
        const auto pl = line_pluecker(sp.field, line);
        EXPECT_TRUE(satisfies_pluecker_relations(sp.field, pl));
        const auto back = pluecker_line(sp.field, pl);
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, line);
    }
}

TEST(Pluecker, Codim2RoundTrip) {
    const Space sp(Field::prime(3), 3);
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        const Subspace h = random_rank(sp, 2, rng);
        const auto back = pluecker_codim2(sp.field, codim2_pluecker(sp.field, h));
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, h);
    }
}

TEST(Pluecker, ScalingInvariance) {
    const Field F = Field::prime(7);
    const Space sp(F, 3);
    std::mt19937_64 rng(77);
    const Subspace line = random_rank(sp, 2, rng);
    Mat scaled = line.mat();
    for (auto& x : scaled.a) x = F.mul(x, F.element(3));
    EXPECT_EQ(line_pluecker(F, Subspace::from_rows(F, scaled)), line_pluecker(F, line));
}

TEST(Pluecker, GrassmannianInvariants) {
    EXPECT_EQ(grassmann_dimension(2, 2), 4u);
    EXPECT_EQ(grassmann_degree(2, 2), BigInt(2));
    EXPECT_EQ(grassmann_degree(2, 3), BigInt(5));
    EXPECT_EQ(grassmann_degree(3, 3), BigInt(42));
    EXPECT_EQ(grassmann_degree(1, 4), BigInt(1));  // projective space itself
    // The factorial formula divides exactly: positive integer everywhere.
    for (unsigned m = 1; m <= 8; ++m)
        for (unsigned n = 1; n <= 8; ++n) EXPECT_GT(grassmann_degree(m, n), BigInt(0));
}
