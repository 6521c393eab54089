#include "higgledy/projective_space.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace higgledy;

namespace {

Subspace random_subspace(const Space& sp, std::size_t rank, std::mt19937_64& rng) {
    const Field& F = sp.field;
    while (true) {
        Mat m(rank, sp.ncoords());
        for (auto& x : m.a) x = F.element(rng() % F.size());
        if (rank_of(F, m) == rank) return Subspace::from_rows(F, std::move(m));
    }
}

}  // namespace

TEST(ProjectiveSpace, CountsMatchGaussianBinomials) {
    // The streaming enumerator and the closed-form count are independent
    // code paths; they must agree.
    const struct {
        int dim;
        std::uint64_t q;
        int proj_dim;
        std::uint64_t expect;
    } cases[] = {
        {2, 2, 0, 7},   {2, 2, 1, 7},    {3, 2, 0, 15},  {3, 2, 1, 35},  {3, 2, 2, 15},
        {3, 3, 1, 130}, {2, 5, 1, 31},   {3, 4, 1, 357}, {3, 5, 1, 806}, {3, 7, 1, 2850},
        {3, 11, 1, 16226},
    };
    for (const auto& c : cases) {
        const Space sp(Field::parse(std::to_string(c.q)), c.dim);
        std::uint64_t n = 0;
        for_each_subspace(sp, c.proj_dim, Budget{}, [&](const Subspace&) {
            ++n;
            return true;
        });
        EXPECT_EQ(n, c.expect) << "PG(" << c.dim << "," << c.q << ") proj dim " << c.proj_dim;
        EXPECT_EQ(gaussian_binomial(static_cast<unsigned>(c.dim) + 1,
                                    static_cast<unsigned>(c.proj_dim) + 1, c.q),
                  BigInt(c.expect));
    }
}

TEST(ProjectiveSpace, EnumerationIsCanonicalAndDuplicateFree) {
    const Space sp(Field::prime(3), 3);
    std::set<Subspace> seen;
    for_each_subspace(sp, 1, Budget{}, [&](const Subspace& s) {
        EXPECT_EQ(s.rank(), 2u);
        EXPECT_TRUE(seen.insert(s).second);
        return true;
    });
    EXPECT_EQ(seen.size(), 130u);
}

TEST(ProjectiveSpace, CanonicalFormIndependentOfBasis) {
    const Field F = Field::prime(5);
    const Space sp(F, 3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Subspace s = random_subspace(sp, 2, rng);
        // Re-present by random invertible combinations of the two rows.
        while (true) {
            const Scalar a = F.element(rng() % 5), b = F.element(rng() % 5);
            const Scalar c = F.element(rng() % 5), d = F.element(rng() % 5);
            if (F.sub(F.mul(a, d), F.mul(b, c)).v == 0) continue;
            Vec r0(4), r1(4);
            for (std::size_t j = 0; j < 4; ++j) {
                r0[j] = F.add(F.mul(a, s.row(0)[j]), F.mul(b, s.row(1)[j]));
                r1[j] = F.add(F.mul(c, s.row(0)[j]), F.mul(d, s.row(1)[j]));
            }
            EXPECT_EQ(Subspace::from_rows(F, {r0, r1}), s);
            break;
        }
    }
}

TEST(ProjectiveSpace, SpanMeetDimensionFormula) {
    const Space sp(Field::prime(3), 3);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Subspace u = random_subspace(sp, 1 + rng() % 3, rng);
        const Subspace w = random_subspace(sp, 1 + rng() % 3, rng);
        const Subspace join = span(sp.field, {u, w});
        const Subspace inter = meet(sp.field, u, w);
        EXPECT_EQ(u.rank() + w.rank(), join.rank() + inter.rank());
        EXPECT_EQ(meets(sp.field, u, w), !inter.is_empty());
        // Every meet row lies in both, via rank stability.
        for (std::size_t i = 0; i < inter.rank(); ++i) {
            EXPECT_EQ(rank_of(sp.field, stacked(u.mat(), Mat::from_rows({inter.row(i)}))), u.rank());
            EXPECT_EQ(rank_of(sp.field, stacked(w.mat(), Mat::from_rows({inter.row(i)}))), w.rank());
        }
    }
}

TEST(ProjectiveSpace, SpanOfNothingIsEmpty) {
    const Field F = Field::prime(2);
    Mat zero(2, 3);
    EXPECT_TRUE(span(F, {Subspace::empty(3), Subspace::empty(3)}).is_empty());
    EXPECT_THROW(Subspace::from_rows(F, zero), std::invalid_argument);
}

TEST(ProjectiveSpace, DualIsAnInvolutionAndSwapsSpanMeet) {
    const Space sp(Field::prime(3), 3);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Subspace u = random_subspace(sp, 1 + rng() % 3, rng);
        const Subspace w = random_subspace(sp, 1 + rng() % 3, rng);
        EXPECT_EQ(dual(sp.field, dual(sp.field, u)), u);
        EXPECT_EQ(dual(sp.field, meet(sp.field, u, w)),
                  span(sp.field, {dual(sp.field, u), dual(sp.field, w)}));
    }
}

TEST(ProjectiveSpace, DualityExhaustiveInPg32) {
    // meet(u,w) = dual(span(dual u, dual w)) over every pair of proper
    // nonempty subspaces of PG(3,2): 15 + 35 + 15 = 65 of them.
    const Space sp(Field::prime(2), 3);
    const Field& F = sp.field;
    std::vector<Subspace> all;
    for (int pd = 0; pd <= 2; ++pd)
        for (const auto& s : all_subspaces(sp, pd, Budget{})) all.push_back(s);
    ASSERT_EQ(all.size(), 65u);
    for (const auto& u : all) {
        EXPECT_EQ(dual(F, dual(F, u)), u);
        for (const auto& w : all)
            EXPECT_EQ(meet(F, u, w), dual(F, span(F, {dual(F, u), dual(F, w)})));
    }
}

TEST(ProjectiveSpace, PointsOnLine) {
    const Space sp(Field::prime(3), 2);
    const Field& F = sp.field;
    const Subspace line = Subspace::from_rows(F, {{F.one(), F.zero(), F.zero()},
                                                  {F.zero(), F.one(), F.zero()}});
    const auto pts = points_on(F, line);
    EXPECT_EQ(pts.size(), 4u);  // q + 1
    std::set<Vec> distinct(pts.begin(), pts.end());
    EXPECT_EQ(distinct.size(), 4u);
    for (const auto& p : pts) {
        EXPECT_EQ(p[2].v, 0u);
        std::size_t lead = 0;
        while (p[lead].v == 0) ++lead;
        EXPECT_EQ(p[lead].v, 1u);
    }
}

TEST(ProjectiveSpace, HyperplaneEnumeration) {
    const Space sp(Field::prime(3), 3);
    std::set<Vec> seen;
    for_each_hyperplane(sp, [&](const Vec& h) {
        std::size_t lead = 0;
        while (lead < h.size() && h[lead].v == 0) ++lead;
        EXPECT_LT(lead, h.size());
        EXPECT_EQ(h[lead].v, 1u);
        EXPECT_TRUE(seen.insert(h).second);
        const Subspace hs = hyperplane_subspace(sp.field, h);
        EXPECT_EQ(hs.rank(), 3u);
        EXPECT_EQ(hyperplane_dual(sp.field, hs), h);
        return true;
    });
    EXPECT_EQ(seen.size(), 40u);  // (3^4 - 1) / (3 - 1)
}

TEST(ProjectiveSpace, FirstEnumeratedLineIsTheCoordinateLine) {
    const Space sp(Field::prime(2), 3);
    const Field& F = sp.field;
    const auto lines = all_subspaces(sp, 1, Budget{});
    EXPECT_EQ(lines.front(), Subspace::from_rows(F, {{F.one(), F.zero(), F.zero(), F.zero()},
                                                     {F.zero(), F.one(), F.zero(), F.zero()}}));
}

TEST(ProjectiveSpace, BudgetRefusalBeforeEnumeration) {
    const Space sp(Field::prime(3), 3);
    Budget tiny;
    tiny.max_subspaces = 10;
    std::uint64_t visited = 0;
    EXPECT_THROW(for_each_subspace(sp, 1, tiny,
                                   [&](const Subspace&) {
                                       ++visited;
                                       return true;
                                   }),
                 BudgetError);
    EXPECT_EQ(visited, 0u);  // refusal happens up front, not mid-stream
}

TEST(ProjectiveSpace, EarlyStopIsHonored) {
    const Space sp(Field::prime(3), 3);
    std::uint64_t visited = 0;
    for_each_subspace(sp, 1, Budget{}, [&](const Subspace&) {
        ++visited;
        return visited < 7;
    });
    EXPECT_EQ(visited, 7u);
}

TEST(ProjectiveSpace, GaussianBinomialEdgeCases) {
    EXPECT_EQ(gaussian_binomial(4, 0, 3), BigInt(1));
    EXPECT_EQ(gaussian_binomial(4, 4, 3), BigInt(1));
    EXPECT_EQ(gaussian_binomial(4, 5, 3), BigInt(0));
    EXPECT_EQ(gaussian_binomial(4, 2, 4), BigInt(357));
}
