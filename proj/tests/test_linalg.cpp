#include "higgledy/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace higgledy;

namespace {

Mat random_mat(const Field& F, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Mat m(rows, cols);
    for (auto& x : m.a) x = F.element(rng() % F.size());
    return m;
}

bool rows_orthogonal(const Field& F, const Mat& a, const Mat& b) {
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.rows; ++j)
            if (dot(F, a.row(i), b.row(j)).v != 0) return false;
    return true;
}

}  // namespace

TEST(Linalg, RrefKnownMatrix) {
    const Field F = Field::prime(5);
    Mat m = Mat::from_rows({{F.element(1), F.element(2), F.element(3)},
                            {F.element(2), F.element(0), F.element(1)},
                            {F.element(0), F.element(1), F.element(4)}});
    const std::size_t rank = rref_in_place(F, m);
    EXPECT_EQ(rank, 3u);
    // Full-rank square RREF is the identity.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m.at(i, j).v, i == j ? 1u : 0u);
}

TEST(Linalg, RrefDropsDependentRows) {
    const Field F = Field::prime(3);
    Mat m = Mat::from_rows({{F.element(1), F.element(2), F.element(0)},
                            {F.element(2), F.element(1), F.element(0)},  // = 2 * row 0
                            {F.element(0), F.element(0), F.element(1)}});
    EXPECT_EQ(rref_in_place(F, m), 2u);
    EXPECT_EQ(m.rows, 2u);
    EXPECT_EQ(pivot_columns(m), (std::vector<std::size_t>{0, 2}));
}

TEST(Linalg, RankNullityAndKernelOrthogonality) {
    std::mt19937_64 rng(7);
    for (std::uint64_t q : {2, 3, 5}) {
        const Field F = Field::prime(q);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
            const Mat m = random_mat(F, rows, cols, rng);
            const Mat ker = kernel(F, m);
            EXPECT_EQ(rank_of(F, m) + ker.rows, cols);
            EXPECT_TRUE(rows_orthogonal(F, m, ker));
            // Kernel rows are themselves independent.
            Mat kcopy = ker;
            EXPECT_EQ(rref_in_place(F, kcopy), ker.rows);
        }
    }
}

TEST(Linalg, KernelOfEmptyMatrixIsFullSpace) {
    const Field F = Field::prime(3);
    Mat m(0, 4);
    const Mat ker = kernel(F, m);
    EXPECT_EQ(ker.rows, 4u);
    EXPECT_EQ(ker.cols, 4u);
}

TEST(Linalg, NormalizeMakesLeadingEntryOne) {
    const Field F = Field::prime(7);
    Vec v{F.element(0), F.element(3), F.element(5)};
    normalize(F, v);
    EXPECT_EQ(v[0].v, 0u);
    EXPECT_EQ(v[1].v, 1u);
    EXPECT_EQ(v[2].v, F.mul(F.element(5), F.inv(F.element(3))).v);
}

TEST(Linalg, StackedConcatenatesRows) {
    const Field F = Field::prime(2);
    const Mat a = Mat::from_rows({{F.one(), F.zero()}});
    const Mat b = Mat::from_rows({{F.zero(), F.one()}});
    const Mat s = stacked(a, b);
    EXPECT_EQ(s.rows, 2u);
    EXPECT_EQ(rank_of(F, s), 2u);
    EXPECT_EQ(stacked(Mat(0, 2), b).rows, 1u);
}

TEST(Linalg, DotIsBilinear) {
    const Field F = Field::prime(11);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Vec a(4), b(4), c(4);
        for (std::size_t i = 0; i < 4; ++i) {
            a[i] = F.element(rng() % 11);
            b[i] = F.element(rng() % 11);
            c[i] = F.element(rng() % 11);
        }
        Vec bc(4);
        for (std::size_t i = 0; i < 4; ++i) bc[i] = F.add(b[i], c[i]);
        EXPECT_EQ(dot(F, a, bc), F.add(dot(F, a, b), dot(F, a, c)));
    }
}
