#include <gtest/gtest.h>

#include <set>

#include "higgledy/constructions.hpp"
#include "higgledy/polynomial.hpp"
#include "higgledy/verification.hpp"

using namespace higgledy;

namespace {

Poly row_as_poly(const Subspace& s, std::size_t i) { return Poly::from_coeffs(s.row(i)); }

}  // namespace

TEST(Designs, ParameterValidation) {
    const Field F7 = Field::prime(7);
    EXPECT_THROW(gk_frs_design({F7, 3, 3, 1, 2}), std::invalid_argument);   // s > t
    EXPECT_THROW(gk_frs_design({F7, 7, 1, 1, 1}), std::invalid_argument);   // d+1 >= q
    EXPECT_THROW(gk_frs_design({F7, 3, 1, 3, 2}), std::invalid_argument);   // r t > d+1
    EXPECT_THROW(gk_frs_design({Field::parse("4"), 2, 1, 2, 1}), std::invalid_argument);  // r>1 over extension
    EXPECT_THROW(gk_mult_design({Field::parse("9"), 2, 1, 1, 2}), std::invalid_argument);  // non-prime
    EXPECT_THROW(gk_mult_design({Field::prime(3), 3, 1, 1, 2}), std::invalid_argument);    // d+1 >= char
}

// Hand-worked run at q=7, r=1, t=2, d=3: the group generator is 3, orbit
// sets are {1,3}, {2,6}, {4,5}, labels 3, 5, 6 collide with earlier sets.
TEST(Designs, FrsGreedyOrbitSelectionQ7) {
    const Field F = Field::prime(7);
    const DesignFamily fam = gk_frs_design({F, 3, 2, 1, 2});
    ASSERT_EQ(fam.size(), 3u);
    EXPECT_EQ(fam.mode, "frs");
    EXPECT_EQ(fam.label_field, F);
    std::vector<std::uint32_t> labels;
    for (const auto& m : fam.members) labels.push_back(m.alpha.v);
    EXPECT_EQ(labels, (std::vector<std::uint32_t>{1, 2, 4}));
    // Each member: codim 2 kernel of evaluation at {alpha, 3 alpha}.
    for (const auto& m : fam.members) {
        EXPECT_EQ(m.codim, 2u);
        ASSERT_EQ(m.space.rank(), 2u);
        for (std::size_t i = 0; i < m.space.rank(); ++i) {
            const Poly p = row_as_poly(m.space, i);
            EXPECT_EQ(poly_eval(F, p, m.alpha).v, 0u);
            EXPECT_EQ(poly_eval(F, p, F.mul(m.alpha, F.element(3))).v, 0u);
        }
    }
}

// Hand-worked run at q=5, r=2, t=1, d=2: GF(25) has twenty elements of
// degree 2 in ten Frobenius orbits; with t=1 the orbit sets partition
// them, so all ten representatives survive.  Each kernel is the span of
// the label's minimal polynomial: X^2+X+1 for the generator of the
// modulus, X^2+4X+1 for 1+x.
TEST(Designs, FrsExtensionOrbitsQ5R2) {
    const Field F = Field::prime(5);
    const DesignFamily fam = gk_frs_design({F, 2, 1, 2, 1});
    ASSERT_EQ(fam.size(), 10u);
    const Field big = fam.label_field;
    EXPECT_EQ(big.size(), 25u);
    std::vector<std::uint32_t> labels;
    for (const auto& m : fam.members) labels.push_back(m.alpha.v);
    EXPECT_EQ(labels, (std::vector<std::uint32_t>{5, 6, 7, 8, 9, 10, 11, 12, 13, 14}));
    for (const auto& m : fam.members) {
        EXPECT_EQ(m.codim, 2u);
        ASSERT_EQ(m.space.rank(), 1u);
        // The row, lifted into GF(25), vanishes at the label.
        Scalar acc = big.zero();
        const Vec& row = m.space.row(0);
        for (std::size_t j = row.size(); j-- > 0;)
            acc = big.add(big.mul(acc, m.alpha), big.element(row[j].v));
        EXPECT_EQ(acc.v, 0u) << "label " << m.alpha.v;
    }
    EXPECT_EQ(fam.members[0].space.row(0), (Vec{F.one(), F.one(), F.one()}));
    EXPECT_EQ(fam.members[1].space.row(0), (Vec{F.one(), F.element(4), F.one()}));
}

// Multiplicity kernels over GF(5), t=2, d=2: H_alpha is spanned by
// (X - alpha)^2 alone.
TEST(Designs, MultKernelsAreShiftedSquares) {
    const Field F = Field::prime(5);
    const DesignFamily fam = gk_mult_design({F, 2, 2, 1, 2});
    ASSERT_EQ(fam.size(), 5u);
    for (const auto& m : fam.members) {
        EXPECT_EQ(m.codim, 2u);
        ASSERT_EQ(m.space.rank(), 1u);
        const Poly p = row_as_poly(m.space, 0);
        const Poly lin = Poly::from_coeffs({F.neg(m.alpha), F.one()});
        const Poly square = poly_mul(F, lin, lin);
        // Equal up to the leading normalization.
        EXPECT_EQ(poly_scale(F, square.leading(F), p), poly_scale(F, p.leading(F), square));
        EXPECT_EQ(poly_eval(F, p, m.alpha).v, 0u);
        EXPECT_EQ(poly_eval(F, poly_derivative(F, p), m.alpha).v, 0u);
    }
    // Labels cover the whole field.
    std::set<std::uint32_t> labels;
    for (const auto& m : fam.members) labels.insert(m.alpha.v);
    EXPECT_EQ(labels.size(), 5u);
}

// Strong parameter at s = 1 for the shifted-square family: a 1-dim W lies
// in at most one kernel, so the measured value is exactly 1.
TEST(Designs, MultStrongParameterExactAtSOne) {
    const DesignFamily fam = gk_mult_design({Field::prime(5), 2, 1, 1, 2});
    const DesignReport rep = design_measure(fam, 1, "strong", Budget{});
    EXPECT_EQ(rep.measured, 1u);
    EXPECT_TRUE(rep.bound_satisfied);
    EXPECT_EQ(rep.bound_num, 2u);  // s(d-s+1) = 2
    EXPECT_EQ(rep.bound_den, 2u);  // t-s+1 = 2
    const DesignReport weak = design_measure(fam, 1, "weak", Budget{});
    EXPECT_EQ(weak.measured, 1u);
}

TEST(Designs, StrongDominatesWeakAndBoundsHold) {
    for (const DesignFamily& fam :
         {gk_frs_design({Field::prime(7), 3, 2, 1, 2}), gk_mult_design({Field::prime(11), 3, 2, 1, 2})}) {
        for (unsigned s = 1; s <= 2; ++s) {
            const DesignReport strong = design_measure(fam, s, "strong", Budget{});
            const DesignReport weak = design_measure(fam, s, "weak", Budget{});
            EXPECT_LE(weak.measured, strong.measured);
            EXPECT_TRUE(strong.bound_satisfied) << fam.mode << " s=" << s;
        }
    }
}

TEST(Designs, MeasureRejectsBadArguments) {
    const DesignFamily fam = gk_mult_design({Field::prime(5), 2, 1, 1, 2});
    EXPECT_THROW(design_measure(fam, 3, "strong", Budget{}), std::invalid_argument);  // s > t
    EXPECT_THROW(design_measure(fam, 1, "typo", Budget{}), std::invalid_argument);
    EXPECT_THROW(design_measure(fam, 0, "weak", Budget{}), std::invalid_argument);
}
