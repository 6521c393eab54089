#include "higgledy/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace higgledy;

namespace {

Poly random_poly(const Field& F, int max_deg, std::mt19937_64& rng) {
    Vec c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& x : c) x = F.element(rng() % F.size());
    return Poly::from_coeffs(c);
}

}  // namespace

TEST(Polynomial, DegreeAndTrim) {
    const Field F = Field::prime(5);
    EXPECT_EQ(Poly::zero().degree(), -1);
    EXPECT_TRUE(Poly::from_coeffs({F.zero(), F.zero()}).is_zero());
    const Poly p = Poly::from_coeffs({F.one(), F.zero(), F.element(3), F.zero()});
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.leading(F).v, 3u);
    EXPECT_EQ(p.coeff(7).v, 0u);
}

TEST(Polynomial, EvalAgainstPowerSum) {
    const Field F = Field::prime(11);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly p = random_poly(F, 6, rng);
        const Scalar x = F.element(rng() % 11);
        Scalar direct = F.zero();
        for (int i = 0; i <= p.degree(); ++i)
            direct = F.add(direct, F.mul(p.coeff(static_cast<std::size_t>(i)),
                                         F.pow(x, i)));
        EXPECT_EQ(poly_eval(F, p, x), direct);
    }
}

TEST(Polynomial, RingIdentitiesSampled) {
    const Field F = Field::prime(7);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly a = random_poly(F, 4, rng), b = random_poly(F, 4, rng);
        const Scalar x = F.element(rng() % 7);
        EXPECT_EQ(poly_eval(F, poly_mul(F, a, b), x), F.mul(poly_eval(F, a, x), poly_eval(F, b, x)));
        EXPECT_EQ(poly_eval(F, poly_add(F, a, b), x), F.add(poly_eval(F, a, x), poly_eval(F, b, x)));
        EXPECT_TRUE(poly_sub(F, a, a).is_zero());
    }
}

TEST(Polynomial, FormalDerivative) {
    const Field F = Field::prime(5);
    // d/dX (X^5) = 5 X^4 = 0 in characteristic 5.
    Vec c(6, F.zero());
    c[5] = F.one();
    EXPECT_TRUE(poly_derivative(F, Poly::from_coeffs(c)).is_zero());
    // Product rule on samples.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly a = random_poly(F, 3, rng), b = random_poly(F, 3, rng);
        const Poly lhs = poly_derivative(F, poly_mul(F, a, b));
        const Poly rhs = poly_add(F, poly_mul(F, poly_derivative(F, a), b),
                                  poly_mul(F, a, poly_derivative(F, b)));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Polynomial, DilationComposesWithEvaluation) {
    const Field F = Field::prime(11);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly p = random_poly(F, 5, rng);
        const Scalar g = F.element(1 + rng() % 10), x = F.element(rng() % 11);
        EXPECT_EQ(poly_eval(F, poly_dilate(F, p, g), x), poly_eval(F, p, F.mul(g, x)));
    }
}

TEST(Polynomial, EchelonizeProducesDistinctDegrees) {
    const Field F = Field::prime(7);
    const Poly a = Poly::from_coeffs({F.one(), F.one(), F.one()});        // 1 + X + X^2
    const Poly b = Poly::from_coeffs({F.element(2), F.one(), F.one()});   // 2 + X + X^2
    const auto ech = poly_echelonize(F, {a, b});
    ASSERT_EQ(ech.size(), 2u);
    EXPECT_LT(ech[0].degree(), ech[1].degree());
    // Same span: both originals reduce to zero against the echelon basis.
    EXPECT_EQ(ech[1].degree(), 2);
    EXPECT_EQ(ech[0].degree(), 0);
}

TEST(Polynomial, EchelonizeRejectsDependence) {
    const Field F = Field::prime(5);
    const Poly a = Poly::from_coeffs({F.one(), F.element(2)});
    Poly twice = poly_scale(F, F.element(2), a);
    EXPECT_THROW(poly_echelonize(F, {a, twice}), std::invalid_argument);
    EXPECT_THROW(poly_echelonize(F, {a, Poly::zero()}), std::invalid_argument);
}

TEST(Polynomial, DeterminantKnownAndMultilinear) {
    const Field F = Field::prime(5);
    const Poly one = Poly::from_coeffs({F.one()});
    const Poly x = Poly::from_coeffs({F.zero(), F.one()});
    const Poly x2p1 = Poly::from_coeffs({F.one(), F.zero(), F.one()});
    // det [[1, x], [x, x^2+1]] = 1.
    std::vector<std::vector<Poly>> m{{one, x}, {x, x2p1}};
    EXPECT_EQ(poly_det(F, m), one);
    // Swapping rows negates.
    std::vector<std::vector<Poly>> sw{{x, x2p1}, {one, x}};
    EXPECT_EQ(poly_det(F, sw), poly_scale(F, F.from_int(-1), one));
    // 3x3 with a repeated row vanishes.
    std::vector<std::vector<Poly>> rep{{one, x, x2p1}, {x, x2p1, one}, {one, x, x2p1}};
    EXPECT_TRUE(poly_det(F, rep).is_zero());
}
