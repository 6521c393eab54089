/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over GF(q).
 *
 * Coefficients are little-endian and kept trimmed: the zero polynomial is
 * the empty vector and deg(0) = -1.  Everything here is small and exact;
 * these polynomials parameterize curves and represent codewords, they are
 * never asymptotically large.
 */
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "higgledy/linalg.hpp"

namespace higgledy {

struct Poly {
    Vec c;  // c[i] is the coefficient of X^i; no trailing zeros

    static Poly zero() { return {}; }

    static Poly from_coeffs(Vec coeffs) {
        Poly p{std::move(coeffs)};
        p.trim();
        return p;
    }

    void trim() {
        while (!c.empty() && c.back().v == 0) c.pop_back();
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Scalar coeff(std::size_t i) const { return i < c.size() ? c[i] : Scalar{0}; }
    Scalar leading(const Field& F) const { return c.empty() ? F.zero() : c.back(); }

    friend bool operator==(const Poly&, const Poly&) = default;
};

inline Scalar poly_eval(const Field& F, const Poly& p, Scalar x) {
    Scalar acc = F.zero();
    for (std::size_t i = p.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), p.c[i]);
    return acc;
}

inline Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    Vec out(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly::from_coeffs(std::move(out));
}

inline Poly poly_scale(const Field& F, Scalar s, const Poly& a) {
    if (s.v == 0) return Poly::zero();
    Vec out = a.c;
    for (auto& x : out) x = F.mul(s, x);
    return Poly::from_coeffs(std::move(out));
}

inline Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    return poly_add(F, a, poly_scale(F, F.neg(F.one()), b));
}

inline Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Vec out(a.c.size() + b.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a.c[i], b.c[j]));
    return Poly::from_coeffs(std::move(out));
}

/// Formal derivative.  In characteristic p the X^p terms vanish.
inline Poly poly_derivative(const Field& F, const Poly& a) {
    if (a.c.size() < 2) return Poly::zero();
    Vec out(a.c.size() - 1, F.zero());
    for (std::size_t i = 1; i < a.c.size(); ++i)
        out[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a.c[i]);
    return Poly::from_coeffs(std::move(out));
}

/// P(gX): multiplies the coefficient of X^i by g^i.
inline Poly poly_dilate(const Field& F, const Poly& a, Scalar g) {
    Vec out = a.c;
    Scalar gp = F.one();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = F.mul(out[i], gp);
        gp = F.mul(gp, g);
    }
    return Poly::from_coeffs(std::move(out));
}

/// Determinant of a small square matrix of polynomials, by cofactor
/// expansion along the first row.  Intended for Wronskian-type matrices
/// whose size is the design strength, never more than a handful.
inline Poly poly_det(const Field& F, const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_det needs a square matrix");
    if (n == 0) return Poly::from_coeffs({F.one()});
    if (n == 1) return m[0][0];
    Poly det = Poly::zero();
    Scalar sign = F.one();
    for (std::size_t j = 0; j < n; ++j) {
        if (!m[0][j].is_zero()) {
            std::vector<std::vector<Poly>> minor(n - 1);
            for (std::size_t r = 1; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) minor[r - 1].push_back(m[r][c]);
            det = poly_add(F, det, poly_scale(F, sign, poly_mul(F, m[0][j], poly_det(F, minor))));
        }
        sign = F.neg(sign);
    }
    return det;
}

/// Replaces a basis of a polynomial subspace by one with pairwise distinct
/// degrees, preserving the span.  Repeatedly cancels the leading term of
/// one of two equal-degree members; linear independence guarantees
/// termination.  The result is sorted by increasing degree.
inline std::vector<Poly> poly_echelonize(const Field& F, std::vector<Poly> basis) {
    for (auto& p : basis)
        if (p.is_zero()) throw std::invalid_argument("basis contains the zero polynomial");
    auto by_degree = [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); };
    std::sort(basis.begin(), basis.end(), by_degree);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
            if (basis[i].degree() != basis[i + 1].degree()) continue;
            const Scalar f = F.div(basis[i + 1].leading(F), basis[i].leading(F));
            basis[i + 1] = poly_sub(F, basis[i + 1], poly_scale(F, f, basis[i]));
            if (basis[i + 1].is_zero()) throw std::invalid_argument("basis is linearly dependent");
            std::sort(basis.begin(), basis.end(), by_degree);
            changed = true;
            break;
        }
    }
    return basis;
}

}  // namespace higgledy
