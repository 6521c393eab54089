/**
 * @file pluecker.hpp
 * @brief Pluecker coordinates of lines and codimension-2 spaces in PG(d,q).
 *
 * A line spanned by rows a, b of PG(d,q) maps to the C(d+1,2) minors
 * L_ij = a_i b_j - a_j b_i (i < j), well defined up to a scalar.  A
 * codimension-2 space is cut out by two hyperplanes u, v and carries the
 * dual coordinates H_ij = u_i v_j - u_j v_i.  The bilinear pairing
 *
 *     <H, L> = sum_{i<j} H_ij L_ij = (u.a)(v.b) - (u.b)(v.a)
 *
 * vanishes exactly when the line meets the codimension-2 space, which
 * turns transversal searches into linear algebra on coordinate vectors.
 *
 * A coordinate vector is decomposable (comes from an actual line) iff the
 * quadratic three-term relations hold; decomposition reads the line back
 * off the rows of the alternating matrix (a b^T - b a^T).
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "higgledy/projective_space.hpp"

namespace higgledy {

/// Linear index of the pair (i,j), i < j < n, in row-major pair order:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= j || j >= n) throw std::invalid_argument("pair_index needs i < j < n");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Coordinate vector on pairs of positions, normalized so the first
/// nonzero entry is 1.  `n` is the number of ambient coordinates (d+1).
struct PlueckerVector {
    std::size_t n = 0;
    Vec coords;  // length C(n,2), pair order of pair_index

    Scalar at(std::size_t i, std::size_t j) const { return coords[pair_index(n, i, j)]; }
    bool is_zero() const { return higgledy::is_zero(coords); }

    friend bool operator==(const PlueckerVector&, const PlueckerVector&) = default;
};

namespace detail {

inline PlueckerVector pluecker_of_basis(const Field& F, const Vec& a, const Vec& b) {
    const std::size_t n = a.size();
    PlueckerVector P;
    P.n = n;
    P.coords.assign(pair_count(n), F.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            P.coords[pair_index(n, i, j)] = F.sub(F.mul(a[i], b[j]), F.mul(a[j], b[i]));
    normalize(F, P.coords);
    return P;
}

}  // namespace detail

/// Pluecker coordinates of a line (rank-2 subspace), normalized.
inline PlueckerVector line_pluecker(const Field& F, const Subspace& line) {
    if (line.rank() != 2) throw std::invalid_argument("line_pluecker needs a rank-2 subspace");
    return detail::pluecker_of_basis(F, line.row(0), line.row(1));
}

/// Dual Pluecker coordinates of a codimension-2 subspace: the coordinates
/// of its annihilator, which is a line of the dual space.
inline PlueckerVector codim2_pluecker(const Field& F, const Subspace& s) {
    Mat ker = kernel(F, s.mat());
    if (ker.rows != 2) throw std::invalid_argument("codim2_pluecker needs a codimension-2 subspace");
    return detail::pluecker_of_basis(F, ker.row(0), ker.row(1));
}

/// <H, L> = sum_{i<j} H_ij L_ij.  Zero iff the corresponding line and
/// codimension-2 subspace intersect.
inline Scalar pluecker_pairing(const Field& F, const PlueckerVector& H, const PlueckerVector& L) {
    if (H.n != L.n) throw std::invalid_argument("pairing needs matching ambient size");
    return dot(F, H.coords, L.coords);
}

/// Checks the three-term quadratic relations
/// P_{ab}P_{cd} - P_{ac}P_{bd} + P_{ad}P_{bc} = 0 over all a<b<c<d.
/// Nonzero solutions are exactly the decomposable vectors.
inline bool satisfies_pluecker_relations(const Field& F, const PlueckerVector& P) {
    const std::size_t n = P.n;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    Scalar t = F.mul(P.at(a, b), P.at(c, d));
                    t = F.sub(t, F.mul(P.at(a, c), P.at(b, d)));
                    t = F.add(t, F.mul(P.at(a, d), P.at(b, c)));
                    if (t.v != 0) return false;
                }
    return true;
}

/// Recovers the line with the given coordinates, or nullopt when the
/// vector is not decomposable.  Rows i and j of the alternating matrix
/// A (A_ij = P_ij, A_ji = -P_ij) span the line whenever P_ij != 0; the
/// result is validated by re-embedding.
inline std::optional<Subspace> pluecker_line(const Field& F, const PlueckerVector& P) {
    if (P.is_zero()) return std::nullopt;
    const std::size_t n = P.n;
    std::size_t pi = 0, pj = 1;
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (P.at(i, j).v != 0) {
                pi = i;
                pj = j;
                found = true;
                break;
            }
    auto mat_row = [&](std::size_t r) {
        Vec v(n, F.zero());
        for (std::size_t c = 0; c < n; ++c) {
            if (c == r) continue;
            v[c] = r < c ? P.at(r, c) : F.neg(P.at(c, r));
        }
        return v;
    };
    Subspace line = Subspace::from_rows(F, {mat_row(pi), mat_row(pj)});
    if (line.rank() != 2) return std::nullopt;
    if (line_pluecker(F, line) != P) return std::nullopt;
    return line;
}

/// Recovers the codimension-2 subspace with the given dual coordinates.
inline std::optional<Subspace> pluecker_codim2(const Field& F, const PlueckerVector& H) {
    auto dual_line = pluecker_line(F, H);
    if (!dual_line) return std::nullopt;
    return Subspace::from_rref(kernel(F, dual_line->mat()));
}

/// Dimension of the Grassmannian of m-dimensional linear subspaces of an
/// (m+n)-dimensional space.
inline unsigned grassmann_dimension(unsigned m, unsigned n) { return m * n; }

/// Degree of that Grassmannian in its Pluecker embedding:
/// (mn)! * prod_{i<n} i! / prod_{i<n} (m+i)!.
inline BigInt grassmann_degree(unsigned m, unsigned n) {
    auto factorial = [](unsigned v) {
        BigInt r = 1;
        for (unsigned i = 2; i <= v; ++i) r *= i;
        return r;
    };
    BigInt num = factorial(m * n);
    BigInt den = 1;
    for (unsigned i = 0; i < n; ++i) {
        num *= factorial(i);
        den *= factorial(m + i);
    }
    if (num % den != 0) throw std::logic_error("grassmann degree formula must divide exactly");
    return num / den;
}

}  // namespace higgledy
