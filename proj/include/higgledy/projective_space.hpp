/**
 * @file projective_space.hpp
 * @brief Canonical subspaces of PG(d,q): span/meet, duality, enumeration.
 *
 * Every subspace is stored as the unique reduced-row-echelon basis of its
 * row space — equality of subspaces is equality of matrices, which is what
 * makes exhaustive dedup-heavy searches cheap.  A rank-r Subspace of
 * PG(d,q) has projective dimension r-1; the empty subspace (rank 0) is the
 * meet of complementary spaces.
 *
 * Enumeration streams every rank-(m+1) RREF matrix exactly once, ordered
 * by pivot-column pattern and then by free entries counted in field
 * enumeration order.  Counts are validated against Gaussian binomials and
 * guarded by an explicit budget so a typo cannot start a year-long loop.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "higgledy/linalg.hpp"

namespace higgledy {

using BigInt = boost::multiprecision::cpp_int;

/// Ambient space PG(d, q).
struct Space {
    Field field;
    int dim = 0;  // projective dimension d >= 2

    Space(Field f, int d) : field(std::move(f)), dim(d) {
        if (d < 2) throw std::invalid_argument("projective dimension must be at least 2");
    }

    std::size_t ncoords() const { return static_cast<std::size_t>(dim) + 1; }

    friend bool operator==(const Space& a, const Space& b) { return a.dim == b.dim && a.field == b.field; }
};

/// Projective subspace in canonical RREF form.
class Subspace {
   public:
    Subspace() = default;

    /// Canonicalizes arbitrary spanning rows.  Throws if all rows are zero.
    static Subspace from_rows(const Field& F, Mat m) {
        if (rref_in_place(F, m) == 0) throw std::invalid_argument("subspace needs a nonzero spanning set");
        return Subspace(std::move(m));
    }

    static Subspace from_rows(const Field& F, const std::vector<Vec>& rows) {
        return from_rows(F, Mat::from_rows(rows));
    }

    /// Wraps a matrix that is already in RREF (enumeration fast path).
    static Subspace from_rref(Mat m) { return Subspace(std::move(m)); }

    static Subspace empty(std::size_t ncoords) {
        Mat m;
        m.cols = ncoords;
        return Subspace(std::move(m));
    }

    std::size_t rank() const { return mat_.rows; }
    int proj_dim() const { return static_cast<int>(mat_.rows) - 1; }
    bool is_empty() const { return mat_.rows == 0; }
    std::size_t ncoords() const { return mat_.cols; }

    const Mat& mat() const { return mat_; }
    Vec row(std::size_t r) const { return mat_.row(r); }

    friend bool operator==(const Subspace& a, const Subspace& b) = default;
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.mat_.rows != b.mat_.rows) return a.mat_.rows < b.mat_.rows;
        for (std::size_t i = 0; i < a.mat_.a.size(); ++i)
            if (a.mat_.a[i] != b.mat_.a[i]) return a.mat_.a[i] < b.mat_.a[i];
        return false;
    }

   private:
    explicit Subspace(Mat m) : mat_(std::move(m)) {}
    Mat mat_;
};

using Line = Subspace;   // rank 2
using Point = Subspace;  // rank 1

inline Subspace point_of(const Field& F, Vec v) {
    normalize(F, v);
    return Subspace::from_rows(F, Mat::from_rows({v}));
}

/// Span of a family of subspaces (RREF of the concatenated rows).
/// The span of nothing is the empty subspace.
inline Subspace span(const Field& F, const std::vector<Subspace>& parts) {
    Mat m;
    for (const auto& s : parts) {
        if (m.cols != 0 && s.ncoords() != m.cols) throw std::invalid_argument("ambient mismatch in span");
        m = stacked(m, s.mat());
    }
    if (rref_in_place(F, m) == 0) return Subspace::empty(m.cols);
    return Subspace::from_rref(std::move(m));
}

/// Annihilator: the subspace of the dual space of all vectors orthogonal
/// to S.  dual(dual(S)) == S.
inline Subspace dual(const Field& F, const Subspace& s) {
    Mat ker = kernel(F, s.mat());
    if (ker.rows == 0) return Subspace::empty(s.ncoords());
    return Subspace::from_rref(std::move(ker));
}

/// Intersection, computed through duality.  May be empty.
inline Subspace meet(const Field& F, const Subspace& s1, const Subspace& s2) {
    if (s1.ncoords() != s2.ncoords()) throw std::invalid_argument("ambient mismatch in meet");
    Mat duals = stacked(kernel(F, s1.mat()), kernel(F, s2.mat()));
    Mat ker = kernel(F, std::move(duals));
    if (ker.rows == 0) return Subspace::empty(s1.ncoords());
    return Subspace::from_rref(std::move(ker));
}

/// True iff the two subspaces share at least one point.
/// Cheaper than computing the meet: rank(S1 ∪ S2) < rank S1 + rank S2.
inline bool meets(const Field& F, const Subspace& s1, const Subspace& s2) {
    return rank_of(F, stacked(s1.mat(), s2.mat())) < s1.rank() + s2.rank();
}

/// Number of k-dimensional linear subspaces of an n-dimensional space
/// over GF(q), as an exact integer.
inline BigInt gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
    if (k > n) return 0;
    BigInt num = 1, den = 1;
    const BigInt Q = q;
    for (unsigned i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(Q, n - i) - 1;
        den *= boost::multiprecision::pow(Q, i + 1) - 1;
    }
    return num / den;
}

/// Enumeration budgets for the exhaustive kernels.
struct Budget {
    BigInt max_subspaces = 100000000;    // refuse streams longer than this
    BigInt max_pluecker_points = 1000000;  // null-space point enumeration cap
};

/// All normalized points of the row space of S, i.e. vectors whose first
/// nonzero coordinate is 1.  (q^r - 1)/(q - 1) entries for rank r.
inline std::vector<Vec> points_on(const Field& F, const Subspace& s) {
    std::vector<Vec> pts;
    const std::size_t r = s.rank();
    const std::uint64_t q = F.size();
    // Normalized coefficient tuples w.r.t. the basis give each projective
    // point exactly once; the resulting vector still needs its own
    // normalization to canonical point form.
    Vec coeff(r, F.zero());
    for (std::size_t lead = 0; lead < r; ++lead) {
        for (auto& c : coeff) c = F.zero();
        coeff[lead] = F.one();
        std::uint64_t total = 1;
        for (std::size_t i = lead + 1; i < r; ++i) total *= q;
        for (std::uint64_t n = 0; n < total; ++n) {
            std::uint64_t rest = n;
            for (std::size_t i = lead + 1; i < r; ++i) {
                coeff[i] = F.element(rest % q);
                rest /= q;
            }
            Vec v(s.ncoords(), F.zero());
            for (std::size_t i = lead; i < r; ++i) {
                if (coeff[i].v == 0) continue;
                for (std::size_t j = 0; j < s.ncoords(); ++j)
                    v[j] = F.add(v[j], F.mul(coeff[i], s.mat().at(i, j)));
            }
            normalize(F, v);
            pts.push_back(std::move(v));
        }
    }
    return pts;
}

namespace detail {

// Visits pivot-column combinations of {0..n-1} of size r in lexicographic
// order; for each pattern walks the free entries as a base-q odometer with
// the last free entry varying fastest.
template <typename Fn>
bool enumerate_rref(const Field& F, std::size_t n, std::size_t r, Fn&& fn) {
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    const std::uint64_t q = F.size();

    while (true) {
        // Free positions for this pivot pattern, row-major.
        std::vector<bool> is_pivot(n, false);
        for (auto c : piv) is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_pos;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t c = piv[i] + 1; c < n; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(i, c);

        Mat m(r, n);
        for (std::size_t i = 0; i < r; ++i) m.at(i, piv[i]) = F.one();
        std::vector<std::uint64_t> odo(free_pos.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < free_pos.size(); ++i)
                m.at(free_pos[i].first, free_pos[i].second) = F.element(odo[i]);
            if (!fn(m)) return false;
            std::size_t i = free_pos.size();
            while (i > 0 && odo[i - 1] == q - 1) odo[--i] = 0;
            if (i == 0) break;
            ++odo[i - 1];
        }

        // Next pivot combination.
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (piv[i] != i + n - r) {
                ++piv[i];
                for (std::size_t j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

}  // namespace detail

/// Streams every subspace of the given projective dimension exactly once,
/// in canonical enumeration order.  The callback returns false to stop.
/// Throws BudgetError (before any work) if the stream would be longer
/// than budget.max_subspaces.
template <typename Fn>
void for_each_subspace(const Space& sp, int proj_dim, const Budget& budget, Fn&& fn) {
    if (proj_dim < 0 || proj_dim > sp.dim) throw std::invalid_argument("subspace dimension out of range");
    const std::size_t r = static_cast<std::size_t>(proj_dim) + 1;
    const BigInt count = gaussian_binomial(static_cast<unsigned>(sp.ncoords()), static_cast<unsigned>(r), sp.field.size());
    if (count > budget.max_subspaces)
        throw BudgetError("enumeration of " + count.str() + " subspaces exceeds budget of " +
                          budget.max_subspaces.str());
    detail::enumerate_rref(sp.field, sp.ncoords(), r, [&](const Mat& m) { return fn(Subspace::from_rref(m)); });
}

inline std::vector<Subspace> all_subspaces(const Space& sp, int proj_dim, const Budget& budget = {}) {
    std::vector<Subspace> out;
    for_each_subspace(sp, proj_dim, budget, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

/// Streams hyperplanes as normalized dual vectors (first nonzero entry 1),
/// ordered by leading position and then by the trailing entries counted in
/// field enumeration order (last coordinate fastest).
template <typename Fn>
void for_each_hyperplane(const Space& sp, Fn&& fn) {
    const Field& F = sp.field;
    const std::size_t n = sp.ncoords();
    const std::uint64_t q = F.size();
    Vec h(n, F.zero());
    for (std::size_t lead = 0; lead < n; ++lead) {
        for (auto& c : h) c = F.zero();
        h[lead] = F.one();
        std::uint64_t total = 1;
        for (std::size_t i = lead + 1; i < n; ++i) total *= q;
        for (std::uint64_t m = 0; m < total; ++m) {
            std::uint64_t rest = m;
            for (std::size_t i = n; i-- > lead + 1;) {
                h[i] = F.element(rest % q);
                rest /= q;
            }
            if (!fn(static_cast<const Vec&>(h))) return;
        }
    }
}

/// Rank-d subspace annihilated by the dual vector h.
inline Subspace hyperplane_subspace(const Field& F, const Vec& h) {
    Mat m;
    m.append_row(h);
    return Subspace::from_rref(kernel(F, m));
}

/// Dual vector of a rank-d subspace, normalized.
inline Vec hyperplane_dual(const Field& F, const Subspace& s) {
    Mat ker = kernel(F, s.mat());
    if (ker.rows != 1) throw std::invalid_argument("subspace is not a hyperplane");
    Vec h = ker.row(0);
    normalize(F, h);
    return h;
}

}  // namespace higgledy
