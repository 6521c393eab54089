/**
 * @file constructions.hpp
 * @brief Line families and polynomial subspace designs.
 *
 * Line families in PG(d,q):
 *   - tangents of the rational normal curve t -> (1, t, ..., t^d), whose
 *     pair coordinates have the closed form (j-i) t^{i+j-1};
 *   - diverted tangents span{a(t), b(t)} with b_j(t) = phi(j) t^{j-1} for
 *     an injection phi, which repairs coefficients (j-i) that vanish in
 *     small characteristic;
 *   - the planar triangle, three concurrent lines in PG(2,2), and the
 *     hyperbolic-quadric examples in PG(3,q).
 *
 * Subspace designs in the coefficient space GF(q)^{d+1} of polynomials of
 * degree <= d:
 *   - evaluation kernels H_alpha = {P : P(alpha w^i) = 0, i < t} over a
 *     greedily chosen label set with pairwise disjoint orbit sets S_alpha;
 *   - multiplicity kernels H_alpha = {P : P and its first t-1 formal
 *     derivatives vanish at alpha}, one per field element.
 *
 * The source material leaves many choices "arbitrary" (the injection, the
 * t-values, the label set).  Everything here resolves them greedily in
 * field enumeration order so that runs are reproducible bit for bit.
 */
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "higgledy/pluecker.hpp"
#include "higgledy/polynomial.hpp"
#include "higgledy/projective_space.hpp"

namespace higgledy {

// ---------------------------------------------------------------------------
// Curve tangents and diverted tangents
// ---------------------------------------------------------------------------

/// The point (1, t, t^2, ..., t^d) of the rational normal curve.
inline Subspace moment_point(const Space& sp, Scalar t) {
    const Field& F = sp.field;
    Vec a(sp.ncoords());
    a[0] = F.one();
    for (std::size_t i = 1; i < a.size(); ++i) a[i] = F.mul(a[i - 1], t);
    return Subspace::from_rows(F, {a});
}

/// Tangent line of the curve at parameter t: span of a(t) = (1, t, ..., t^d)
/// and its derivative (0, 1, 2t, ..., d t^{d-1}).  Never degenerate: the
/// derivative starts with 0, a(t) starts with 1.
inline Subspace moment_tangent(const Space& sp, Scalar t) {
    const Field& F = sp.field;
    const std::size_t n = sp.ncoords();
    Vec a(n), da(n, F.zero());
    a[0] = F.one();
    for (std::size_t i = 1; i < n; ++i) a[i] = F.mul(a[i - 1], t);
    Scalar tp = F.one();  // t^{j-1}
    for (std::size_t j = 1; j < n; ++j) {
        da[j] = F.mul(F.from_int(static_cast<std::int64_t>(j)), tp);
        tp = F.mul(tp, t);
    }
    return Subspace::from_rows(F, {a, da});
}

/// Tangent at the curve's point at infinity (0, ..., 0, 1): the span of
/// the last two unit vectors.  Not a member of any family here; provided
/// for the degenerate-characteristic analysis of the full tangent system.
inline Subspace moment_tangent_infinity(const Space& sp) {
    const Field& F = sp.field;
    const std::size_t n = sp.ncoords();
    Vec u(n, F.zero()), v(n, F.zero());
    u[n - 2] = F.one();
    v[n - 1] = F.one();
    return Subspace::from_rows(F, {u, v});
}

/// An injection {0, ..., d} -> GF(q) with phi(0) = 0 and phi(1) = 1.
struct Injection {
    std::vector<Scalar> phi;  // phi[k], size d+1

    Injection() = default;
    explicit Injection(std::vector<Scalar> values) : phi(std::move(values)) {
        if (phi.size() < 2 || phi[0].v != 0 || phi[1].v != 1)
            throw std::invalid_argument("injection must start with 0, 1");
        std::set<Scalar> seen(phi.begin(), phi.end());
        if (seen.size() != phi.size()) throw std::invalid_argument("injection values must be distinct");
    }

    Scalar operator()(std::size_t k) const { return phi.at(k); }
    std::size_t top() const { return phi.size() - 1; }  // d
};

/// Deterministic injection for PG(d,q).  When the characteristic exceeds d
/// the integers 0..d are already distinct mod p and phi(k) = k; otherwise
/// the first unused field elements in enumeration order fill the table.
inline Injection default_injection(const Space& sp) {
    const Field& F = sp.field;
    const std::size_t d = static_cast<std::size_t>(sp.dim);
    if (F.size() < d + 1)
        throw std::invalid_argument("no injection of {0..d} into a field of size " + std::to_string(F.size()));
    std::vector<Scalar> phi;
    if (F.characteristic() > d) {
        for (std::size_t k = 0; k <= d; ++k) phi.push_back(F.from_int(static_cast<std::int64_t>(k)));
    } else {
        std::set<Scalar> used;
        for (std::size_t k = 0; k <= d; ++k) {
            std::uint64_t idx = 0;
            while (used.count(F.element(idx))) ++idx;
            phi.push_back(F.element(idx));
            used.insert(phi.back());
        }
    }
    return Injection(std::move(phi));
}

/// Diverted tangent at parameter t: span of a(t) and b(t) with b_0 = 0 and
/// b_j = phi(j) t^{j-1}.  Its pair coordinates are (phi(j)-phi(i)) t^{i+j-1},
/// nonzero for i < j because phi is injective.
inline Subspace diverted_tangent(const Space& sp, Scalar t, const Injection& phi) {
    const Field& F = sp.field;
    const std::size_t n = sp.ncoords();
    if (phi.top() + 1 != n) throw std::invalid_argument("injection size does not match dimension");
    Vec a(n), b(n, F.zero());
    a[0] = F.one();
    for (std::size_t i = 1; i < n; ++i) a[i] = F.mul(a[i - 1], t);
    Scalar tp = F.one();
    for (std::size_t j = 1; j < n; ++j) {
        b[j] = F.mul(phi(j), tp);
        tp = F.mul(tp, t);
    }
    return Subspace::from_rows(F, {a, b});
}

// ---------------------------------------------------------------------------
// Line families
// ---------------------------------------------------------------------------

/// An ordered family of pairwise distinct lines, with human-readable
/// parameter tags parallel to the lines.
struct LineSet {
    Space space;
    std::string name;
    std::vector<Subspace> lines;
    std::vector<std::string> tags;

    LineSet(Space sp, std::string nm) : space(std::move(sp)), name(std::move(nm)) {}

    void add(Subspace line, std::string tag) {
        if (line.rank() != 2) throw std::invalid_argument("family members must be lines");
        for (const auto& l : lines)
            if (l == line) throw std::invalid_argument("family members must be distinct");
        lines.push_back(std::move(line));
        tags.push_back(std::move(tag));
    }

    std::size_t size() const { return lines.size(); }
};

/// Diverted tangents at the first `count` field elements in enumeration
/// order.  With count = 2d-1 (the default) this is the hyperplane-
/// generating family of minimum size.
inline LineSet higgledy_family(const Space& sp, std::size_t count, const Injection& phi) {
    const Field& F = sp.field;
    if (count > F.size())
        throw std::invalid_argument("requested " + std::to_string(count) + " tangent parameters from " + F.name());
    LineSet ls(sp, "diverted-tangents");
    for (std::uint64_t i = 0; i < count; ++i) {
        const Scalar t = F.element(i);
        ls.add(diverted_tangent(sp, t, phi), "t=" + F.str(t));
    }
    return ls;
}

inline LineSet higgledy_family(const Space& sp) {
    return higgledy_family(sp, static_cast<std::size_t>(2 * sp.dim - 1), default_injection(sp));
}

/// The three coordinate lines x_i = 0 of a projective plane.
inline LineSet plane_triangle(const Space& sp) {
    if (sp.dim != 2) throw std::invalid_argument("triangle needs a projective plane");
    const Field& F = sp.field;
    auto unit = [&](std::size_t i) {
        Vec v(3, F.zero());
        v[i] = F.one();
        return v;
    };
    LineSet ls(sp, "triangle");
    ls.add(Subspace::from_rows(F, {unit(1), unit(2)}), "x_0=0");
    ls.add(Subspace::from_rows(F, {unit(0), unit(2)}), "x_1=0");
    ls.add(Subspace::from_rows(F, {unit(0), unit(1)}), "x_2=0");
    return ls;
}

/// The three lines of the Fano plane through the point (1,0,0).
inline LineSet fano_concurrent() {
    Space sp(Field::prime(2), 2);
    const Field& F = sp.field;
    const Vec e0 = {F.one(), F.zero(), F.zero()};
    LineSet ls(sp, "fano-concurrent");
    ls.add(Subspace::from_rows(F, {e0, {F.zero(), F.one(), F.zero()}}), "x_2=0");
    ls.add(Subspace::from_rows(F, {e0, {F.zero(), F.zero(), F.one()}}), "x_1=0");
    ls.add(Subspace::from_rows(F, {e0, {F.zero(), F.one(), F.one()}}), "x_1=x_2");
    return ls;
}

namespace detail {

// Row space of span{(l,0,m,0),(0,l,0,m)} for the first ruling of the
// quadric x_0 x_3 = x_1 x_2, span{(l,m,0,0),(0,0,l,m)} for the opposite.
inline Subspace quadric_ruling_line(const Field& F, Scalar l, Scalar m, bool opposite) {
    Vec u(4, F.zero()), v(4, F.zero());
    if (opposite) {
        u[0] = l; u[1] = m;
        v[2] = l; v[3] = m;
    } else {
        u[0] = l; u[2] = m;
        v[1] = l; v[3] = m;
    }
    return Subspace::from_rows(F, {u, v});
}

inline bool on_quadric(const Field& F, const Vec& p) {
    return F.mul(p[0], p[3]) == F.mul(p[1], p[2]);
}

inline std::vector<Subspace> opposite_ruling(const Field& F) {
    std::vector<Subspace> out;
    out.push_back(quadric_ruling_line(F, F.one(), F.zero(), true));
    for (std::uint64_t m = 0; m < F.size(); ++m)
        out.push_back(quadric_ruling_line(F, F.element(m), F.one(), true));
    return out;
}

}  // namespace detail

enum class Pg3Variant { ThreeRuling, PlusExterior, PlusTwoSecants };

/// Families built on the hyperbolic quadric x_0 x_3 = x_1 x_2 of PG(3,q).
///
/// - ThreeRuling: the ruling lines at parameters (1:0), (1:1), (0:1).  Not
///   a generating family on its own (planes through opposite lines fail).
/// - PlusExterior: adds the first line in enumeration order that avoids
///   every point of the quadric.
/// - PlusTwoSecants: adds the first pair of quadric-meeting lines such
///   that no line of the opposite ruling meets both.
///
/// Searches that exhaust throw std::runtime_error: over some fields the
/// extended variants simply do not exist.
inline LineSet pg3_examples(const Space& sp, Pg3Variant variant) {
    if (sp.dim != 3) throw std::invalid_argument("quadric examples need PG(3,q)");
    const Field& F = sp.field;
    LineSet ls(sp, "quadric-ruling");
    ls.add(detail::quadric_ruling_line(F, F.one(), F.zero(), false), "ruling (1:0)");
    ls.add(detail::quadric_ruling_line(F, F.one(), F.one(), false), "ruling (1:1)");
    ls.add(detail::quadric_ruling_line(F, F.zero(), F.one(), false), "ruling (0:1)");
    if (variant == Pg3Variant::ThreeRuling) return ls;

    if (variant == Pg3Variant::PlusExterior) {
        ls.name = "quadric-ruling-plus-exterior";
        bool found = false;
        for_each_subspace(sp, 1, Budget{}, [&](const Subspace& line) {
            for (const Vec& p : points_on(F, line))
                if (detail::on_quadric(F, p)) return true;
            ls.add(line, "exterior");
            found = true;
            return false;
        });
        if (!found) throw std::runtime_error("no line disjoint from the quadric exists over " + F.name());
        return ls;
    }

    // PlusTwoSecants: collect the quadric-meeting candidate lines once,
    // then scan pairs in enumeration order.
    ls.name = "quadric-ruling-plus-two-secants";
    const auto opposite = detail::opposite_ruling(F);
    std::vector<Subspace> candidates;
    for_each_subspace(sp, 1, Budget{}, [&](const Subspace& line) {
        for (std::size_t i = 0; i < 3; ++i)
            if (line == ls.lines[i]) return true;
        for (const Vec& p : points_on(F, line))
            if (detail::on_quadric(F, p)) {
                candidates.push_back(line);
                break;
            }
        return true;
    });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            bool blocked = false;
            for (const auto& opp : opposite)
                if (meets(F, opp, candidates[i]) && meets(F, opp, candidates[j])) {
                    blocked = true;
                    break;
                }
            if (!blocked) {
                ls.add(candidates[i], "secant");
                ls.add(candidates[j], "secant");
                return ls;
            }
        }
    }
    throw std::runtime_error("no suitable pair of quadric-meeting lines exists over " + F.name());
}

// ---------------------------------------------------------------------------
// Polynomial subspace designs
// ---------------------------------------------------------------------------

/// Parameters s <= t <= d+1 < q of a design on GF(q)^{d+1}, the space of
/// polynomial coefficient vectors of degree <= d.
struct DesignParams {
    Field base;      // GF(q)
    int d = 0;       // polynomial degree bound; m = d+1
    unsigned s = 1;  // strength the design will be measured at
    unsigned r = 1;  // evaluation points live in GF(q^r)
    unsigned t = 1;  // conditions per member
};

/// One design member: a linear subspace of GF(q)^{d+1} (the Subspace rank
/// is its linear dimension) labeled by the element it was built from.
struct PolySubspace {
    Scalar alpha;      // label, element of the label field
    Subspace space;    // RREF row space in GF(q)^{d+1}
    unsigned codim;    // d+1 - dim
};

struct DesignFamily {
    DesignParams params;
    Field label_field;  // GF(q^r); equals params.base when r == 1
    std::string mode;   // "frs" or "mult"
    std::vector<PolySubspace> members;

    std::size_t size() const { return members.size(); }
};

namespace detail {

inline void check_design_params(const DesignParams& p, bool multiplicity) {
    const std::uint64_t m = static_cast<std::uint64_t>(p.d) + 1;
    if (p.s == 0 || p.t == 0 || p.r == 0) throw std::invalid_argument("design parameters must be positive");
    if (!(p.s <= p.t && p.t <= m && m < p.base.size()))
        throw std::invalid_argument("design parameters must satisfy s <= t <= d+1 < q");
    if (multiplicity) {
        if (p.base.degree() != 1) throw std::invalid_argument("multiplicity design needs a prime field");
        if (m >= p.base.characteristic())
            throw std::invalid_argument("multiplicity design needs d+1 below the characteristic");
    } else {
        if (static_cast<std::uint64_t>(p.r) * p.t > m)
            throw std::invalid_argument("evaluation design needs r*t <= d+1, otherwise members are trivial");
    }
}

}  // namespace detail

/// Evaluation-kernel design.  Labels alpha run over the nonzero elements
/// of GF(q^r) in enumeration order; alpha is accepted when it generates
/// GF(q^r) over GF(q), its orbit set S_alpha = {alpha^{q^j} w^i : j < r,
/// i < t} has full size rt, and S_alpha avoids every earlier orbit set.
/// H_alpha is the kernel of the rt scalar conditions obtained from
/// P(alpha w^i) = 0, i < t; its co-dimension is exactly rt.
///
/// For r > 1 the base field must be prime: GF(p) sits inside GF(p^r) as
/// the prime subfield and the power-basis digits of an element are its
/// GF(p)-coordinates, which is what the condition expansion uses.
inline DesignFamily gk_frs_design(const DesignParams& p) {
    detail::check_design_params(p, false);
    const Field& base = p.base;
    if (p.r > 1 && base.degree() != 1)
        throw std::invalid_argument("r > 1 is supported over prime base fields only");
    const Field big = p.r == 1 ? base : Field::extension(base.characteristic(), p.r);
    const std::size_t m = static_cast<std::size_t>(p.d) + 1;
    const std::uint64_t q = base.size();

    // Generator of the base field's multiplicative group, as an element of
    // the big field (prime-subfield indices coincide).
    const Scalar w = big.element(base.primitive_element().v);

    DesignFamily fam{p, big, "frs", {}};
    std::set<Scalar> taken;  // union of accepted orbit sets
    for (std::uint64_t ai = 1; ai < big.size(); ++ai) {
        const Scalar alpha = big.element(ai);

        // Frobenius orbit size = degree of alpha over GF(q); need r.
        unsigned orbit = 1;
        Scalar x = big.pow(alpha, static_cast<std::int64_t>(q));
        while (x != alpha) {
            x = big.pow(x, static_cast<std::int64_t>(q));
            ++orbit;
        }
        if (orbit != p.r) continue;

        std::set<Scalar> s_alpha;
        Scalar conj = alpha;
        for (unsigned j = 0; j < p.r; ++j) {
            Scalar pt = conj;
            for (unsigned i = 0; i < p.t; ++i) {
                s_alpha.insert(pt);
                pt = big.mul(pt, w);
            }
            conj = big.pow(conj, static_cast<std::int64_t>(q));
        }
        if (s_alpha.size() != static_cast<std::size_t>(p.r) * p.t) continue;
        bool disjoint = true;
        for (Scalar e : s_alpha)
            if (taken.count(e)) {
                disjoint = false;
                break;
            }
        if (!disjoint) continue;

        // rt rows over GF(q): the conditions P(alpha w^i) = 0 split into
        // the r power-basis digits of GF(q^r) over GF(q).
        Mat cond(0, 0);
        Scalar pt = alpha;
        for (unsigned i = 0; i < p.t; ++i) {
            std::vector<Vec> rows(p.r, Vec(m, base.zero()));
            Scalar pw = big.one();
            for (std::size_t jj = 0; jj < m; ++jj) {
                if (p.r == 1) {
                    rows[0][jj] = pw;
                } else {
                    for (unsigned l = 0; l < p.r; ++l) rows[l][jj] = base.element(big.coefficient(pw, l));
                }
                pw = big.mul(pw, pt);
            }
            for (auto& row : rows) cond.append_row(row);
            pt = big.mul(pt, w);
        }
        Subspace h = Subspace::from_rref(kernel(base, cond));
        const unsigned codim = static_cast<unsigned>(m - h.rank());
        if (codim != p.r * p.t)
            throw std::logic_error("evaluation conditions are dependent; this violates the size-rt orbit guarantee");

        taken.insert(s_alpha.begin(), s_alpha.end());
        fam.members.push_back({alpha, std::move(h), codim});
    }
    return fam;
}

/// Multiplicity-kernel design over a prime field: for every alpha in
/// GF(q), H_alpha = {P : P(alpha) = P'(alpha) = ... = P^{(t-1)}(alpha) = 0}
/// via formal derivatives.  Condition row i has entries
/// j(j-1)...(j-i+1) alpha^{j-i}; the family always has q members of
/// co-dimension exactly t.
inline DesignFamily gk_mult_design(const DesignParams& p) {
    detail::check_design_params(p, true);
    const Field& F = p.base;
    const std::size_t m = static_cast<std::size_t>(p.d) + 1;

    DesignFamily fam{p, F, "mult", {}};
    for (std::uint64_t ai = 0; ai < F.size(); ++ai) {
        const Scalar alpha = F.element(ai);
        Mat cond(p.t, m);
        for (unsigned i = 0; i < p.t; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                Scalar falling = F.one();
                for (unsigned u = 0; u < i; ++u) falling = F.mul(falling, F.from_int(static_cast<std::int64_t>(j - u)));
                cond.at(i, j) = F.mul(falling, F.pow(alpha, static_cast<std::int64_t>(j - i)));
            }
        }
        Subspace h = Subspace::from_rref(kernel(F, cond));
        const unsigned codim = static_cast<unsigned>(m - h.rank());
        if (codim != p.t) throw std::logic_error("derivative conditions are dependent below the characteristic");
        fam.members.push_back({alpha, std::move(h), codim});
    }
    return fam;
}

}  // namespace higgledy
