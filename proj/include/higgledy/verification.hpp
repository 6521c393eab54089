/**
 * @file verification.hpp
 * @brief Exhaustive, exact checks of the geometric and design properties.
 *
 * Everything in this header decides properties by complete enumeration
 * over PG(d,q): hyperplane generation, t-fold blocking, existence of
 * codimension-2 transversals (two independent algorithms that must agree),
 * a constructive transversal builder for small families, weak/strong
 * design measurement, determinant degree bounds, and minimal-family
 * search.  Witnesses always use the first candidate in enumeration order,
 * so reports are reproducible bit for bit.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "higgledy/constructions.hpp"
#include "higgledy/pluecker.hpp"
#include "higgledy/polynomial.hpp"
#include "higgledy/projective_space.hpp"

namespace higgledy {

// ---------------------------------------------------------------------------
// Blocking sets and hyperplane generation
// ---------------------------------------------------------------------------

/// True iff every hyperplane contains at least t points of the set.
/// Points must be normalized (first nonzero coordinate 1).
inline bool is_tfold_blocking(const Space& sp, const std::vector<Vec>& points, unsigned t) {
    if (t == 0) throw std::invalid_argument("blocking multiplicity must be positive");
    bool ok = true;
    for_each_hyperplane(sp, [&](const Vec& h) {
        unsigned hits = 0;
        for (const Vec& p : points) {
            if (dot(sp.field, h, p).v == 0 && ++hits >= t) break;
        }
        if (hits < t) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

/// Result of the hyperplane-generation check.  For each hyperplane Pi the
/// family's traces (line meets Pi in a point, or lies inside Pi entirely)
/// are collected and their span is ranked; the family generates iff that
/// rank is d (all of Pi) every time.
struct GeneratorReport {
    bool verdict = false;
    std::optional<Vec> counterexample_dual;        // first failing hyperplane
    std::optional<Subspace> counterexample_trace;  // span of the traces in it
    std::map<std::size_t, std::uint64_t> rank_histogram;  // trace rank -> #hyperplanes
};

namespace detail {

// Rank of the span of all line traces inside the hyperplane with dual h.
inline std::size_t trace_rank(const Field& F, const std::vector<Subspace>& lines, const Vec& h, Mat* trace_out) {
    Mat m;
    m.cols = h.size();
    for (const auto& line : lines) {
        const Vec a = line.row(0), b = line.row(1);
        const Scalar da = dot(F, h, a), db = dot(F, h, b);
        if (da.v == 0 && db.v == 0) {  // line inside the hyperplane
            m.append_row(a);
            m.append_row(b);
        } else if (da.v == 0) {
            m.append_row(a);
        } else if (db.v == 0) {
            m.append_row(b);
        } else {  // meeting point db*a - da*b
            Vec p(h.size());
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = F.sub(F.mul(db, a[i]), F.mul(da, b[i]));
            m.append_row(p);
        }
    }
    const std::size_t r = rref_in_place(F, m);
    if (trace_out) *trace_out = std::move(m);
    return r;
}

}  // namespace detail

/// Full scan over all hyperplanes.  With stop_on_failure the scan aborts
/// at the first counterexample and the histogram stays partial.
inline GeneratorReport is_generator_lineset(const LineSet& ls, bool stop_on_failure = false) {
    if (ls.lines.empty()) throw std::invalid_argument("generator check needs a nonempty family");
    const Space& sp = ls.space;
    const Field& F = sp.field;
    const std::size_t want = sp.ncoords() - 1;  // linear rank of a hyperplane

    GeneratorReport rep;
    rep.verdict = true;
    for_each_hyperplane(sp, [&](const Vec& h) {
        Mat trace;
        const std::size_t r = detail::trace_rank(F, ls.lines, h, &trace);
        ++rep.rank_histogram[r];
        if (r < want && rep.verdict) {
            rep.verdict = false;
            rep.counterexample_dual = h;
            rep.counterexample_trace = r == 0 ? Subspace::empty(sp.ncoords()) : Subspace::from_rref(trace);
            if (stop_on_failure) return false;
        }
        return true;
    });
    return rep;
}

// ---------------------------------------------------------------------------
// Transversals of codimension two
// ---------------------------------------------------------------------------

/// A codimension-2 subspace together with its intersection with every
/// line of the family it was found for.
struct TransversalWitness {
    Subspace h;
    std::vector<Subspace> meets;  // h meet line_k, nonempty by construction
};

inline TransversalWitness make_witness(const Field& F, Subspace h, const std::vector<Subspace>& lines) {
    TransversalWitness w{std::move(h), {}};
    for (const auto& line : lines) {
        Subspace m = meet(F, w.h, line);
        if (m.is_empty()) throw std::logic_error("claimed transversal misses a line");
        w.meets.push_back(std::move(m));
    }
    return w;
}

/// First codimension-2 subspace, in enumeration order, meeting every line
/// of the family.  Pure geometric streaming; cost ~ [d+1 choose 2]_q
/// rank computations.
inline std::optional<TransversalWitness> find_transversal_geometric(const LineSet& ls,
                                                                    const Budget& budget = {}) {
    const Space& sp = ls.space;
    const Field& F = sp.field;
    std::optional<TransversalWitness> out;
    for_each_subspace(sp, sp.dim - 2, budget, [&](const Subspace& h) {
        for (const auto& line : ls.lines)
            if (!meets(F, h, line)) return true;
        out = make_witness(F, h, ls.lines);
        return false;
    });
    return out;
}

/// All projective solutions H of the linear system <H, L_k> = 0 over the
/// family's lines that also satisfy the quadratic decomposability
/// relations.  Throws BudgetError when the nullspace has more projective
/// points than budget.max_pluecker_points.
inline std::vector<PlueckerVector> pluecker_transversal_solutions(const LineSet& ls,
                                                                  const Budget& budget = {}) {
    const Space& sp = ls.space;
    const Field& F = sp.field;
    const std::size_t n = sp.ncoords();

    Mat sys;
    sys.cols = pair_count(n);
    for (const auto& line : ls.lines) sys.append_row(line_pluecker(F, line).coords);
    const Mat null = kernel(F, sys);

    BigInt npoints = 0;
    if (null.rows > 0) {
        npoints = (boost::multiprecision::pow(BigInt(F.size()), static_cast<unsigned>(null.rows)) - 1) / (BigInt(F.size()) - 1);
        if (npoints > budget.max_pluecker_points)
            throw BudgetError("nullspace has " + npoints.str() + " projective points, budget is " +
                              budget.max_pluecker_points.str());
    }

    std::vector<PlueckerVector> sols;
    if (null.rows == 0) return sols;
    for (const Vec& v : points_on(F, Subspace::from_rref(null))) {
        PlueckerVector cand{n, v};
        if (satisfies_pluecker_relations(F, cand)) sols.push_back(std::move(cand));
    }
    return sols;
}

/// Coordinate-based transversal finder: solves the linear system, filters
/// by the quadratic relations, decomposes the first survivor.  Falls back
/// to the geometric finder when the nullspace is over budget.  Existence
/// always agrees with find_transversal_geometric; the witness itself may
/// differ (different enumeration orders).
inline std::optional<TransversalWitness> find_transversal_pluecker(const LineSet& ls,
                                                                   const Budget& budget = {}) {
    std::vector<PlueckerVector> sols;
    try {
        sols = pluecker_transversal_solutions(ls, budget);
    } catch (const BudgetError&) {
        return find_transversal_geometric(ls, budget);
    }
    for (const auto& s : sols) {
        auto line = pluecker_line(ls.space.field, s);
        if (!line) continue;  // relations filtered already; defensive
        Subspace h = Subspace::from_rref(kernel(ls.space.field, line->mat()));
        return make_witness(ls.space.field, std::move(h), ls.lines);
    }
    return std::nullopt;
}

/// Constructive transversal for families of at most floor(d/2) + d - 1
/// lines: span the first floor(d/2) lines, extend the span to a
/// hyperplane Pi (every spanned line now lies inside Pi), pick the
/// meeting point Pi meet l for each remaining line, and extend the span
/// of those points inside Pi to codimension 2.  The result meets every
/// line and is re-verified before returning.
inline TransversalWitness build_transversal_small(const LineSet& ls) {
    const Space& sp = ls.space;
    const Field& F = sp.field;
    const std::size_t d = static_cast<std::size_t>(sp.dim);
    const std::size_t bound = d / 2 + d - 1;
    if (ls.lines.empty() || ls.lines.size() > bound)
        throw std::invalid_argument("constructive transversal needs 1.." + std::to_string(bound) + " lines");

    const std::size_t head = std::min(d / 2, ls.lines.size());

    // Rows spanning the first `head` lines, extended to a hyperplane by
    // unit vectors.
    Mat pi;
    pi.cols = sp.ncoords();
    for (std::size_t i = 0; i < head; ++i) pi = stacked(pi, ls.lines[i].mat());
    rref_in_place(F, pi);
    for (std::size_t u = 0; u < sp.ncoords() && pi.rows < d; ++u) {
        Vec e(sp.ncoords(), F.zero());
        e[u] = F.one();
        Mat ext = pi;
        ext.append_row(e);
        if (rref_in_place(F, ext) > pi.rows) pi = std::move(ext);
    }
    const Subspace Pi = Subspace::from_rref(pi);

    // Meeting points of the remaining lines with Pi, then extension inside
    // Pi to linear rank d-1.
    Mat h;
    h.cols = sp.ncoords();
    for (std::size_t i = head; i < ls.lines.size(); ++i) {
        const Subspace m = meet(F, Pi, ls.lines[i]);
        if (m.is_empty()) throw std::logic_error("hyperplane misses a line");
        h.append_row(m.row(0));
    }
    rref_in_place(F, h);
    if (h.rows > d - 1) throw std::logic_error("meeting points span too much");  // cannot happen within the bound
    for (std::size_t r = 0; r < Pi.rank() && h.rows < d - 1; ++r) {
        Mat ext = h;
        ext.append_row(Pi.row(r));
        if (rref_in_place(F, ext) > h.rows) h = std::move(ext);
    }
    return make_witness(F, Subspace::from_rref(h), ls.lines);  // re-verifies incidence
}

// ---------------------------------------------------------------------------
// Consistency of the generation criterion
// ---------------------------------------------------------------------------

/// Joint run of the generator check and both transversal finders, with
/// the two implications that must never fail:
///   - no transversal         => the family generates;
///   - generates + transversal => the family has at least q+1 lines.
struct SufficiencyReport {
    bool generator = false;
    bool transversal_geometric = false;
    bool transversal_pluecker = false;
    bool finders_agree = false;
    bool implication_holds = false;  // no transversal => generator
    bool size_bound_holds = false;   // generator and transversal => |L| >= q+1
    bool consistent = false;
};

inline SufficiencyReport check_sufficiency(const LineSet& ls, const Budget& budget = {}) {
    SufficiencyReport rep;
    rep.generator = is_generator_lineset(ls).verdict;
    rep.transversal_geometric = find_transversal_geometric(ls, budget).has_value();
    rep.transversal_pluecker = find_transversal_pluecker(ls, budget).has_value();
    rep.finders_agree = rep.transversal_geometric == rep.transversal_pluecker;
    rep.implication_holds = rep.transversal_geometric || rep.generator;
    rep.size_bound_holds = !(rep.generator && rep.transversal_geometric) ||
                           ls.lines.size() >= ls.space.field.size() + 1;
    rep.consistent = rep.finders_agree && rep.implication_holds && rep.size_bound_holds;
    return rep;
}

// ---------------------------------------------------------------------------
// Subspace-design measurement
// ---------------------------------------------------------------------------

/// Measured design parameter: the maximum over all s-dimensional W of the
/// number of members meeting W nontrivially (weak) or of the sum of the
/// intersection dimensions (strong), with the first maximizing W kept as
/// witness.  The claimed bound is the exact rational num/den for the
/// family's construction; satisfaction is decided by cross-multiplication.
struct DesignReport {
    std::string mode;  // "weak" or "strong"
    unsigned s = 0;
    std::uint64_t measured = 0;
    Subspace witness;
    std::uint64_t bound_num = 0;
    std::uint64_t bound_den = 1;
    bool bound_satisfied = false;
};

/// Claimed strong bound for a family, as an exact fraction:
///   evaluation kernels: s(2d - s + 1) / (2 r (t - s + 1)),
///   multiplicity kernels: s(d - s + 1) / (t - s + 1).
inline std::pair<std::uint64_t, std::uint64_t> design_bound(const DesignFamily& fam, unsigned s) {
    const auto& p = fam.params;
    if (s > p.t) throw std::invalid_argument("measurement strength must satisfy s <= t");
    const std::uint64_t d = static_cast<std::uint64_t>(p.d);
    if (fam.mode == "frs") return {s * (2 * d - s + 1), 2ull * p.r * (p.t - s + 1)};
    if (fam.mode == "mult") return {s * (d - s + 1), p.t - s + 1};
    throw std::invalid_argument("unknown design mode: " + fam.mode);
}

inline DesignReport design_measure(const DesignFamily& fam, unsigned s, const std::string& mode,
                                   const Budget& budget = {}) {
    if (s == 0) throw std::invalid_argument("design strength must be positive");
    const bool strong = mode == "strong";
    if (!strong && mode != "weak") throw std::invalid_argument("design mode must be weak or strong");
    const Field& F = fam.params.base;
    const Space sp(F, fam.params.d);

    DesignReport rep;
    rep.mode = mode;
    rep.s = s;
    std::tie(rep.bound_num, rep.bound_den) = design_bound(fam, s);

    // s-dimensional linear subspaces of GF(q)^{d+1} are exactly the
    // rank-s canonical row spaces, i.e. the (s-1)-dimensional projective
    // subspaces.
    for_each_subspace(sp, static_cast<int>(s) - 1, budget, [&](const Subspace& w) {
        std::uint64_t value = 0;
        for (const auto& member : fam.members) {
            const std::size_t inter =
                member.space.rank() + s - rank_of(F, stacked(member.space.mat(), w.mat()));
            value += strong ? inter : (inter > 0 ? 1 : 0);
        }
        if (value > rep.measured || rep.witness.ncoords() == 0) {
            rep.measured = value;
            rep.witness = w;
        }
        return true;
    });
    rep.bound_satisfied = rep.measured * rep.bound_den <= rep.bound_num;
    return rep;
}

// ---------------------------------------------------------------------------
// Determinant degree bounds
// ---------------------------------------------------------------------------

/// Degree of the s x s determinant built from a basis of an s-dimensional
/// polynomial subspace: row i holds P_j(X w^i) in frs mode (w generates
/// the multiplicative group) and the i-th formal derivatives in mult
/// mode.  The basis is first echelonized to strictly increasing degrees.
/// Bounds: ds - s(s-1)/2 (frs), s(d - s + 1) (mult); the determinant must
/// also be nonzero for the verdict to hold.
struct WronskianReport {
    int degree = -1;  // -1 means the determinant vanished
    std::uint64_t bound = 0;
    bool nonzero = false;
    bool within_bound = false;
};

inline WronskianReport wronskian_degree_check(const Field& F, std::vector<Poly> basis,
                                              const std::string& mode, int d) {
    const std::size_t s = basis.size();
    if (s == 0) throw std::invalid_argument("empty basis");
    for (const auto& p : basis)
        if (p.degree() > d) throw std::invalid_argument("basis degree exceeds d");
    basis = poly_echelonize(F, std::move(basis));  // throws if dependent

    std::vector<std::vector<Poly>> m(s, std::vector<Poly>(s));
    if (mode == "frs") {
        const Scalar w = F.primitive_element();
        for (std::size_t i = 0; i < s; ++i) {
            const Scalar wi = F.pow(w, static_cast<std::int64_t>(i));
            for (std::size_t j = 0; j < s; ++j) m[i][j] = poly_dilate(F, basis[j], wi);
        }
    } else if (mode == "mult") {
        for (std::size_t j = 0; j < s; ++j) {
            m[0][j] = basis[j];
            for (std::size_t i = 1; i < s; ++i) m[i][j] = poly_derivative(F, m[i - 1][j]);
        }
    } else {
        throw std::invalid_argument("mode must be frs or mult");
    }

    WronskianReport rep;
    const Poly L = poly_det(F, m);
    rep.degree = L.degree();
    rep.nonzero = !L.is_zero();
    const std::uint64_t du = static_cast<std::uint64_t>(d);
    rep.bound = mode == "frs" ? du * s - s * (s - 1) / 2 : s * (du - s + 1);
    rep.within_bound = rep.nonzero && static_cast<std::uint64_t>(rep.degree) <= rep.bound;
    return rep;
}

// ---------------------------------------------------------------------------
// Minimal-family search
// ---------------------------------------------------------------------------

struct SearchReport {
    bool found = false;
    std::vector<std::size_t> best;        // line indices into the searched pool
    std::size_t certified_none_below = 0; // every smaller size was exhausted without a hit
    bool partial = false;                 // budget truncated the requested size range
    std::uint64_t subsets_checked = 0;
    std::uint64_t subsets_pruned = 0;     // skipped via a cached transversal (size <= q only)
    std::uint64_t suff_violations = 0;    // no transversal and not a generator (must stay 0)
    std::uint64_t size_bound_violations = 0;  // generator + transversal at size <= q (must stay 0)
};

namespace detail {

// Quick generator verdict with early exit; no histogram bookkeeping.
inline bool generates_all_hyperplanes(const Space& sp, const std::vector<Subspace>& lines) {
    const std::size_t want = sp.ncoords() - 1;
    bool ok = true;
    for_each_hyperplane(sp, [&](const Vec& h) {
        if (trace_rank(sp.field, lines, h, nullptr) < want) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

}  // namespace detail

/// Exhaustive search for the smallest generating subfamily among all
/// lines of PG(d,q): k-subsets in lexicographic index order for
/// k = 1..max_size.  Codimension-2 transversals found along the way are
/// cached (move-to-front); a subset whose lines all meet a cached
/// transversal is skipped when its size is at most q, at which size a
/// transversal rules out generation.  Incidence inside the hot loops uses
/// the coordinate pairing.  Every non-pruned subset feeds the two
/// consistency tallies.  Throws BudgetError when the subset count exceeds
/// the budget.
inline SearchReport search_minimal_generator_exhaustive(const Space& sp, std::size_t max_size,
                                                        const Budget& budget = {}) {
    const Field& F = sp.field;
    const std::vector<Subspace> pool = all_subspaces(sp, 1, budget);

    // Largest size whose cumulative subset count still fits the budget.
    // Sizes beyond it are not searched; the report flags the truncation.
    std::size_t reachable = 0;
    BigInt planned = 0;
    for (std::size_t k = 1; k <= max_size; ++k) {
        BigInt c = 1;
        for (std::size_t i = 0; i < k; ++i) c = c * (pool.size() - i) / (i + 1);
        if (planned + c > budget.max_subspaces) break;
        planned += c;
        reachable = k;
    }
    if (reachable == 0)
        throw BudgetError("even the " + std::to_string(pool.size()) +
                          " single-line subsets exceed the budget of " +
                          budget.max_subspaces.str());

    const std::vector<Subspace> tpool = all_subspaces(sp, sp.dim - 2, budget);
    std::vector<Vec> pool_pl, tpool_pl;  // line / dual pair coordinates
    pool_pl.reserve(pool.size());
    for (const auto& l : pool) pool_pl.push_back(line_pluecker(F, l).coords);
    tpool_pl.reserve(tpool.size());
    for (const auto& h : tpool) tpool_pl.push_back(codim2_pluecker(F, h).coords);

    auto incident = [&](std::size_t hi, std::size_t li) {
        return dot(F, tpool_pl[hi], pool_pl[li]).v == 0;
    };

    SearchReport rep;
    std::vector<std::size_t> cache;  // indices into tpool, most recent hit first
    const std::uint64_t q = F.size();

    rep.partial = reachable < max_size && pool.size() > reachable;
    for (std::size_t k = 1; k <= reachable && !rep.found; ++k) {
        if (pool.size() < k) break;
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            bool pruned = false;
            if (k <= q) {
                for (std::size_t c = 0; c < cache.size(); ++c) {
                    bool all = true;
                    for (auto li : idx)
                        if (!incident(cache[c], li)) {
                            all = false;
                            break;
                        }
                    if (all) {
                        std::rotate(cache.begin(), cache.begin() + c, cache.begin() + c + 1);
                        pruned = true;
                        break;
                    }
                }
            }

            if (pruned) {
                ++rep.subsets_pruned;
            } else {
                ++rep.subsets_checked;
                std::vector<Subspace> lines;
                for (auto i : idx) lines.push_back(pool[i]);
                const bool gen = detail::generates_all_hyperplanes(sp, lines);
                std::size_t trans = tpool.size();
                for (std::size_t hi = 0; hi < tpool.size(); ++hi) {
                    bool all = true;
                    for (auto li : idx)
                        if (!incident(hi, li)) {
                            all = false;
                            break;
                        }
                    if (all) {
                        trans = hi;
                        break;
                    }
                }
                const bool has_trans = trans != tpool.size();
                if (has_trans && std::find(cache.begin(), cache.end(), trans) == cache.end())
                    cache.insert(cache.begin(), trans);
                if (!gen && !has_trans) ++rep.suff_violations;
                if (gen && has_trans && k <= q) ++rep.size_bound_violations;
                if (gen) {
                    rep.found = true;
                    rep.best = idx;
                    break;
                }
            }

            std::size_t i = k;
            while (i > 0) {
                --i;
                if (idx[i] != i + pool.size() - k) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = k + 1;  // signal exhaustion
                    break;
                }
            }
            if (i == k + 1) break;
        }
        if (!rep.found) rep.certified_none_below = k + 1;
    }
    if (rep.found) {
        rep.certified_none_below = rep.best.size();
        rep.partial = false;  // the hit makes the uncovered larger sizes moot
    }
    return rep;
}

/// Seeded random sampling: `restarts` draws of `size` distinct pool lines,
/// reporting the first generating draw.  No minimality certificate.
inline SearchReport search_minimal_generator_random(const Space& sp, std::size_t size,
                                                    std::uint64_t restarts, std::uint64_t seed,
                                                    const Budget& budget = {}) {
    const std::vector<Subspace> pool = all_subspaces(sp, 1, budget);
    if (size > pool.size()) throw std::invalid_argument("sample size exceeds the number of lines");
    std::mt19937_64 rng(seed);

    SearchReport rep;
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<Subspace> lines;
    for (std::uint64_t trial = 0; trial < restarts && !rep.found; ++trial) {
        for (std::size_t i = 0; i < size; ++i)  // partial Fisher-Yates; modulo draw keeps
            std::swap(idx[i], idx[i + rng() % (idx.size() - i)]);  // output library-independent
        lines.clear();
        for (std::size_t i = 0; i < size; ++i) lines.push_back(pool[idx[i]]);
        ++rep.subsets_checked;
        if (detail::generates_all_hyperplanes(sp, lines)) {
            rep.found = true;
            rep.best.assign(idx.begin(), idx.begin() + size);
            std::sort(rep.best.begin(), rep.best.end());
        }
    }
    return rep;
}

}  // namespace higgledy
