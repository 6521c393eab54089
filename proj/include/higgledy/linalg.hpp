/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over GF(q): RREF, rank, kernels.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "higgledy/field.hpp"

namespace higgledy {

using Vec = std::vector<Scalar>;

/// Row-major dense matrix of field elements.  All algorithms take the
/// owning Field explicitly; mixing matrices from different fields is the
/// caller's bug.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Scalar at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    Vec row(std::size_t r) const { return Vec(a.begin() + r * cols, a.begin() + (r + 1) * cols); }

    void append_row(const Vec& v) {
        if (cols == 0) cols = v.size();
        if (v.size() != cols) throw std::invalid_argument("row length mismatch");
        a.insert(a.end(), v.begin(), v.end());
        ++rows;
    }

    static Mat from_rows(const std::vector<Vec>& rows_in) {
        Mat m;
        for (const auto& r : rows_in) m.append_row(r);
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) = default;
};

inline Scalar dot(const Field& F, const Vec& x, const Vec& y) {
    Scalar s = F.zero();
    for (std::size_t i = 0; i < x.size(); ++i) s = F.add(s, F.mul(x[i], y[i]));
    return s;
}

inline bool is_zero(const Vec& v) {
    for (Scalar s : v)
        if (s.v != 0) return false;
    return true;
}

/// Scales v so its first nonzero entry is 1.  No-op on the zero vector.
inline void normalize(const Field& F, Vec& v) {
    for (Scalar s : v) {
        if (s.v != 0) {
            if (s != F.one()) {
                const Scalar c = F.inv(s);
                for (auto& x : v) x = F.mul(x, c);
            }
            return;
        }
    }
}

/// In-place reduced row echelon form.  Returns the rank; zero rows are
/// dropped, so on return m.rows == rank.
inline std::size_t rref_in_place(const Field& F, Mat& m) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows && m.at(sel, col).v == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
        const Scalar piv = m.at(pivot_row, col);
        if (piv != F.one()) {
            const Scalar c = F.inv(piv);
            for (std::size_t j = col; j < m.cols; ++j) m.at(pivot_row, j) = F.mul(m.at(pivot_row, j), c);
        }
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == pivot_row) continue;
            const Scalar f = m.at(r, col);
            if (f.v == 0) continue;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(f, m.at(pivot_row, j)));
        }
        ++pivot_row;
    }
    m.a.resize(pivot_row * m.cols);
    m.rows = pivot_row;
    return pivot_row;
}

inline std::size_t rank_of(const Field& F, Mat m) { return rref_in_place(F, m); }

/// Pivot columns of a matrix already in RREF.
inline std::vector<std::size_t> pivot_columns(const Mat& m) {
    std::vector<std::size_t> piv;
    piv.reserve(m.rows);
    std::size_t col = 0;
    for (std::size_t r = 0; r < m.rows; ++r) {
        while (col < m.cols && m.at(r, col).v == 0) ++col;
        piv.push_back(col);
    }
    return piv;
}

/// Basis of the right null space {x : m x = 0}, one vector per free
/// column, as an RREF matrix.  Input need not be in RREF.
inline Mat kernel(const Field& F, Mat m) {
    rref_in_place(F, m);
    const auto piv = pivot_columns(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : piv) is_pivot[c] = true;

    Mat ker;
    ker.cols = m.cols;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec x(m.cols, F.zero());
        x[c] = F.one();
        for (std::size_t r = 0; r < m.rows; ++r) x[piv[r]] = F.neg(m.at(r, c));
        ker.append_row(x);
    }
    rref_in_place(F, ker);
    return ker;
}

/// Rows of x followed by rows of y.
inline Mat stacked(const Mat& x, const Mat& y) {
    if (x.cols != y.cols && x.rows != 0 && y.rows != 0) throw std::invalid_argument("ambient mismatch");
    Mat m = x;
    m.cols = x.rows ? x.cols : y.cols;
    m.a.insert(m.a.end(), y.a.begin(), y.a.end());
    m.rows += y.rows;
    return m;
}

}  // namespace higgledy
