#pragma once

// Exact linear algebra over Q.  The forward pass is fraction-free
// (Bareiss-style) over integers after clearing row denominators; back
// substitution is done over rationals.  Pivoting is deterministic: columns
// are scanned left to right, and the first row (in the order given) with a
// nonzero entry is used, so callers get reproducible echelon structure and
// reduced nullspace bases.

#include <optional>
#include <stdexcept>
#include <vector>

#include "lnd/rational.hpp"

namespace lnd {

struct QMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> a;  // row-major

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

    Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

inline QMatrix qmat_mul(const QMatrix& x, const QMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix dimension mismatch");
    QMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                if (y.at(k, j) != 0) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

namespace detail {

// Row-scale to integers (preserves the row space and the nullspace), then run
// fraction-free elimination in place.  Returns the pivot columns; `mat` is
// left in row echelon form with zeros below each pivot.
struct Echelon {
    std::vector<std::vector<Int>> m;
    std::vector<std::size_t> pivot_cols;  // pivot k lives at row k, column pivot_cols[k]
};

inline Echelon echelon_form(const QMatrix& q, std::size_t elim_cols) {
    Echelon e;
    e.m.assign(q.rows, std::vector<Int>(q.cols, 0));
    for (std::size_t i = 0; i < q.rows; ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < q.cols; ++j) {
            const Int d = rat_den(q.at(i, j));
            scale = boost::multiprecision::lcm(scale, d);
        }
        for (std::size_t j = 0; j < q.cols; ++j) {
            const Rational v = q.at(i, j) * scale;
            e.m[i][j] = rat_num(v);
        }
    }
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < elim_cols && r < q.rows; ++c) {
        std::size_t piv = r;
        while (piv < q.rows && e.m[piv][c] == 0) ++piv;
        if (piv == q.rows) continue;
        std::swap(e.m[r], e.m[piv]);
        for (std::size_t i = r + 1; i < q.rows; ++i) {
            for (std::size_t j = c + 1; j < q.cols; ++j) {
                Int num = e.m[r][c] * e.m[i][j] - e.m[i][c] * e.m[r][j];
                Int quo, rem;
                boost::multiprecision::divide_qr(num, prev, quo, rem);
                if (rem != 0) throw std::logic_error("fraction-free elimination lost exact divisibility");
                e.m[i][j] = quo;
            }
            e.m[i][c] = 0;
        }
        prev = e.m[r][c];
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace detail

// Reduced-echelon basis of the right nullspace: one vector per free column in
// ascending column order; each vector has 1 at its free column and 0 at every
// other free column.
inline std::vector<std::vector<Rational>> nullspace_reduced(const QMatrix& q) {
    auto e = detail::echelon_form(q, q.cols);
    std::vector<bool> is_pivot(q.cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < q.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(q.cols, Rational(0));
        x[f] = 1;
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            const std::size_t p = e.pivot_cols[k];
            Rational s = 0;
            for (std::size_t j = p + 1; j < q.cols; ++j)
                if (e.m[k][j] != 0 && x[j] != 0) s += Rational(e.m[k][j]) * x[j];
            x[p] = -s / Rational(e.m[k][p]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// Particular solution of M x = b with all free variables set to 0, or nullopt
// if the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_particular(const QMatrix& m,
                                                             const std::vector<Rational>& b) {
    if (b.size() != m.rows) throw std::invalid_argument("rhs length mismatch");
    QMatrix aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto e = detail::echelon_form(aug, m.cols);
    for (std::size_t i = e.pivot_cols.size(); i < m.rows; ++i)
        if (e.m[i][m.cols] != 0) return std::nullopt;

    std::vector<Rational> x(m.cols, Rational(0));
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        const std::size_t p = e.pivot_cols[k];
        Rational s = Rational(e.m[k][m.cols]);
        for (std::size_t j = p + 1; j < m.cols; ++j)
            if (e.m[k][j] != 0 && x[j] != 0) s -= Rational(e.m[k][j]) * x[j];
        x[p] = s / Rational(e.m[k][p]);
    }
    return x;
}

inline std::size_t matrix_rank(const QMatrix& m) {
    return detail::echelon_form(m, m.cols).pivot_cols.size();
}

}  // namespace lnd
