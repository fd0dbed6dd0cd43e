#include "hypersym/snf.hpp"

#include <cstdlib>

namespace hypersym {

Int BigIntMatrix::determinant() const {
    assert(rows_ == cols_);
    std::size_t n = rows_;
    if (n == 0) return 1;
    if (n == 1) return at(0, 0);
    Int det = 0;
    BigIntMatrix minor(n - 1, n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        if (at(0, k) == 0) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                minor.at(i - 1, jj++) = at(i, j);
            }
        }
        Int term = at(0, k) * minor.determinant();
        if (k % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

namespace {

// Nearest-integer quotient; keeps entry growth moderate during reduction.
Int rounded_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > abs(b)) q += 1;
    return q;
}

}  // namespace

SNFResult smith_normal_form(const BigIntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    BigIntMatrix w = a;
    SNFResult res;
    res.u = BigIntMatrix::identity(m);
    res.v = BigIntMatrix::identity(n);
    res.v_inv = BigIntMatrix::identity(n);

    // Column op col_a += q*col_b on w and v corresponds to
    // row_b -= q*row_a on v_inv.
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        w.add_col(dst, src, q);
        res.v.add_col(dst, src, q);
        res.v_inv.add_row(src, dst, -q);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        w.swap_cols(x, y);
        res.v.swap_cols(x, y);
        res.v_inv.swap_rows(x, y);
    };
    auto negate_col = [&](std::size_t x) {
        w.negate_col(x);
        res.v.negate_col(x);
        res.v_inv.negate_row(x);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        // Locate pivot: minimal |entry| != 0, lowest (i, j) tie-break.
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Int& e = w.at(i, j);
                if (e == 0) continue;
                Int ae = abs(e);
                if (!found || ae < best) {
                    found = true;
                    best = ae;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;  // remaining block is zero

        w.swap_rows(t, pi);
        res.u.swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot.
            bool reduced = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.at(i, t) == 0) continue;
                Int q = rounded_quotient(w.at(i, t), w.at(t, t));
                w.add_row(i, t, -q);
                res.u.add_row(i, t, -q);
                if (w.at(i, t) != 0) {
                    // Remainder is strictly smaller; promote it to pivot.
                    w.swap_rows(t, i);
                    res.u.swap_rows(t, i);
                    reduced = true;
                }
            }
            if (reduced) continue;
            // Clear row t right of the pivot.
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.at(t, j) == 0) continue;
                Int q = rounded_quotient(w.at(t, j), w.at(t, t));
                add_col(j, t, -q);
                if (w.at(t, j) != 0) {
                    swap_cols(t, j);
                    reduced = true;
                }
            }
            if (reduced) continue;

            // Row and column are clear; enforce pivot | remaining block.
            bool fixed_up = false;
            for (std::size_t i = t + 1; i < m && !fixed_up; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (w.at(i, j) % w.at(t, t) != 0) {
                        w.add_row(t, i, 1);
                        res.u.add_row(t, i, 1);
                        fixed_up = true;
                        break;
                    }
                }
            if (!fixed_up) break;
        }

        if (w.at(t, t) < 0) {
            negate_col(t);
        }
    }

    res.d.resize(steps);
    res.rank = 0;
    for (std::size_t t = 0; t < steps; ++t) {
        res.d[t] = w.at(t, t);
        if (res.d[t] != 0) res.rank = t + 1;
    }
    return res;
}

}  // namespace hypersym
