#pragma once

#include <vector>

#include "hypersym/matrix.hpp"

namespace hypersym {

// Smith normal form u*a*v = diag(d) with u, v unimodular and
// d_1 | d_2 | ... | d_rank, d_i > 0 for i < rank, 0 afterwards.
// v_inv is maintained alongside so callers can pull generators back
// through the column transform without a separate inversion.
struct SNFResult {
    std::vector<Int> d;  // length min(rows, cols)
    BigIntMatrix u;      // rows x rows
    BigIntMatrix v;      // cols x cols
    BigIntMatrix v_inv;  // cols x cols, v * v_inv = I
    std::size_t rank = 0;
};

// Deterministic: pivot is the minimal-absolute-value nonzero entry of the
// remaining block, ties broken by lowest (row, col) in row-major order.
SNFResult smith_normal_form(const BigIntMatrix& a);

}  // namespace hypersym
