#pragma once

#include "numeric.hpp"

namespace toric {

struct HnfResult {
    IMat form;       // nonzero echelon rows
    IMat transform;  // unimodular, transform * input = form stacked over zero rows
    std::vector<std::size_t> pivots;
};

// Row-style Hermite normal form: pivots positive, entries above each pivot in [0, pivot).
inline HnfResult hnf(const IMat& input, std::size_t cols) {
    IMat a = input;
    const std::size_t m = a.size();
    IMat u = identity(m);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    auto row_combine = [&](IMat& mat, std::size_t i, std::size_t k, const Int& p, const Int& q, const Int& s,
                           const Int& t) {
        // (row_i, row_k) <- (p*row_i + q*row_k, s*row_i + t*row_k)
        for (std::size_t j = 0; j < mat[i].size(); ++j) {
            Int x = mat[i][j], y = mat[k][j];
            mat[i][j] = p * x + q * y;
            mat[k][j] = s * x + t * y;
        }
    };
    for (std::size_t c = 0; c < cols && r < m; ++c) {
        for (std::size_t k = r + 1; k < m; ++k) {
            if (a[k][c] == 0) continue;
            if (a[r][c] == 0) {
                std::swap(a[r], a[k]);
                std::swap(u[r], u[k]);
                continue;
            }
            Int x, y;
            Int g = ext_gcd(a[r][c], a[k][c], x, y);
            Int p = a[r][c] / g, q = a[k][c] / g;
            row_combine(a, r, k, x, y, -q, p);
            row_combine(u, r, k, x, y, -q, p);
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0) {
            a[r] = negate(a[r]);
            u[r] = negate(u[r]);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int f = floor_div(a[i][c], a[r][c]);
            if (f == 0) continue;
            a[i] = sub(a[i], scale(a[r], f));
            u[i] = sub(u[i], scale(u[r], f));
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return {a, u, pivots};
}

// Integer basis of {y : y * m = 0}; rows of the result form a saturated basis.
inline IMat left_kernel(const IMat& m, std::size_t cols) {
    auto h = hnf(m, cols);
    return IMat(h.transform.begin() + static_cast<std::ptrdiff_t>(h.form.size()), h.transform.end());
}

// Integer basis of {x : m * x = 0} (vectors returned as rows).
inline IMat right_kernel(const IMat& m, std::size_t cols) {
    if (m.empty()) return identity(cols);
    return left_kernel(transpose(m, cols), m.size());
}

struct SnfResult {
    IMat diag;   // same shape as input
    IMat left;   // unimodular, rows x rows
    IMat right;  // unimodular, cols x cols
    std::vector<Int> invariants;  // nonzero diagonal entries d1 | d2 | ...
};

// Smith normal form: left * input * right = diag.
inline SnfResult snf(const IMat& input, std::size_t cols) {
    const std::size_t m = input.size();
    IMat a = input;
    IMat p = identity(m), q = identity(cols);
    auto swap_cols = [&](IMat& mat, std::size_t i, std::size_t j) {
        for (auto& row : mat) std::swap(row[i], row[j]);
    };
    auto add_col = [&](IMat& mat, std::size_t dst, std::size_t src, const Int& f) {
        for (auto& row : mat) row[dst] += f * row[src];
    };
    std::size_t t = 0;
    while (t < m && t < cols) {
        // Locate the smallest nonzero entry in the remaining block.
        bool found = false;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (!found || abs_int(a[i][j]) < abs_int(a[bi][bj]))) {
                    found = true;
                    bi = i;
                    bj = j;
                }
        if (!found) break;
        std::swap(a[t], a[bi]);
        std::swap(p[t], p[bi]);
        swap_cols(a, t, bj);
        swap_cols(q, t, bj);
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (a[i][t] == 0) continue;
            Int f = a[i][t] / a[t][t];
            a[i] = sub(a[i], scale(a[t], f));
            p[i] = sub(p[i], scale(p[t], f));
            if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            Int f = a[t][j] / a[t][t];
            add_col(a, j, t, -f);
            add_col(q, j, t, -f);
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // Enforce divisibility of the remaining block by the pivot.
        bool divisible = true;
        for (std::size_t i = t + 1; i < m && divisible; ++i)
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    a[t] = add(a[t], a[i]);
                    p[t] = add(p[t], p[i]);
                    divisible = false;
                    break;
                }
        if (!divisible) continue;
        if (a[t][t] < 0) {
            a[t] = negate(a[t]);
            p[t] = negate(p[t]);
        }
        ++t;
    }
    std::vector<Int> inv;
    for (std::size_t i = 0; i < t; ++i) inv.push_back(a[i][i]);
    return {a, p, q, inv};
}

// Inverse of a unimodular matrix, computed from its Hermite form transform.
inline IMat unimodular_inverse(const IMat& m) {
    const std::size_t n = m.size();
    auto h = hnf(m, n);
    if (h.form.size() != n) throw Error("matrix is singular");
    for (std::size_t i = 0; i < n; ++i)
        if (h.form[i][i] != 1) throw Error("matrix is not unimodular");
    // form is the identity, so transform * m = I.
    return h.transform;
}

}  // namespace toric
