#pragma once

#include "numeric.hpp"

#include <optional>

namespace toric {

// Maximize c.x subject to A x <= b, x >= 0, where b >= 0 so the origin is feasible.
// Dense tableau simplex over the rationals with Bland's rule; returns nullopt when unbounded.
inline std::optional<QVec> simplex_max(const QMat& a, const QVec& b, const QVec& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    for (const auto& bi : b)
        if (bi < 0) throw Error("simplex_max requires a nonnegative right-hand side");
    // Columns: n structural, m slack, then the right-hand side.
    QMat t(m + 1, QVec(n + m + 1, Rat(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];
    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter == n + m) break;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][n + m] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return std::nullopt;
        Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    QVec x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][n + m];
    return x;
}

struct ConeFace {
    IndexSet implicit;  // coordinates forced to zero on the whole cone
    QVec multiplier;    // y with (y*rows)_j >= 1 off `implicit` and >= 0 on it
};

// For the cone {y : (y*rows)_j >= 0 for j in coords}, find the implicit equalities
// and a point that is strictly positive on all other listed coordinates.
inline ConeFace cone_implicit_equalities(const IMat& rows, std::size_t cols, const IndexSet& coords) {
    const std::size_t r = rows.size();
    const std::size_t k = coords.size();
    ConeFace out;
    out.multiplier.assign(r, Rat(0));
    if (k == 0) return out;
    if (r == 0) {
        out.implicit = coords;
        return out;
    }
    (void)cols;
    // Variables: y+ (r), y- (r), t (k). Constraints: t_j - (y*rows)_j <= 0 and t_j <= 1.
    QMat a;
    QVec b;
    for (std::size_t jj = 0; jj < k; ++jj) {
        std::size_t col = static_cast<std::size_t>(coords[jj]);
        QVec row(2 * r + k, Rat(0));
        for (std::size_t i = 0; i < r; ++i) {
            row[i] = -Rat(rows[i][col]);
            row[r + i] = Rat(rows[i][col]);
        }
        row[2 * r + jj] = 1;
        a.push_back(row);
        b.push_back(0);
        QVec cap(2 * r + k, Rat(0));
        cap[2 * r + jj] = 1;
        a.push_back(cap);
        b.push_back(1);
    }
    QVec c(2 * r + k, Rat(0));
    for (std::size_t jj = 0; jj < k; ++jj) c[2 * r + jj] = 1;
    auto x = simplex_max(a, b, c);
    if (!x) throw Error("implicit-equality program unexpectedly unbounded");
    for (std::size_t jj = 0; jj < k; ++jj)
        if ((*x)[2 * r + jj] == 0) out.implicit.push_back(coords[jj]);
    for (std::size_t i = 0; i < r; ++i) out.multiplier[i] = (*x)[i] - (*x)[r + i];
    return out;
}

}  // namespace toric
