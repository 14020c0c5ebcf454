#pragma once

#include "numeric.hpp"

#include <set>

namespace toric {

// g is conformal to s: same sign pattern and no larger in absolute value, coordinatewise.
inline bool conformal(const IVec& g, const IVec& s) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) continue;
        if (g[i] > 0 ? (s[i] < g[i]) : (s[i] > g[i])) return false;
    }
    return true;
}

// Sign representative: first nonzero entry positive.
inline IVec sign_normalize(IVec v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0) v = negate(v);
        break;
    }
    return v;
}

// Graver basis of the lattice spanned by `gens` by completion with conformal reduction.
// Returns one representative per sign pair, sorted.
inline IMat graver_basis(const IMat& gens) {
    std::vector<IVec> g;
    std::set<IVec> seen;
    auto push = [&](const IVec& v) {
        if (seen.insert(v).second) g.push_back(v);
    };
    for (const auto& v : gens) {
        if (is_zero(v)) continue;
        push(v);
        push(negate(v));
    }
    std::vector<IVec> pending;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pending.push_back(add(g[i], g[j]));
    while (!pending.empty()) {
        IVec s = std::move(pending.back());
        pending.pop_back();
        bool changed = true;
        while (changed && !is_zero(s)) {
            changed = false;
            for (const auto& h : g)
                if (conformal(h, s)) {
                    s = sub(s, h);
                    changed = true;
                    break;
                }
        }
        if (is_zero(s) || seen.count(s)) continue;
        for (const auto& h : g) pending.push_back(add(s, h));
        push(s);
    }
    std::set<IVec> out;
    for (const auto& v : g) {
        bool minimal = true;
        for (const auto& h : g)
            if (h != v && conformal(h, v)) {
                minimal = false;
                break;
            }
        if (minimal) out.insert(sign_normalize(v));
    }
    return IMat(out.begin(), out.end());
}

}  // namespace toric
