#pragma once

#include "toric/io.hpp"

#include <functional>
#include <random>

namespace toric::testing {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }

inline IVec random_vec(Rng& rng, std::size_t n, long long lo, long long hi) {
    IVec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(Int(uniform(rng, lo, hi)));
    return v;
}

inline IMat random_mat(Rng& rng, std::size_t rows, std::size_t n, long long lo, long long hi) {
    IMat m;
    for (std::size_t i = 0; i < rows; ++i) m.push_back(random_vec(rng, n, lo, hi));
    return m;
}

inline IndexSet random_subset(Rng& rng, std::size_t n) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
        if (uniform(rng, 0, 1)) s.push_back(static_cast<int>(i));
    return s;
}

// Saturated lattice of the given rank, generated by random vectors with entries in [-bound, bound].
inline Lattice random_saturated(Rng& rng, std::size_t n, std::size_t rank, long long bound) {
    while (true) {
        IMat g = random_mat(rng, rank, n, -bound, bound);
        if (rank_of(g) == rank) return saturate(Lattice::from_generators(n, g));
    }
}

// v lies in Sat(M) iff it lies in the rational span of M.
inline bool sat_member_oracle(const Lattice& m, const IVec& v) {
    IMat rows = m.basis();
    const std::size_t r = rank_of(rows);
    rows.push_back(v);
    return rank_of(rows) == r;
}

// Weak transversality of the span of `gens` by searching small integer combinations
// for an element nonnegative on E and positive wherever the span has support in E.
// Sound but incomplete: returns false when no witness is found in the box.
inline bool weak_transversal_witness(const IMat& gens, const IndexSet& e, long long box) {
    const std::size_t n = gens.front().size();
    IndexSet support;
    for (int j : e)
        for (const auto& g : gens)
            if (g[static_cast<std::size_t>(j)] != 0) {
                support.push_back(j);
                break;
            }
    std::vector<long long> c(gens.size(), -box);
    while (true) {
        IVec gamma = zero_vec(n);
        for (std::size_t i = 0; i < gens.size(); ++i) gamma = add(gamma, scale(gens[i], Int(c[i])));
        bool ok = true;
        for (int j : e) {
            const Int& x = gamma[static_cast<std::size_t>(j)];
            if (x < 0 || (x == 0 && contains(support, j))) ok = false;
        }
        if (ok) return true;
        std::size_t i = 0;
        while (i < c.size() && c[i] == box) c[i++] = -box;
        if (i == c.size()) return false;
        ++c[i];
    }
}

// Largest b with every term of J (monomial factor included) in the b-th power of the
// ideal of the coordinates in S, found by testing divisibility by every monomial of degree b.
inline Int eord_brute_force(const BinomialIdeal& j, const IndexSet& s) {
    std::vector<IVec> terms;
    for (const auto& g : j.gens) {
        terms.push_back(add(g.plus, j.monomial_factor));
        terms.push_back(add(g.minus, j.monomial_factor));
    }
    auto divisible_by_some = [&](const IVec& t, int b) {
        // search for an exponent vector d on S with |d| = b and d <= t
        std::function<bool(std::size_t, Int)> rec = [&](std::size_t i, Int left) -> bool {
            if (i == s.size()) return left == 0;
            const Int& cap = t[static_cast<std::size_t>(s[i])];
            for (Int x = 0; x <= left && x <= cap; ++x)
                if (rec(i + 1, left - x)) return true;
            return false;
        };
        return rec(0, b);
    };
    int b = 0;
    while (true) {
        for (const auto& t : terms)
            if (!divisible_by_some(t, b + 1)) return Int(b);
        ++b;
    }
}

inline IVec permute(const IVec& v, const std::vector<int>& perm) {
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[static_cast<std::size_t>(perm[i])] = v[i];
    return r;
}

// Shape of the subtree below a chart together with the invariant values, independent
// of the order of coordinates and of sibling charts.
inline std::string tree_signature(const ResolutionTree& t, int id = 0) {
    const auto& n = t.nodes[static_cast<std::size_t>(id)];
    std::string s = "(" + (n.max ? to_string(*n.max) : std::string("-"));
    if (n.step >= 0) s += " c" + std::to_string(n.center.size());
    std::vector<std::string> kids;
    for (int c : n.children) kids.push_back(tree_signature(t, c));
    std::sort(kids.begin(), kids.end());
    for (const auto& k : kids) s += k;
    return s + ")";
}

inline std::vector<std::string> step_values(const ResolutionTree& t) {
    std::vector<std::string> v;
    for (const auto& s : t.steps) v.push_back(to_string(s.value));
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace toric::testing
