#pragma once

#include "chart.hpp"

namespace toric {

struct ChartTransform {
    IMat substitution;  // a' = a * substitution
    int exceptional_index = -1;
    IndexSet center;
};

inline IVec map_exponents(const ChartTransform& t, const IVec& a) { return vec_mul(a, t.substitution, a.size()); }

inline ChartTransform chart_transform(std::size_t n, const IndexSet& c, int j) {
    ChartTransform t{identity(n), j, c};
    for (int i : c) t.substitution[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    return t;
}

// One child chart per coordinate of the center; in the j-chart the j-th exponent
// becomes the sum of the exponents over the center.
inline std::vector<std::pair<Chart, ChartTransform>> blow_up_chart(const Chart& chart, const IndexSet& c) {
    if (c.empty()) throw Error("empty center");
    for (int i : c)
        if (!contains(chart.E, i)) throw Error("center is not contained in the boundary set");
    std::vector<std::pair<Chart, ChartTransform>> out;
    for (int j : c) {
        ChartTransform t = chart_transform(chart.n, c, j);
        Chart child = chart;
        child.lineage = Lineage{chart.id, t.substitution, j};
        child.H = set_union(chart.H, IndexSet{j});
        IVec ray = zero_vec(chart.n);
        for (int i : c) ray = add(ray, chart.rays[static_cast<std::size_t>(i)]);
        child.rays[static_cast<std::size_t>(j)] = ray;
        child.depth = chart.depth + 1;
        child.labels[static_cast<std::size_t>(j)] = child.depth;
        out.emplace_back(std::move(child), std::move(t));
    }
    return out;
}

inline BinomialIdeal total_transform(const BinomialIdeal& j, const ChartTransform& t) {
    BinomialIdeal r = j;
    for (auto& b : r.gens) {
        b.plus = map_exponents(t, b.plus);
        b.minus = map_exponents(t, b.minus);
    }
    r.monomial_factor = map_exponents(t, j.monomial_factor);
    return r;
}

// Total transform divided by the c-th power of the new exceptional coordinate.
inline BinomialIdeal controlled_transform(const BinomialIdeal& j, const ChartTransform& t, const Int& c) {
    BinomialIdeal r = total_transform(j, t);
    auto e = static_cast<std::size_t>(t.exceptional_index);
    Int from_factor = std::min(c, r.monomial_factor[e]);
    r.monomial_factor[e] -= from_factor;
    Int rest = c - from_factor;
    if (rest == 0) return r;
    for (auto& b : r.gens) {
        if (std::min(b.plus[e], b.minus[e]) < rest) throw Error("division not exact");
        b.plus[e] -= rest;
        b.minus[e] -= rest;
    }
    return r;
}

inline Lattice strict_transform_lattice(const Lattice& l, const ChartTransform& t) {
    IMat rows;
    for (const auto& b : l.basis()) rows.push_back(map_exponents(t, b));
    return Lattice::from_generators(l.ambient_dim(), rows);
}

}  // namespace toric
