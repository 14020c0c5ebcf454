#pragma once

#include "binomial.hpp"

#include <string>

namespace toric {

struct Lineage {
    int parent = -1;
    IMat substitution;  // exponent map of the blow-up: a' = a * substitution
    int coordinate = -1;
};

// An affine chart: coordinates 0..n-1, boundary coordinates E, exceptional subset H.
// rays[i] is the fan ray of coordinate i expressed in root coordinates, and labels[i]
// is the depth at which that divisor was created (0 for divisors of the root chart).
struct Chart {
    int id = 0;
    std::size_t n = 0;
    IndexSet E;
    IndexSet H;
    std::vector<std::string> names;
    std::optional<Lineage> lineage;
    IMat rays;
    std::vector<int> labels;
    int depth = 0;

    static Chart root(std::size_t n, IndexSet e, std::vector<std::string> names = {}) {
        Chart c;
        c.n = n;
        c.E = std::move(e);
        if (names.empty())
            for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
        c.names = std::move(names);
        c.rays = identity(n);
        c.labels.assign(n, 0);
        return c;
    }
};

inline Chart localize(const Chart& c, const IndexSet& s) {
    for (int j : s)
        if (!contains(c.E, j)) throw Error("stratum is not contained in the boundary set");
    Chart r = c;
    r.E = s;
    r.H = set_intersection(c.H, s);
    return r;
}

struct EmbeddingState {
    Chart chart;
    Lattice lattice;  // in chart coordinates, saturated
    std::size_t dim_x = 0;

    EmbeddingState() = default;
    EmbeddingState(Chart c, Lattice l) : chart(std::move(c)), lattice(std::move(l)) {
        dim_x = chart.n - lattice.rank();
    }
};

inline HyperbolicIdeal minimal_transversal_envelope(const EmbeddingState& st, const IndexSet& s) {
    Lattice l0 = max_transversal_sublattice(st.lattice, s);
    return HyperbolicIdeal{l0, hyperbolic_basis(l0, s)};
}

inline std::size_t hcodim(const EmbeddingState& st, const IndexSet& s) {
    return st.lattice.rank() - max_transversal_sublattice(st.lattice, s).rank();
}

// The ideal of X inside V written in intrinsic coordinates of V.
struct RelativeIdeal {
    BinomialIdeal ideal;
    Lattice lattice;
    std::vector<int> source;  // original coordinate of each new coordinate, -1 for eliminated combinations
    IndexSet E;               // boundary coordinates surviving in the new chart
    IMat projection;          // composite map Z^n -> Z^(n-rank V), applied to column vectors
};

inline RelativeIdeal relative_ideal(const EmbeddingState& st, const HyperbolicIdeal& v) {
    const std::size_t n = st.chart.n;
    if (!st.lattice.contains(v.lattice)) throw Error("envelope lattice is not contained in the lattice of X");
    IMat proj = identity(n);  // rows: current coordinates as functionals on Z^n
    std::vector<int> source = range_set(static_cast<int>(n));
    IMat pending = v.basis;
    std::size_t dim = n;
    while (!pending.empty()) {
        // Image of the next basis vector in the current coordinates.
        IVec alpha = zero_vec(dim);
        for (std::size_t i = 0; i < dim; ++i) alpha[i] = dot(proj[i], pending.front());
        pending.erase(pending.begin());
        std::vector<std::size_t> order, rest;
        for (std::size_t i = 0; i < dim; ++i) (alpha[i] != 0 ? order : rest).push_back(i);
        const std::size_t m = order.size();
        order.insert(order.end(), rest.begin(), rest.end());
        IVec permuted;
        for (auto i : order) permuted.push_back(alpha[i]);
        IMat a = kernel_projection(permuted, m);
        IMat next;
        std::vector<int> next_source;
        for (std::size_t r = 0; r + 1 < dim; ++r) {
            IVec row = zero_vec(n);
            for (std::size_t k = 0; k < dim; ++k)
                if (a[r][k] != 0) row = add(row, scale(proj[order[k]], a[r][k]));
            next.push_back(row);
            next_source.push_back(r + 1 >= m ? source[order[r + 1]] : -1);
        }
        proj = std::move(next);
        source = std::move(next_source);
        --dim;
    }
    IMat images;
    for (const auto& b : st.lattice.basis()) {
        IVec img = zero_vec(dim);
        for (std::size_t i = 0; i < dim; ++i) img[i] = dot(proj[i], b);
        images.push_back(img);
    }
    Lattice lx = Lattice::from_generators(dim, images);
    IndexSet e;
    for (std::size_t i = 0; i < dim; ++i)
        if (source[i] >= 0 && contains(st.chart.E, source[i])) e.push_back(static_cast<int>(i));
    return RelativeIdeal{lattice_ideal(lx), lx, source, e, proj};
}

// Smallest root-chart stratum containing the image of a chart stratum.
inline IndexSet root_image(const Chart& c, const IndexSet& s) {
    IndexSet r;
    for (int j : s)
        for (std::size_t k = 0; k < c.n; ++k)
            if (c.rays[static_cast<std::size_t>(j)][k] != 0) r.push_back(static_cast<int>(k));
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

}  // namespace toric
