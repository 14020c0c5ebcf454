#pragma once

#include "graver.hpp"
#include "lattice.hpp"

#include <optional>

namespace toric {

struct Binomial {
    IVec plus;
    IVec minus;

    static Binomial from_vector(const IVec& u) {
        Binomial b{zero_vec(u.size()), zero_vec(u.size())};
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] > 0) b.plus[i] = u[i];
            if (u[i] < 0) b.minus[i] = -u[i];
        }
        return b;
    }

    IVec vector() const { return sub(plus, minus); }
    std::size_t dim() const { return plus.size(); }

    friend bool operator==(const Binomial& a, const Binomial& b) { return a.plus == b.plus && a.minus == b.minus; }
    friend bool operator<(const Binomial& a, const Binomial& b) {
        return a.plus != b.plus ? a.plus < b.plus : a.minus < b.minus;
    }
};

struct BinomialIdeal {
    std::size_t n = 0;
    std::vector<Binomial> gens;
    IVec monomial_factor;  // exceptional monomial part, zero when trivial

    BinomialIdeal() = default;
    BinomialIdeal(std::size_t dim, std::vector<Binomial> g) : n(dim), gens(std::move(g)), monomial_factor(zero_vec(dim)) {
        for (const auto& b : gens)
            if (b.plus.size() != n || b.minus.size() != n)
                throw Error("binomial length does not match the ambient dimension");
    }

    void canonical_sort() { std::sort(gens.begin(), gens.end()); }
};

inline Lattice lattice_of_ideal(const BinomialIdeal& j) {
    IMat rows;
    for (const auto& b : j.gens) rows.push_back(b.vector());
    return Lattice::from_generators(j.n, rows);
}

// Generators of the lattice ideal I_L: one binomial per Graver element.
inline BinomialIdeal lattice_ideal(const Lattice& l) {
    std::vector<Binomial> g;
    for (const auto& v : graver_basis(l.basis())) g.push_back(Binomial::from_vector(v));
    BinomialIdeal j(l.ambient_dim(), g);
    j.canonical_sort();
    return j;
}

// Binomials x^(a_i) - 1 of a hyperbolic basis.
struct HyperbolicIdeal {
    Lattice lattice;
    IMat basis;

    std::vector<Binomial> binomials() const {
        std::vector<Binomial> r;
        for (const auto& a : basis) r.push_back(Binomial::from_vector(a));
        return r;
    }
};

inline bool binomial_member(const Binomial& b, const HyperbolicIdeal& v) { return v.lattice.contains(b.vector()); }

inline Int degree_on(const IVec& a, const IndexSet& s) {
    Int d = 0;
    for (int j : s) d += a[static_cast<std::size_t>(j)];
    return d;
}

// Order of J along the stratum where the coordinates of S vanish.
inline Int eord(const BinomialIdeal& j, const IndexSet& s) {
    if (j.gens.empty()) throw Error("order undefined for the zero ideal");
    std::optional<Int> best;
    for (const auto& b : j.gens) {
        Int o = std::min(degree_on(b.plus, s), degree_on(b.minus, s));
        if (!best || o < *best) best = o;
    }
    return *best + degree_on(j.monomial_factor, s);
}

inline std::vector<IndexSet> all_subsets(const IndexSet& e) {
    std::vector<IndexSet> out;
    const std::size_t k = e.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        IndexSet s;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) s.push_back(e[i]);
        out.push_back(s);
    }
    std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
    return out;
}

struct MaxEord {
    Int value;
    std::vector<IndexSet> strata;
};

inline MaxEord max_eord(const BinomialIdeal& j, const IndexSet& e) {
    MaxEord r{Int(-1), {}};
    for (const auto& s : all_subsets(e)) {
        Int o = eord(j, s);
        if (o > r.value) {
            r.value = o;
            r.strata.clear();
        }
        if (o == r.value) r.strata.push_back(s);
    }
    return r;
}

inline std::vector<IndexSet> esing(const BinomialIdeal& j, const IndexSet& e, const Int& c) {
    std::vector<IndexSet> r;
    for (const auto& s : all_subsets(e))
        if (eord(j, s) >= c) r.push_back(s);
    return r;
}

// Factor out the largest monomial in the H-variables dividing every generator.
inline BinomialIdeal monomial_factorize(const BinomialIdeal& j, const IndexSet& h) {
    BinomialIdeal r = j;
    if (j.gens.empty()) return r;
    for (int hj : h) {
        auto c = static_cast<std::size_t>(hj);
        Int m;
        bool first = true;
        for (const auto& b : j.gens) {
            Int v = std::min(b.plus[c], b.minus[c]);
            if (first || v < m) m = v;
            first = false;
        }
        if (m <= 0) continue;
        r.monomial_factor[c] += m;
        for (auto& b : r.gens) {
            b.plus[c] -= m;
            b.minus[c] -= m;
        }
    }
    return r;
}

// Rank of the logarithmic jacobian (rows a_i x^a - b_i x^b) at the distinguished point
// of the stratum S, where the coordinates of S are 0 and all others are 1.
inline std::size_t jacobian_rank_at_stratum(const BinomialIdeal& j, const IndexSet& s) {
    QMat rows;
    for (const auto& b : j.gens) {
        bool plus_alive = degree_on(b.plus, s) == 0;
        bool minus_alive = degree_on(b.minus, s) == 0;
        // Skip generators with a monomial factor vanishing on S (the factor kills the whole row).
        bool factor_alive = degree_on(j.monomial_factor, s) == 0;
        if (!factor_alive) continue;
        QVec row(j.n, Rat(0));
        for (std::size_t i = 0; i < j.n; ++i) {
            if (plus_alive) row[i] += Rat(b.plus[i]);
            if (minus_alive) row[i] -= Rat(b.minus[i]);
        }
        rows.push_back(row);
    }
    return rank_of(rows);
}

inline bool is_transversal_variety(const BinomialIdeal& j, const IndexSet& e) {
    return is_transversal(lattice_of_ideal(j), e);
}

}  // namespace toric
