#pragma once

#include "chart.hpp"

#include <compare>

namespace toric {

// Monomial-case entry (-p, r, idx).
struct Gamma {
    int p = 0;             // number of divisors needed
    Rat r;                 // their normalized exponent sum
    std::vector<int> idx;  // creation labels of those divisors, descending

    friend bool operator==(const Gamma&, const Gamma&) = default;
};

struct Entry {
    enum class Kind { gamma = 0, value = 1, infinity = 2 };
    Kind kind = Kind::infinity;
    Rat value;
    Gamma gamma;

    static Entry rational(Rat q) { return Entry{Kind::value, std::move(q), {}}; }
    static Entry monomial(Gamma g) { return Entry{Kind::gamma, Rat(0), std::move(g)}; }
    static Entry inf() { return Entry{}; }

    friend bool operator==(const Entry& a, const Entry& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::value) return a.value == b.value;
        if (a.kind == Kind::gamma) return a.gamma == b.gamma;
        return true;
    }
};

// Total order: monomial entries below every rational entry, rational below infinity.
inline int compare(const Entry& a, const Entry& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.kind == Entry::Kind::value) return a.value < b.value ? -1 : (b.value < a.value ? 1 : 0);
    if (a.kind == Entry::Kind::gamma) {
        if (a.gamma.p != b.gamma.p) return a.gamma.p > b.gamma.p ? -1 : 1;
        if (a.gamma.r != b.gamma.r) return a.gamma.r < b.gamma.r ? -1 : 1;
        if (a.gamma.idx != b.gamma.idx) return a.gamma.idx < b.gamma.idx ? -1 : 1;
    }
    return 0;
}

inline int compare(const std::vector<Entry>& a, const std::vector<Entry>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (int c = compare(a[i], b[i])) return c;
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

struct InvariantValue {
    std::size_t hcodim = 0;
    std::vector<Entry> entries;

    friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

inline int compare(const InvariantValue& a, const InvariantValue& b) {
    if (a.hcodim != b.hcodim) return a.hcodim < b.hcodim ? -1 : 1;
    return compare(a.entries, b.entries);
}

inline bool operator<(const InvariantValue& a, const InvariantValue& b) { return compare(a, b) < 0; }

inline std::string to_string(const Entry& e) {
    switch (e.kind) {
        case Entry::Kind::value:
            return to_string(e.value);
        case Entry::Kind::infinity:
            return "inf";
        case Entry::Kind::gamma: {
            std::string s = "G(" + std::to_string(-e.gamma.p) + "," + to_string(e.gamma.r) + ",[";
            for (std::size_t i = 0; i < e.gamma.idx.size(); ++i) s += (i ? "," : "") + std::to_string(e.gamma.idx[i]);
            return s + "])";
        }
    }
    return "?";
}

inline std::string to_string(const InvariantValue& v) {
    std::string s = "(" + std::to_string(v.hcodim);
    for (const auto& e : v.entries) s += "; " + to_string(e);
    return s + ")";
}

// Minimal number p of divisors whose exponents sum to at least the threshold (normalized to 1),
// the largest such sum, and the lexicographically largest label tuple attaining it.
inline std::optional<Gamma> gamma_invariant(const QVec& m, const std::vector<int>& labels, const Rat& c = Rat(1)) {
    std::vector<std::size_t> items;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) items.push_back(i);
    const std::size_t k = items.size();
    for (std::size_t p = 1; p <= k; ++p) {
        std::optional<Gamma> best;
        std::vector<bool> pick(k, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(p), true);
        do {
            Rat s = 0;
            std::vector<int> idx;
            for (std::size_t i = 0; i < k; ++i)
                if (pick[i]) {
                    s += m[items[i]];
                    idx.push_back(labels[items[i]]);
                }
            if (s < c) continue;
            std::sort(idx.rbegin(), idx.rend());
            Gamma g{static_cast<int>(p), s / c, idx};
            if (!best || g.r > best->r || (g.r == best->r && g.idx > best->idx)) best = g;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        if (best) return best;
    }
    return std::nullopt;
}

namespace detail {

// A weighted generator of the descent: one or two monomial terms over the stratum
// coordinates, with weight w (its normalized order is ord/w).
struct Element {
    std::vector<QVec> terms;
    Rat w;
};

struct DescentContext {
    std::vector<bool> exceptional;
    std::vector<int> labels;
};

inline Rat degree(const QVec& t, const std::vector<bool>& active) {
    Rat d = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (active[i]) d += t[i];
    return d;
}

inline std::vector<Entry> descend(const std::vector<Element>& elems, const std::vector<bool>& active,
                                  const DescentContext& ctx, std::size_t slots) {
    if (slots == 0) return {};
    if (elems.empty()) return std::vector<Entry>(slots, Entry::inf());
    const std::size_t k = active.size();
    Rat theta;
    bool first = true;
    for (const auto& el : elems)
        for (const auto& t : el.terms) {
            Rat o = degree(t, active) / el.w;
            if (first || o < theta) theta = o;
            first = false;
        }
    QVec mu(k, Rat(0));
    Rat mu_sum = 0;
    for (std::size_t c = 0; c < k; ++c) {
        if (!active[c] || !ctx.exceptional[c]) continue;
        bool f = true;
        Rat m;
        for (const auto& el : elems)
            for (const auto& t : el.terms) {
                Rat v = t[c] / el.w;
                if (f || v < m) m = v;
                f = false;
            }
        mu[c] = m;
        mu_sum += m;
    }
    const Rat rho = theta - mu_sum;
    if (rho == 0) {
        auto g = gamma_invariant(mu, ctx.labels);
        if (!g) throw Error("descent reached order zero without an exceptional monomial part");
        std::vector<Entry> out{Entry::monomial(*g)};
        out.resize(slots, Entry::inf());
        return out;
    }
    // Strip the exceptional monomial part and renormalize by the residual order.
    std::vector<Element> next;
    next.reserve(elems.size() + 1);
    for (const auto& el : elems) {
        Element e{el.terms, el.w * rho};
        for (auto& t : e.terms)
            for (std::size_t c = 0; c < k; ++c) t[c] -= mu[c] * el.w;
        next.push_back(std::move(e));
    }
    // Companion generator carrying the monomial part when the residual order is below 1.
    if (rho < 1 && mu_sum > 0) next.push_back(Element{{mu}, 1 - rho});
    std::vector<bool> cand(k, false);
    for (const auto& el : next)
        for (const auto& t : el.terms)
            if (degree(t, active) == el.w)
                for (std::size_t c = 0; c < k; ++c)
                    if (active[c] && t[c] > 0) cand[c] = true;
    bool any_free = false;
    for (std::size_t c = 0; c < k; ++c)
        if (cand[c] && !ctx.exceptional[c]) any_free = true;
    std::optional<std::vector<Entry>> best;
    for (std::size_t j = 0; j < k; ++j) {
        if (!cand[j] || (any_free && ctx.exceptional[j])) continue;
        // Coefficients with respect to x_j below the weight, each with weight w - k.
        std::vector<Element> coeff;
        for (const auto& el : next) {
            std::vector<std::pair<Rat, std::vector<QVec>>> groups;
            for (const auto& t : el.terms) {
                auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == t[j]; });
                QVec u = t;
                u[j] = 0;
                if (it == groups.end())
                    groups.push_back({t[j], {u}});
                else
                    it->second.push_back(u);
            }
            for (auto& [power, terms] : groups)
                if (power < el.w) coeff.push_back(Element{std::move(terms), el.w - power});
        }
        std::vector<bool> act = active;
        act[j] = false;
        auto tail = descend(coeff, act, ctx, slots - 1);
        if (!best || compare(tail, *best) < 0) best = std::move(tail);
    }
    if (!best) throw Error("no maximal-contact coordinate found");
    std::vector<Entry> out{Entry::rational(rho)};
    out.insert(out.end(), best->begin(), best->end());
    return out;
}

}  // namespace detail

// Entries of the invariant for the ideal of the lattice `projected` (coordinates indexed
// by the stratum), padded to `slots` entries.
inline std::vector<Entry> e_inv(const IMat& projected, const std::vector<bool>& exceptional,
                                const std::vector<int>& labels, std::size_t slots) {
    std::vector<detail::Element> elems;
    for (const auto& g : graver_basis(projected)) {
        auto b = Binomial::from_vector(g);
        elems.push_back(detail::Element{{to_rational(b.plus), to_rational(b.minus)}, Rat(1)});
    }
    std::vector<bool> active(exceptional.size(), true);
    return detail::descend(elems, active, detail::DescentContext{exceptional, labels}, slots);
}

// Value of (Hcodim, E-inv) at a stratum of a chart; nullopt if X misses the stratum.
inline std::optional<InvariantValue> stratum_value(const Lattice& l, const Chart& chart, const IndexSet& s) {
    if (!stratum_meets(l, s)) return std::nullopt;
    IMat projected;
    for (const auto& b : l.basis()) projected.push_back(project(b, s));
    InvariantValue v;
    v.hcodim = rank_of(projected);
    if (v.hcodim == 0) {
        v.entries.assign(chart.n, Entry::inf());
        return v;
    }
    std::vector<bool> exc;
    std::vector<int> labels;
    for (int j : s) {
        exc.push_back(contains(chart.H, j));
        labels.push_back(chart.labels[static_cast<std::size_t>(j)]);
    }
    v.entries = e_inv(projected, exc, labels, chart.n);
    return v;
}

}  // namespace toric
