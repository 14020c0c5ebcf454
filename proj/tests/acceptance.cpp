// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.
#include "support.hpp"
#include "toric/seed.hpp"

#include <chrono>
#include <iostream>

using namespace toric;
using namespace toric::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

std::string show(const IMat& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? " (" : "(";
        for (std::size_t k = 0; k < m[i].size(); ++k) s += (k ? "," : "") + to_string(m[i][k]);
        s += ")";
    }
    return s + "]";
}

Outcome seed_regression() {
    Outcome o;
    auto t0 = Clock::now();
    SeedCheck sc = run_seed_check();
    double dt = seconds_since(t0);
    for (const auto& l : sc.lines)
        if (l.rfind("FAIL", 0) == 0) o.fail(l);
    if (dt >= 1.0) o.fail("runtime " + std::to_string(dt) + " s");
    o.summary = std::to_string(sc.lines.size()) + " checks, " + std::to_string(dt) + " s";
    for (const auto& d : sc.deviations) o.summary += "; logged deviation: " + d;
    return o;
}

Outcome lattice_suite(Rng& rng) {
    Outcome o;
    auto t0 = Clock::now();
    const int count = 10000;
    std::size_t weak = 0, maximality_sets = 0;
    for (int it = 0; it < count; ++it) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
        const auto r = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(n)));
        const IndexSet e = random_subset(rng, n);
        IMat gens = random_mat(rng, r, n, -5, 5);
        // Bias half the inputs toward transversality by flipping signs on E.
        if (it % 2)
            for (auto& g : gens)
                for (int j : e)
                    if (g[static_cast<std::size_t>(j)] < 0) g[static_cast<std::size_t>(j)] = -g[static_cast<std::size_t>(j)];
        const Lattice m = Lattice::from_generators(n, gens);
        const Lattice sat = saturate(m);
        const std::string tag = show(gens);
        if (!(saturate(sat) == sat)) o.fail("idempotence " + tag);
        if (!sat.contains(m) || sat.rank() != m.rank() || !is_saturated(sat)) o.fail("saturation " + tag);
        for (int k = 0; k < 4; ++k) {
            IVec v = random_vec(rng, n, -5, 5);
            if (k == 0 && !sat.is_zero()) {
                // A rational point of the span scaled to an integer vector lies in Sat(M).
                IVec c = random_vec(rng, sat.rank(), -3, 3);
                v = vec_mul(c, sat.basis(), n);
            }
            if (sat.contains(v) != sat_member_oracle(m, v)) o.fail("membership " + tag);
        }
        if (auto w = torsion_witness(m)) {
            if (m.contains(w->vector) || !m.contains(scale(w->vector, w->order)) || !sat.contains(w->vector))
                o.fail("torsion witness " + tag);
        }
        if (is_weak_transversal(m, e)) {
            ++weak;
            if (!is_transversal(sat, e)) o.fail("weak transversal but saturation is not " + tag);
        }
        if (n <= 4) {
            const Lattice l0 = max_transversal_sublattice(sat, e);
            if (!is_transversal(l0, e)) o.fail("L0 not transversal " + tag);
            // Every sublattice generated by one or two small vectors of L that admits a
            // transversality witness must lie in L0.
            std::vector<IVec> small;
            IVec v(n, Int(-3));
            while (true) {
                if (!is_zero(v) && sat.contains(v)) small.push_back(v);
                std::size_t i = 0;
                while (i < n && v[i] == 3) v[i++] = -3;
                if (i == n) break;
                ++v[i];
            }
            for (std::size_t a = 0; a < small.size(); ++a) {
                const bool single = weak_transversal_witness({small[a]}, e, 1);
                if (single) {
                    ++maximality_sets;
                    if (!l0.contains(small[a])) o.fail("L0 misses transversal vector " + tag);
                }
            }
            for (int k = 0; k < 6 && small.size() >= 2; ++k) {
                auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(small.size()) - 1));
                auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(small.size()) - 1));
                if (a == b) continue;
                if (weak_transversal_witness({small[a], small[b]}, e, 3)) {
                    ++maximality_sets;
                    if (!l0.contains(small[a]) || !l0.contains(small[b])) o.fail("L0 misses transversal pair " + tag);
                }
            }
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 60) o.fail("runtime " + std::to_string(dt) + " s");
    o.summary = std::to_string(count) + " lattices, " + std::to_string(weak) + " weak-transversal, " +
                std::to_string(maximality_sets) + " transversal sublattices checked against L0, " + std::to_string(dt) + " s";
    return o;
}

Outcome hyperbolic_suite(Rng& rng) {
    Outcome o;
    int transversal = 0, other = 0;
    while (transversal < 1000) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
        const auto r = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(n)));
        const IndexSet e = random_subset(rng, n);
        const Lattice l = random_saturated(rng, n, r, 3);
        const bool tr = is_transversal(l, e);
        // Cross-check: a transversal lattice is its own maximal transversal sublattice.
        if (tr != (max_transversal_sublattice(l, e) == l)) o.fail("L0 characterization " + show(l.basis()));
        // Strata of E met by X; the jacobian criterion is evaluated at their distinguished points.
        std::vector<IndexSet> met;
        for (const auto& s : all_subsets(e))
            if (stratum_meets(l, s)) met.push_back(s);
        // The converse direction needs the whole lattice ideal, so it is limited to n <= 3.
        const bool full_ideal = n <= 3;
        std::size_t min_jac = l.rank();
        if (full_ideal) {
            const BinomialIdeal ideal = lattice_ideal(l);
            for (const auto& s : met) min_jac = std::min(min_jac, jacobian_rank_at_stratum(ideal, s));
        }
        if (!tr) {
            ++other;
            if (full_ideal && min_jac == l.rank()) o.fail("jacobian rank full on a non-transversal lattice " + show(l.basis()));
            continue;
        }
        ++transversal;
        const IMat b = hyperbolic_basis(l, e);
        const std::string tag = show(l.basis());
        if (!(Lattice::from_generators(n, b) == l)) o.fail("basis spans a different module " + tag);
        if (b.size() != l.rank() || rank_of(b) != l.rank()) o.fail("basis size or rank " + tag);
        for (const auto& v : b)
            for (int j : e)
                if (v[static_cast<std::size_t>(j)] < 0) o.fail("basis vector negative on E " + tag);
        BinomialIdeal hyp(n, HyperbolicIdeal{l, b}.binomials());
        for (const auto& s : met)
            if (jacobian_rank_at_stratum(hyp, s) != l.rank()) o.fail("jacobian of the basis at " + stratum_string(s) + " " + tag);
        if (full_ideal && min_jac != l.rank()) o.fail("jacobian of the lattice ideal " + tag);
    }
    o.summary = std::to_string(transversal) + " transversal lattices, " + std::to_string(other) + " non-transversal controls";
    return o;
}

Outcome eord_suite(Rng& rng) {
    Outcome o;
    int count = 0;
    while (count < 500) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
        const auto k = static_cast<std::size_t>(uniform(rng, 1, 3));
        std::vector<Binomial> gens;
        for (std::size_t i = 0; i < k; ++i) {
            Binomial b{random_vec(rng, n, 0, 4), random_vec(rng, n, 0, 4)};
            if (b.plus != b.minus) gens.push_back(b);
        }
        if (gens.empty()) continue;
        BinomialIdeal j(n, gens);
        const IndexSet h = random_subset(rng, n);
        if (count % 2) j = monomial_factorize(j, h);
        if (count % 3 == 0)
            for (int x : h) j.monomial_factor[static_cast<std::size_t>(x)] += uniform(rng, 0, 2);
        ++count;
        for (const auto& s : all_subsets(range_set(static_cast<int>(n))))
            if (eord(j, s) != eord_brute_force(j, s)) o.fail("eord mismatch on stratum " + stratum_string(s));
    }
    o.summary = std::to_string(count) + " ideals, every stratum";
    return o;
}

Lattice random_input(Rng& rng, std::size_t& n) {
    n = static_cast<std::size_t>(uniform(rng, 2, 4));
    const auto r = static_cast<std::size_t>(uniform(rng, 1, std::min<long long>(2, static_cast<long long>(n) - 1)));
    return random_saturated(rng, n, r, 3);
}

Outcome drop_suite(Rng& rng) {
    Outcome o;
    auto t0 = Clock::now();
    const int count = 100;
    int done = 0, failed = 0, total_steps = 0;
    for (int it = 0; it < count; ++it) {
        std::size_t n = 0;
        const Lattice l = random_input(rng, n);
        ResolveOptions opt;
        opt.max_steps = 200;
        ResolutionTree t = resolve(l, Chart::root(n, range_set(static_cast<int>(n))), opt);
        total_steps += static_cast<int>(t.steps.size());
        std::string problem;
        if (!t.violations.empty()) {
            const auto& v = t.violations.front();
            problem = v.kind + " at chart " + std::to_string(v.chart) + ": " + v.detail;
        } else if (t.status != Status::done) {
            problem = to_string(t.status);
        } else if (Certificate c = certify(t); !c.ok) {
            problem = "certificate: " + c.failure;
        }
        if (problem.empty()) {
            ++done;
        } else {
            ++failed;
            o.fail(show(l.basis()) + " " + problem);
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 600) o.fail("runtime " + std::to_string(dt) + " s");
    o.summary = std::to_string(count) + " inputs, " + std::to_string(done) + " clean, " + std::to_string(failed) +
                " failing, " + std::to_string(total_steps) + " blow-ups, " + std::to_string(dt) + " s";
    return o;
}

Outcome coordinate_suite(Rng& rng) {
    Outcome o;
    const int count = 50;
    for (int it = 0; it < count; ++it) {
        std::size_t n = 0;
        const Lattice l = random_input(rng, n);
        std::vector<int> perm = range_set(static_cast<int>(n));
        std::shuffle(perm.begin(), perm.end(), rng);
        IMat rows;
        for (const auto& b : l.basis()) rows.push_back(permute(b, perm));
        const Lattice lp = Lattice::from_generators(n, rows);
        ResolveOptions opt;
        opt.max_steps = 200;
        opt.halt_on_violation = false;
        const Chart root = Chart::root(n, range_set(static_cast<int>(n)));
        ResolutionTree a = resolve(l, root, opt), b = resolve(lp, root, opt);
        if (a.status != b.status || step_values(a) != step_values(b) || tree_signature(a) != tree_signature(b))
            o.fail(show(l.basis()) + " under a coordinate permutation");
    }
    o.summary = std::to_string(count) + " inputs with a random coordinate permutation";
    return o;
}

}  // namespace

int main() {
    Rng rng(20240611);
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"1 end-to-end regression", [] { return seed_regression(); }},
        {"2 lattice oracle suite", [&] { return lattice_suite(rng); }},
        {"3 hyperbolic basis certification", [&] { return hyperbolic_suite(rng); }},
        {"4 E-order oracle", [&] { return eord_suite(rng); }},
        {"5 monotonicity and drop", [&] { return drop_suite(rng); }},
        {"6 coordinate freedom", [&] { return coordinate_suite(rng); }},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.summary << std::endl;
        for (const auto& f : o.failures) std::cout << "     " << f << std::endl;
    }
    return all ? 0 : 1;
}
