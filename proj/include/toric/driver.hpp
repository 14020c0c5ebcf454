#pragma once

#include "blowup.hpp"
#include "invariant.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

namespace toric {

struct StratumEntry {
    IndexSet stratum;
    InvariantValue value;
};

struct ChartNode {
    Chart chart;
    Lattice lattice;                   // strict transform of X in chart coordinates
    std::vector<StratumEntry> table;   // strata of the chart that meet X
    std::optional<InvariantValue> max;
    IndexSet center;                   // empty for terminal or unexpanded charts
    int step = -1;                     // step number of the blow-up performed here
    bool several_maximal = false;      // the maximal locus had more than one minimal stratum
    std::vector<int> children;
    bool terminal = false;
};

struct StepRecord {
    int step = 0;
    int chart = 0;
    InvariantValue value;
    IndexSet center;
};

struct Violation {
    std::string kind;  // "drop", "hcodim", "step-log"
    int chart = 0;
    IndexSet stratum;
    std::string detail;
};

enum class Status { done, budget_exhausted, drop_failure };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::done:
            return "done";
        case Status::budget_exhausted:
            return "budget exhausted";
        case Status::drop_failure:
            return "invariant failed to drop";
    }
    return "?";
}

struct ResolutionTree {
    std::vector<ChartNode> nodes;
    std::vector<StepRecord> steps;
    std::vector<Violation> violations;
    Status status = Status::done;
    Lattice root_lattice;
};

struct ResolveOptions {
    int max_steps = 1000;
    unsigned threads = 0;           // 0: use TORIC_DESING_THREADS or the hardware concurrency
    bool halt_on_violation = true;  // stop at the first failed drop or Hcodim check
    std::function<void(const StepRecord&, const ChartNode&)> on_step;
};

inline unsigned thread_count(unsigned requested) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned n = requested ? requested : hw;
    if (const char* env = std::getenv("TORIC_DESING_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return std::max(1u, n);
}

// Runs fn(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline std::vector<StratumEntry> chart_table(const Lattice& l, const Chart& c) {
    std::vector<StratumEntry> table;
    for (const auto& s : all_subsets(c.E))
        if (auto v = stratum_value(l, c, s)) table.push_back({s, *v});
    return table;
}

inline const InvariantValue* lookup(const std::vector<StratumEntry>& table, const IndexSet& s) {
    for (const auto& e : table)
        if (e.stratum == s) return &e.value;
    return nullptr;
}

struct MaximalLocus {
    InvariantValue value;
    std::vector<IndexSet> minimal;  // minimal strata attaining the maximum, canonical order
};

inline MaximalLocus maximal_locus(const std::vector<StratumEntry>& table) {
    MaximalLocus m;
    m.value = table.front().value;
    for (const auto& e : table)
        if (compare(e.value, m.value) > 0) m.value = e.value;
    std::vector<IndexSet> at_max;
    for (const auto& e : table)
        if (compare(e.value, m.value) == 0) at_max.push_back(e.stratum);
    for (const auto& s : at_max) {
        bool minimal = true;
        for (const auto& o : at_max)
            if (o != s && std::includes(s.begin(), s.end(), o.begin(), o.end())) minimal = false;
        if (minimal) m.minimal.push_back(s);
    }
    return m;
}

// Stratum of the parent chart whose orbit contains the image of a child stratum.
inline IndexSet parent_stratum(const IndexSet& child_stratum, const IndexSet& center, int j) {
    if (!contains(child_stratum, j)) return child_stratum;
    return set_union(set_difference(child_stratum, IndexSet{j}), center);
}

namespace detail {

inline void check_child(ResolutionTree& tree, int child_id) {
    const ChartNode& child = tree.nodes[static_cast<std::size_t>(child_id)];
    const ChartNode& parent = tree.nodes[static_cast<std::size_t>(child.chart.lineage->parent)];
    const int j = child.chart.lineage->coordinate;
    const InvariantValue& center_value = *parent.max;
    for (const auto& e : child.table) {
        IndexSet image = parent_stratum(e.stratum, parent.center, j);
        const InvariantValue* pv = lookup(parent.table, image);
        if (!pv) {
            tree.violations.push_back({"hcodim", child_id, e.stratum, "image stratum misses X in the parent chart"});
        } else if (e.value.hcodim > pv->hcodim) {
            tree.violations.push_back({"hcodim", child_id, e.stratum,
                                       "Hcodim " + std::to_string(e.value.hcodim) + " exceeds " +
                                           std::to_string(pv->hcodim) + " at the image stratum"});
        }
        if (contains(e.stratum, j) && compare(e.value, center_value) >= 0)
            tree.violations.push_back({"drop", child_id, e.stratum,
                                       to_string(e.value) + " does not drop below the center value " +
                                           to_string(center_value)});
    }
    // Along a lineage the sequence of chart maxima must decrease, except that a second
    // component of a maximal locus with several components may carry the same value.
    if (child.max && child.max->hcodim > 0) {
        int c = compare(*child.max, center_value);
        if (c > 0 || (c == 0 && !parent.several_maximal))
            tree.violations.push_back({"step-log", child_id, {},
                                       "chart maximum " + to_string(*child.max) + " does not drop below " +
                                           to_string(center_value)});
    }
}

}  // namespace detail

// Chart-local resolution: every live chart blows up the minimal stratum of its own
// maximal locus; rounds proceed until every chart has maximal Hcodim 0.
inline ResolutionTree resolve(const Lattice& l, const Chart& root, const ResolveOptions& opt = {}) {
    if (!is_saturated(l)) throw Error("input lattice is not saturated");
    ResolutionTree tree;
    tree.root_lattice = l;
    Chart r = root;
    r.id = 0;
    tree.nodes.push_back(ChartNode{r, l, {}, std::nullopt, {}, -1, false, {}, false});
    std::vector<int> live{0};
    const unsigned threads = thread_count(opt.threads);
    int steps = 0;
    while (!live.empty()) {
        parallel_for(live.size(), threads, [&](std::size_t i) {
            auto& node = tree.nodes[static_cast<std::size_t>(live[i])];
            node.table = chart_table(node.lattice, node.chart);
        });
        // A round is committed as a whole, so halting never depends on the order of charts.
        std::vector<MaximalLocus> loci;
        std::size_t blowups = 0;
        const std::size_t violations_before = tree.violations.size();
        for (int id : live) {
            auto& node = tree.nodes[static_cast<std::size_t>(id)];
            loci.push_back(maximal_locus(node.table));
            node.max = loci.back().value;
            node.terminal = node.max->hcodim == 0;
            if (!node.terminal) ++blowups;
            if (node.chart.lineage) detail::check_child(tree, id);
        }
        if (opt.halt_on_violation && tree.violations.size() > violations_before) {
            tree.status = Status::drop_failure;
            return tree;
        }
        if (blowups > 0 && steps + static_cast<int>(blowups) > opt.max_steps) {
            tree.status = Status::budget_exhausted;
            return tree;
        }
        std::vector<int> next;
        for (std::size_t li = 0; li < live.size(); ++li) {
            const int id = live[li];
            auto& node = tree.nodes[static_cast<std::size_t>(id)];
            const auto& loc = loci[li];
            if (node.terminal) continue;
            node.center = loc.minimal.front();
            node.several_maximal = loc.minimal.size() > 1;
            node.step = ++steps;
            StepRecord rec{node.step, id, loc.value, node.center};
            tree.steps.push_back(rec);
            if (opt.on_step) opt.on_step(rec, node);
            const Lattice parent_lattice = node.lattice;  // node is invalidated by the pushes below
            for (auto& [child, t] : blow_up_chart(node.chart, node.center)) {
                child.id = static_cast<int>(tree.nodes.size());
                Lattice lc = strict_transform_lattice(parent_lattice, t);
                tree.nodes[static_cast<std::size_t>(id)].children.push_back(child.id);
                tree.nodes.push_back(ChartNode{child, lc, {}, std::nullopt, {}, -1, false, {}, false});
                next.push_back(child.id);
            }
        }
        live = std::move(next);
    }
    return tree;
}

struct LeafCertificate {
    int chart = 0;
    bool ok = true;
    std::string failure;  // offending check and stratum
    std::size_t strata_checked = 0;
};

struct Certificate {
    bool ok = true;
    std::vector<LeafCertificate> leaves;
    std::vector<IndexSet> regular_root_strata;  // root strata where X is regular with normal crossings
    std::string failure;
};

inline std::string stratum_string(const IndexSet& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + "}";
}

// Re-derives every chart from the root and checks each terminal leaf stratum by stratum.
inline Certificate certify(const ResolutionTree& tree) {
    Certificate cert;
    if (tree.status != Status::done) {
        cert.ok = false;
        cert.failure = "tree is not terminal (" + to_string(tree.status) + ")";
        return cert;
    }
    const auto& root = tree.nodes.front();
    for (const auto& s : all_subsets(root.chart.E)) {
        auto v = stratum_value(tree.root_lattice, root.chart, s);
        if (v && v->hcodim == 0) cert.regular_root_strata.push_back(s);
    }
    for (const auto& node : tree.nodes) {
        // Lineage consistency: the stored lattice is the image of the parent's lattice.
        if (node.chart.lineage) {
            const auto& parent = tree.nodes[static_cast<std::size_t>(node.chart.lineage->parent)];
            ChartTransform t{node.chart.lineage->substitution, node.chart.lineage->coordinate, parent.center};
            if (!(strict_transform_lattice(parent.lattice, t) == node.lattice)) {
                cert.ok = false;
                cert.failure = "chart " + std::to_string(node.chart.id) + ": lattice is not the strict transform of its parent";
                return cert;
            }
        } else if (!(node.lattice == tree.root_lattice)) {
            cert.ok = false;
            cert.failure = "root chart lattice differs from the input";
            return cert;
        }
        if (node.step >= 0) {
            // Centers must avoid the locus where X is already regular with normal crossings.
            IndexSet img = root_image(node.chart, node.center);
            auto v = stratum_value(tree.root_lattice, root.chart, img);
            if (!v || v->hcodim == 0) {
                cert.ok = false;
                cert.failure = "chart " + std::to_string(node.chart.id) + ": center " + stratum_string(node.center) +
                               " lies over the regular locus";
                return cert;
            }
        }
        if (!node.children.empty()) continue;
        LeafCertificate lc;
        lc.chart = node.chart.id;
        const Lattice& l = node.lattice;
        BinomialIdeal ideal = lattice_ideal(l);
        for (const auto& s : all_subsets(node.chart.E)) {
            if (!stratum_meets(l, s)) continue;
            ++lc.strata_checked;
            if (!is_transversal(l, s)) {
                lc.ok = false;
                lc.failure = "stratum " + stratum_string(s) + ": lattice not transversal";
                break;
            }
            if (jacobian_rank_at_stratum(ideal, s) != l.rank()) {
                lc.ok = false;
                lc.failure = "stratum " + stratum_string(s) + ": jacobian rank below the codimension";
                break;
            }
        }
        if (!lc.ok) {
            cert.ok = false;
            if (cert.failure.empty()) cert.failure = "leaf chart " + std::to_string(lc.chart) + " not regular: " + lc.failure;
        }
        cert.leaves.push_back(lc);
    }
    return cert;
}

}  // namespace toric
