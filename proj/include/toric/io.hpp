#pragma once

#include "driver.hpp"

#include <nlohmann/json.hpp>

namespace toric {

using json = nlohmann::json;

struct InputError : Error {
    using Error::Error;
};

struct Problem {
    std::size_t dim = 0;
    IndexSet invertible;
    std::vector<std::string> names;
    Lattice lattice;
    bool saturated_automatically = false;  // warning flag: the given lattice had torsion

    IndexSet boundary() const { return set_difference(range_set(static_cast<int>(dim)), invertible); }
    Chart root_chart() const { return Chart::root(dim, boundary(), names); }
};

namespace detail {

inline Int json_int(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_int(j.get<std::string>());
        } catch (const Error&) {
        }
    } else if (j.is_number_integer()) {
        return Int(j.get<long long>());
    }
    throw InputError(where + ": expected an integer written as a decimal string");
}

inline IVec json_row(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array");
    if (j.size() != dim)
        throw InputError(where + ": row has length " + std::to_string(j.size()) + ", expected " + std::to_string(dim));
    IVec r;
    for (std::size_t i = 0; i < j.size(); ++i) r.push_back(json_int(j[i], where + "[" + std::to_string(i) + "]"));
    return r;
}

inline json int_json(const Int& a) { return to_string(a); }

inline json row_json(const IVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_json(x));
    return a;
}

inline json mat_json(const IMat& m) {
    json a = json::array();
    for (const auto& r : m) a.push_back(row_json(r));
    return a;
}

inline json set_json(const IndexSet& s) { return s; }

}  // namespace detail

inline Problem parse_problem(const json& j) {
    using namespace detail;
    if (!j.is_object()) throw InputError("problem: expected an object");
    if (!j.contains("dim")) throw InputError("dim: missing");
    Int d = json_int(j.at("dim"), "dim");
    if (d < 1 || d > 64) throw InputError("dim: must be between 1 and 64");
    Problem p;
    p.dim = static_cast<std::size_t>(d);
    if (j.contains("invertible")) {
        if (!j.at("invertible").is_array()) throw InputError("invertible: expected an array");
        for (std::size_t i = 0; i < j.at("invertible").size(); ++i) {
            Int v = json_int(j.at("invertible")[i], "invertible[" + std::to_string(i) + "]");
            if (v < 0 || v >= d) throw InputError("invertible[" + std::to_string(i) + "]: index out of range");
            p.invertible.push_back(static_cast<int>(v));
        }
        std::sort(p.invertible.begin(), p.invertible.end());
        p.invertible.erase(std::unique(p.invertible.begin(), p.invertible.end()), p.invertible.end());
    }
    if (j.contains("names")) {
        const auto& n = j.at("names");
        if (!n.is_array() || n.size() != p.dim) throw InputError("names: expected " + std::to_string(p.dim) + " strings");
        for (const auto& s : n) {
            if (!s.is_string()) throw InputError("names: expected strings");
            p.names.push_back(s.get<std::string>());
        }
    }
    const bool has_b = j.contains("binomials"), has_l = j.contains("lattice");
    if (has_b == has_l) throw InputError("problem: exactly one of binomials or lattice is required");
    IMat rows;
    if (has_b) {
        const auto& b = j.at("binomials");
        if (!b.is_array()) throw InputError("binomials: expected an array");
        if (b.empty()) throw InputError("no generators");
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::string w = "binomials[" + std::to_string(i) + "]";
            if (!b[i].is_object() || !b[i].contains("plus") || !b[i].contains("minus"))
                throw InputError(w + ": expected an object with plus and minus rows");
            IVec plus = json_row(b[i].at("plus"), p.dim, w + ".plus");
            IVec minus = json_row(b[i].at("minus"), p.dim, w + ".minus");
            for (std::size_t k = 0; k < p.dim; ++k)
                if (plus[k] < 0 || minus[k] < 0) throw InputError(w + ": exponents must be nonnegative");
            rows.push_back(sub(plus, minus));
        }
    } else {
        const auto& l = j.at("lattice");
        if (!l.is_array()) throw InputError("lattice: expected an array");
        if (l.empty()) throw InputError("no generators");
        for (std::size_t i = 0; i < l.size(); ++i) rows.push_back(json_row(l[i], p.dim, "lattice[" + std::to_string(i) + "]"));
    }
    Lattice lat = Lattice::from_generators(p.dim, rows);
    if (lat.is_zero()) throw InputError("no generators");
    const bool auto_sat = j.value("auto_saturate", false);
    if (auto w = torsion_witness(lat)) {
        if (!auto_sat) {
            std::string v;
            for (std::size_t i = 0; i < w->vector.size(); ++i) v += (i ? "," : "") + to_string(w->vector[i]);
            throw InputError("lattice is not saturated: torsion witness (" + v + ") of order " + to_string(w->order) +
                             " lies in the saturation but not in the lattice");
        }
        lat = saturate(lat);
        p.saturated_automatically = true;
    }
    p.lattice = lat;
    return p;
}

inline json entry_json(const Entry& e) {
    switch (e.kind) {
        case Entry::Kind::value:
            return to_string(e.value);
        case Entry::Kind::infinity:
            return "inf";
        case Entry::Kind::gamma:
            return json{{"p", e.gamma.p}, {"r", to_string(e.gamma.r)}, {"labels", e.gamma.idx}};
    }
    return nullptr;
}

inline Entry parse_entry(const json& j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "inf") return Entry::inf();
        return Entry::rational(parse_rat(s));
    }
    if (!j.is_object()) throw InputError("invariant entry: expected a string or an object");
    return Entry::monomial(Gamma{j.at("p").get<int>(), parse_rat(j.at("r").get<std::string>()),
                                 j.at("labels").get<std::vector<int>>()});
}

inline json value_json(const InvariantValue& v) {
    json e = json::array();
    for (const auto& x : v.entries) e.push_back(entry_json(x));
    return json{{"hcodim", v.hcodim}, {"entries", e}};
}

inline InvariantValue parse_value(const json& j) {
    InvariantValue v;
    v.hcodim = j.at("hcodim").get<std::size_t>();
    for (const auto& e : j.at("entries")) v.entries.push_back(parse_entry(e));
    return v;
}

inline json tree_json(const ResolutionTree& tree) {
    using namespace detail;
    json nodes = json::array();
    for (const auto& n : tree.nodes) {
        json c{{"id", n.chart.id},
               {"dim", n.chart.n},
               {"E", set_json(n.chart.E)},
               {"H", set_json(n.chart.H)},
               {"names", n.chart.names},
               {"rays", mat_json(n.chart.rays)},
               {"labels", n.chart.labels},
               {"depth", n.chart.depth},
               {"lattice", mat_json(n.lattice.basis())},
               {"children", n.children},
               {"terminal", n.terminal},
               {"step", n.step}};
        if (n.chart.lineage)
            c["lineage"] = json{{"parent", n.chart.lineage->parent},
                                {"coordinate", n.chart.lineage->coordinate},
                                {"substitution", mat_json(n.chart.lineage->substitution)}};
        if (n.max) c["max"] = value_json(*n.max);
        if (n.step >= 0) {
            c["center"] = set_json(n.center);
            c["several_maximal"] = n.several_maximal;
        }
        json table = json::array();
        for (const auto& e : n.table) table.push_back(json{{"stratum", set_json(e.stratum)}, {"value", value_json(e.value)}});
        c["table"] = table;
        nodes.push_back(c);
    }
    json steps = json::array();
    for (const auto& s : tree.steps)
        steps.push_back(json{{"step", s.step}, {"chart", s.chart}, {"center", set_json(s.center)}, {"value", value_json(s.value)}});
    json viol = json::array();
    for (const auto& v : tree.violations)
        viol.push_back(json{{"kind", v.kind}, {"chart", v.chart}, {"stratum", set_json(v.stratum)}, {"detail", v.detail}});
    return json{{"status", to_string(tree.status)},
                {"root_lattice", mat_json(tree.root_lattice.basis())},
                {"dim", tree.root_lattice.ambient_dim()},
                {"nodes", nodes},
                {"steps", steps},
                {"violations", viol}};
}

inline ResolutionTree parse_tree(const json& j) {
    auto mat = [](const json& m, std::size_t dim) {
        IMat r;
        for (std::size_t i = 0; i < m.size(); ++i) r.push_back(detail::json_row(m[i], dim, "matrix row"));
        return r;
    };
    auto sset = [](const json& s) { return s.get<IndexSet>(); };
    ResolutionTree t;
    const auto dim = j.at("dim").get<std::size_t>();
    t.root_lattice = Lattice::from_generators(dim, mat(j.at("root_lattice"), dim));
    const auto status = j.at("status").get<std::string>();
    t.status = status == "done" ? Status::done
               : status == to_string(Status::budget_exhausted) ? Status::budget_exhausted
                                                                : Status::drop_failure;
    for (const auto& c : j.at("nodes")) {
        ChartNode n;
        n.chart.id = c.at("id").get<int>();
        n.chart.n = c.at("dim").get<std::size_t>();
        n.chart.E = sset(c.at("E"));
        n.chart.H = sset(c.at("H"));
        n.chart.names = c.at("names").get<std::vector<std::string>>();
        n.chart.rays = mat(c.at("rays"), n.chart.n);
        n.chart.labels = c.at("labels").get<std::vector<int>>();
        n.chart.depth = c.at("depth").get<int>();
        if (c.contains("lineage")) {
            const auto& l = c.at("lineage");
            n.chart.lineage = Lineage{l.at("parent").get<int>(), mat(l.at("substitution"), n.chart.n),
                                      l.at("coordinate").get<int>()};
        }
        n.lattice = Lattice::from_generators(n.chart.n, mat(c.at("lattice"), n.chart.n));
        n.children = c.at("children").get<std::vector<int>>();
        n.terminal = c.at("terminal").get<bool>();
        n.step = c.at("step").get<int>();
        if (c.contains("max")) n.max = parse_value(c.at("max"));
        if (c.contains("center")) {
            n.center = sset(c.at("center"));
            n.several_maximal = c.at("several_maximal").get<bool>();
        }
        for (const auto& e : c.at("table")) n.table.push_back({sset(e.at("stratum")), parse_value(e.at("value"))});
        t.nodes.push_back(std::move(n));
    }
    for (const auto& s : j.at("steps"))
        t.steps.push_back({s.at("step").get<int>(), s.at("chart").get<int>(), parse_value(s.at("value")), sset(s.at("center"))});
    for (const auto& v : j.at("violations"))
        t.violations.push_back({v.at("kind").get<std::string>(), v.at("chart").get<int>(), sset(v.at("stratum")),
                                v.at("detail").get<std::string>()});
    return t;
}

inline std::string stratum_names(const Chart& c, const IndexSet& s) {
    if (s.empty()) return "{}";
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + c.names[static_cast<std::size_t>(s[i])];
    return r + "}";
}

inline std::string tree_text(const ResolutionTree& tree) {
    std::string out = "status: " + to_string(tree.status) + "\n";
    out += "steps: " + std::to_string(tree.steps.size()) + "\n";
    for (const auto& s : tree.steps) {
        const auto& c = tree.nodes[static_cast<std::size_t>(s.chart)].chart;
        out += "  step " + std::to_string(s.step) + " chart " + std::to_string(s.chart) + " center " +
               stratum_names(c, s.center) + " value " + to_string(s.value) + "\n";
    }
    for (const auto& n : tree.nodes) {
        out += "chart " + std::to_string(n.chart.id);
        if (n.chart.lineage)
            out += " parent " + std::to_string(n.chart.lineage->parent) + " via " +
                   n.chart.names[static_cast<std::size_t>(n.chart.lineage->coordinate)];
        out += " H " + stratum_names(n.chart, n.chart.H) + " lattice [";
        const auto& b = n.lattice.basis();
        for (std::size_t i = 0; i < b.size(); ++i) {
            out += i ? "; " : "";
            for (std::size_t k = 0; k < b[i].size(); ++k) out += (k ? " " : "") + to_string(b[i][k]);
        }
        out += "]";
        if (n.max) out += " max " + to_string(*n.max);
        if (n.step >= 0) out += " center " + stratum_names(n.chart, n.center);
        if (n.terminal) out += " terminal";
        out += "\n";
    }
    for (const auto& v : tree.violations)
        out += "violation " + v.kind + " chart " + std::to_string(v.chart) + " stratum " + stratum_string(v.stratum) + ": " +
               v.detail + "\n";
    return out;
}

}  // namespace toric
