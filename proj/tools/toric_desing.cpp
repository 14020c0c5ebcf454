#include "toric/seed.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit { ok = 0, certification_failure = 1, input_error = 2, budget_exhausted = 3 };

toric::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw toric::InputError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return toric::json::parse(buf.str());
    } catch (const toric::json::parse_error& e) {
        // nlohmann reports a byte offset; translate it into line and column.
        const std::string text = buf.str();
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw toric::InputError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

void print_trace(const toric::StepRecord& s, const toric::ChartNode& n) {
    std::cout << "step " << s.step << " chart " << s.chart << " center " << toric::stratum_names(n.chart, s.center)
              << " value " << toric::to_string(s.value) << (n.several_maximal ? " (several maximal strata)" : "") << "\n";
}

int seed_check() {
    auto sc = toric::run_seed_check();
    for (const auto& l : sc.lines) std::cout << l << "\n";
    for (const auto& d : sc.deviations) std::cout << "deviation: " << d << "\n";
    std::cout << (sc.ok ? "seed check passed" : "seed check FAILED") << "\n";
    return sc.ok ? ok : certification_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial embedded desingularization of affine toric varieties"};
    std::string input, out, format = "json";
    bool trace = false, do_certify = false, do_seed = false;
    int max_steps = 1000;
    app.add_option("--input", input, "problem file (JSON)");
    app.add_option("--out", out, "write the resolution tree to this file");
    app.add_flag("--trace", trace, "print one line per blow-up");
    app.add_flag("--certify", do_certify, "certify every leaf; exit 1 on failure");
    app.add_option("--max-steps", max_steps, "blow-up budget")->check(CLI::NonNegativeNumber);
    app.add_option("--format", format, "tree output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--seed-check", do_seed, "run the built-in regression example");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : input_error;
    }
    if (do_seed) return seed_check();
    if (input.empty()) {
        std::cerr << "error: --input is required unless --seed-check is given\n";
        return input_error;
    }
    toric::Problem problem;
    try {
        problem = toric::parse_problem(read_json(input));
    } catch (const toric::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const toric::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return input_error;
    }
    if (problem.saturated_automatically) std::cerr << "warning: input lattice had torsion and was saturated\n";

    toric::ResolveOptions opt;
    opt.max_steps = max_steps;
    if (trace) opt.on_step = print_trace;
    toric::ResolutionTree tree = toric::resolve(problem.lattice, problem.root_chart(), opt);

    std::string rendered;
    if (format == "json") {
        toric::json j = toric::tree_json(tree);
        j["saturated_automatically"] = problem.saturated_automatically;
        rendered = j.dump(2) + "\n";
    } else {
        rendered = toric::tree_text(tree);
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "error: cannot write " << out << "\n";
            return input_error;
        }
        f << rendered;
    } else if (!trace) {
        std::cout << rendered;
    }
    if (trace) std::cout << "status: " << toric::to_string(tree.status) << ", " << tree.steps.size() << " blow-ups\n";
    for (const auto& v : tree.violations)
        std::cerr << "violation (" << v.kind << ") chart " << v.chart << " stratum " << toric::stratum_string(v.stratum)
                  << ": " << v.detail << "\n";

    if (tree.status == toric::Status::budget_exhausted) {
        std::cerr << "budget exhausted after " << tree.steps.size() << " blow-ups\n";
        return budget_exhausted;
    }
    if (do_certify || tree.status == toric::Status::drop_failure) {
        toric::Certificate cert = toric::certify(tree);
        if (!cert.ok) {
            std::cerr << "certification failed: " << cert.failure << "\n";
            return certification_failure;
        }
        std::cerr << "certified: " << cert.leaves.size() << " leaf charts regular with normal crossings\n";
    }
    return ok;
}
