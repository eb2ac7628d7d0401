// resolvent: metric and strong metric dimension of graphs and products.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "resolvent/families.hpp"
#include "resolvent/harness.hpp"
#include "resolvent/io.hpp"
#include "resolvent/products.hpp"
#include "resolvent/resolving.hpp"
#include "resolvent/strong.hpp"

namespace {

using namespace resolvent;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// A graph argument is a file path, "-" for stdin, or a family spec.
Graph load(const std::string& arg)
{
    if (arg == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return parse_graph(ss.str());
    }
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph(ss.str());
    }
    return make_family(parse_family_spec(arg));
}

void emit(const Graph& g, bool dot)
{
    std::cout << (dot ? export_dot(g) : serialize_graph(g));
}

SearchLimits limits_from(std::optional<std::uint64_t> nodes, std::optional<long> ms)
{
    SearchLimits limits;
    limits.node_budget = nodes;
    if (ms)
        limits.time_budget = std::chrono::milliseconds(*ms);
    return limits;
}

void print_dimension(const char* what, const Graph& g, const DimensionResult& d)
{
    std::cout << what << " " << d.value << "\n";
    std::cout << "method " << to_string(d.method) << "\n";
    std::cout << "witness " << d.witness;
    if (g.labels()) {
        std::cout << " =";
        for (auto v : d.witness)
            std::cout << " " << g.vertex_name(v);
    }
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Metric and strong metric dimension of graphs and graph products"};
    app.require_subcommand(1);

    std::string graph_arg;
    std::string second_arg;
    bool dot = false;
    std::optional<std::uint64_t> node_budget;
    std::optional<long> time_budget_ms;

    auto* gen = app.add_subcommand("gen", "Print a named graph family member as an edge list");
    gen->add_option("family", graph_arg, "Family spec, e.g. K5, C6, K2,3, petersen, tree:10:seed=7")->required();
    gen->add_flag("--dot", dot, "Emit DOT instead of an edge list");

    std::string op = "direct";
    auto* product = app.add_subcommand("product", "Print a product of two graphs");
    product->add_option("--op", op, "direct, cartesian or lex")->check(CLI::IsMember({"direct", "cartesian", "lex"}));
    product->add_option("g1", graph_arg, "First factor (file, - or family spec)")->required();
    product->add_option("g2", second_arg, "Second factor")->required();
    product->add_flag("--dot", dot, "Emit DOT instead of an edge list");

    auto* dim = app.add_subcommand("dim", "Exact metric dimension and lexicographically least basis");
    auto* sdim = app.add_subcommand("sdim", "Exact strong metric dimension");
    bool bruteforce = false;
    sdim->add_flag("--bruteforce", bruteforce, "Use direct pair search instead of the vertex cover reduction");
    for (auto* sub : {dim, sdim}) {
        sub->add_option("graph", graph_arg, "Graph (file, - or family spec)")->required();
        sub->add_option("--node-budget", node_budget, "Abort after this many search nodes");
        sub->add_option("--time-budget-ms", time_budget_ms, "Abort after this many milliseconds");
    }

    auto* srg = app.add_subcommand("sr-graph", "Print the strong resolving graph");
    srg->add_option("graph", graph_arg, "Graph (file, - or family spec)")->required();
    srg->add_flag("--dot", dot, "Emit DOT instead of an edge list");
    bool host = false;
    srg->add_flag("--host", host, "Keep all host vertices (non-boundary ones isolated)");

    std::string suite;
    std::string ranges_text;
    std::uint64_t seed = 1;
    std::size_t cap = Caps{}.size_cap;
    std::string format = "text";
    bool no_timing = false;
    bool list = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "Suite id (see --list)");
    verify->add_option("--ranges", ranges_text, "Parameter grid, e.g. 'r=2..6;t=2..6'");
    verify->add_option("--seed", seed, "Seed for randomized rows");
    verify->add_option("--cap", cap, "Largest oracle input in vertices");
    verify->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--node-budget", node_budget, "Per-case search node budget");
    verify->add_option("--time-budget-ms", time_budget_ms, "Per-case time budget");
    verify->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0 for reproducible output");
    verify->add_flag("--list", list, "List suite ids and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) {
            emit(make_family(parse_family_spec(graph_arg)), dot);
        } else if (*product) {
            auto a = load(graph_arg);
            auto b = load(second_arg);
            emit(op == "direct" ? direct_product(a, b) : op == "cartesian" ? cartesian_product(a, b)
                                                                           : lexicographic_product(a, b),
                 dot);
        } else if (*dim) {
            auto g = load(graph_arg);
            print_dimension("dim", g, metric_dimension(g, limits_from(node_budget, time_budget_ms)));
        } else if (*sdim) {
            auto g = load(graph_arg);
            auto limits = limits_from(node_budget, time_budget_ms);
            print_dimension("sdim", g,
                            bruteforce ? strong_metric_dimension_bruteforce(g, limits)
                                       : strong_metric_dimension(g, {limits, true}));
        } else if (*srg) {
            auto g = load(graph_arg);
            auto sr = strong_resolving_graph(g);
            emit(host ? sr.on_host(g.order()) : sr.graph, dot);
            if (!host) {
                std::cerr << "vertices";
                for (auto v : sr.origin)
                    std::cerr << " " << v;
                std::cerr << "\n";
            }
        } else if (*verify) {
            if (list) {
                for (const auto& name : suite_names())
                    std::cout << name << "\n";
                return kOk;
            }
            if (suite.empty()) {
                std::cerr << "verify: --suite is required (see --list)\n";
                return kUsage;
            }
            Caps caps;
            caps.size_cap = cap;
            caps.node_budget = node_budget;
            if (time_budget_ms)
                caps.time_budget = std::chrono::milliseconds(*time_budget_ms);
            caps.record_timing = !no_timing;
            auto report = run_suite(suite, parse_ranges(ranges_text), caps, seed);
            std::cout << (format == "json" ? render_json(report) : format == "csv" ? render_csv(report)
                                                                                    : render_text(report));
            return report.summary.fail > 0 ? kFail : kOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << " (bounds " << e.lower_bound() << ".." << e.upper_bound() << ", best "
                  << e.best_witness() << ")\n";
        return kFail;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::disconnected:
        case ErrorCode::too_large:
        case ErrorCode::formula_mismatch:
        case ErrorCode::construction_failed: return kFail;
        default: return kUsage;
        }
    }
    return kOk;
}
