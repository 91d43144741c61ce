// Command-line front end: automorphism queries, symmetry-breaking list
// colourings, verification of supplied colourings, and exhaustive index
// computation on small graphs. All results are JSON on stdout.
//
// Exit codes: 0 success, 2 invalid input, 3 budget or size limit exceeded,
// 4 a supplied colouring failed verification, 1 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "symbreak/constructor.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/indices.hpp"
#include "symbreak/json_io.hpp"
#include "symbreak/verifier.hpp"

namespace {

using nlohmann::json;
using namespace symbreak;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerifyFailed = 4;

struct CommonOptions {
    std::string input_path;
    std::string graph6_inline;
    std::string format = "auto"; // auto | graph6 | edgelist
    std::string output_path;
    int max_vertices = 12;
    std::uint64_t max_group = 1'000'000;
    std::uint64_t budget = 10'000'000;
    bool verbose = false;
};

struct ListSource {
    std::string lists_path;
    int uniform_k = 0;
    int random_k = 0;
    int palette = 9;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--input", opts.input_path, "graph file path ('-' reads stdin)");
    cmd->add_option("--graph6", opts.graph6_inline, "inline graph6 string");
    cmd->add_option("--format", opts.format, "graph input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output_path, "write the JSON result to a file");
    cmd->add_option("--max-vertices", opts.max_vertices, "engine vertex limit")
        ->capture_default_str();
    cmd->add_option("--max-group", opts.max_group, "engine group-size limit")
        ->capture_default_str();
    cmd->add_option("--budget", opts.budget,
                    "exhaustive-search budget (default from SYMBREAK_BUDGET when set)");
    cmd->add_flag("--verbose", opts.verbose, "progress notes on stderr");
}

void add_list_source(CLI::App* cmd, ListSource& src) {
    cmd->add_option("--lists", src.lists_path, "list assignment JSON file");
    cmd->add_option("--uniform", src.uniform_k, "uniform lists {1..k}");
    cmd->add_option("--random", src.random_k, "random k-subsets of a palette");
    cmd->add_option("--palette", src.palette, "palette size for --random")->capture_default_str();
    cmd->add_option("--seed", src.seed, "seed for --random")->capture_default_str();
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_like_graph6(const std::string& text) {
    std::string_view sv = text;
    if (sv.starts_with(">>graph6<<")) return true;
    const auto eol = sv.find('\n');
    std::string_view first = sv.substr(0, eol);
    while (!first.empty() && (first.back() == '\r' || first.back() == ' '))
        first.remove_suffix(1);
    if (first.empty()) return false;
    if (first.find(' ') != std::string_view::npos || first.find('\t') != std::string_view::npos)
        return false;
    const unsigned char head = static_cast<unsigned char>(first.front());
    return head >= 63 && head <= 126;
}

Graph load_graph(const CommonOptions& opts) {
    if (!opts.graph6_inline.empty() && !opts.input_path.empty())
        throw std::invalid_argument("choose one graph source: --input or --graph6");
    if (!opts.graph6_inline.empty()) return parse_graph6(opts.graph6_inline);
    if (opts.input_path.empty())
        throw std::invalid_argument("no graph source; use --input or --graph6");
    const std::string text = read_input(opts.input_path);
    if (opts.format == "graph6") return parse_graph6(text);
    if (opts.format == "edgelist") return parse_edge_list(text);
    return looks_like_graph6(text) ? parse_graph6(text) : parse_edge_list(text);
}

ListAssignment load_lists(const Graph& g, const ListSource& src, bool include_vertices) {
    const int sources = (!src.lists_path.empty() ? 1 : 0) + (src.uniform_k > 0 ? 1 : 0) +
                        (src.random_k > 0 ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument(
            "choose exactly one list source: --lists, --uniform or --random");
    if (src.uniform_k > 0) return uniform_lists(g, src.uniform_k, include_vertices);
    if (src.random_k > 0)
        return random_list_assignment(g, src.random_k, src.palette, src.seed, include_vertices);
    const json j = json::parse(read_input(src.lists_path));
    ListAssignment lists = lists_from_json(g, j);
    if (include_vertices && !lists.has_vertex_lists())
        throw std::invalid_argument("total colouring needs vertex lists");
    return lists;
}

EngineLimits engine_limits(const CommonOptions& opts) {
    return EngineLimits{opts.max_vertices, opts.max_group};
}

void emit(const CommonOptions& opts, const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (opts.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.output_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write '" + opts.output_path + "'");
        out << text;
    }
}

json permutations_json(const std::vector<Permutation>& perms) {
    json arr = json::array();
    for (const Permutation& p : perms) arr.push_back(permutation_to_json(p));
    return json{{"count", perms.size()}, {"automorphisms", std::move(arr)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry-breaking list colourings of small graphs"};
    app.require_subcommand(1);

    CommonOptions opts;
    if (const char* env = std::getenv("SYMBREAK_BUDGET")) {
        try {
            opts.budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "symbreak: ignoring unparsable SYMBREAK_BUDGET\n";
        }
    }
    ListSource list_source;
    int root = -1;
    bool total = false;
    bool canonical = false;
    std::string colouring_path;

    CLI::App* autos = app.add_subcommand("autos", "list all automorphisms");
    CLI::App* small_autos = app.add_subcommand("small-autos", "list the small automorphisms");
    CLI::App* orbits = app.add_subcommand("orbits", "orbit partition of a root stabilizer");
    orbits->add_option("--root", root, "root vertex")->required();
    CLI::App* color_edges =
        app.add_subcommand("color-edges", "breaking edge colouring from 3-lists");
    CLI::App* color_total =
        app.add_subcommand("color-total", "breaking total colouring from 2-lists");
    CLI::App* verify = app.add_subcommand("verify", "verify a colouring file");
    verify->add_option("--coloring", colouring_path, "colouring JSON file")->required();
    verify->add_option("--root", root, "verify against the stabilizer of this root");
    verify->add_flag("--total", total, "the file carries a total colouring");
    CLI::App* index = app.add_subcommand("index", "small distinguishing index and list bounds");
    index->add_flag("--canonical-lists", canonical,
                    "escalate to canonical list-pattern enumeration");
    CLI::App* oracle =
        app.add_subcommand("oracle", "exhaustive search for a breaking colouring from lists");

    for (CLI::App* cmd : {autos, small_autos, orbits, color_edges, color_total, verify, index, oracle})
        add_common(cmd, opts);
    for (CLI::App* cmd : {color_edges, color_total, oracle}) add_list_source(cmd, list_source);

    CLI11_PARSE(app, argc, argv);

    try {
        const Graph g = load_graph(opts);
        const EngineLimits limits = engine_limits(opts);
        if (opts.verbose)
            std::cerr << "symbreak: n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";

        if (autos->parsed()) {
            emit(opts, permutations_json(enumerate_automorphisms(g, limits)));
        } else if (small_autos->parsed()) {
            emit(opts, permutations_json(small_automorphisms(g, limits)));
        } else if (orbits->parsed()) {
            emit(opts, orbits_to_json(vertex_orbits(g, root, limits)));
        } else if (color_edges->parsed()) {
            const ListAssignment lists = load_lists(g, list_source, false);
            const TheoremResult result = theorem_edge_colouring(g, lists, limits);
            const VerifierReport report = breaks_all_small(g, result.colouring, limits);
            json traces = json::array();
            for (const CorrectionTrace& t : result.traces) traces.push_back(trace_to_json(t));
            emit(opts, json{{"colouring", colouring_to_json(g, result.colouring)},
                            {"verified", report.ok},
                            {"traces", std::move(traces)}});
        } else if (color_total->parsed()) {
            const ListAssignment lists = load_lists(g, list_source, true);
            const TotalColouring result = total_colouring(g, lists, limits);
            const VerifierReport report = breaks_all_small_total(g, result, limits);
            emit(opts, json{{"colouring", colouring_to_json(g, result)},
                            {"verified", report.ok}});
        } else if (verify->parsed()) {
            json j = json::parse(read_input(colouring_path));
            if (j.contains("colouring")) j = j.at("colouring"); // accept color-* output verbatim
            VerifierReport report;
            if (total && root >= 0)
                throw std::invalid_argument("--root does not combine with --total");
            if (total) {
                report = breaks_all_small_total(g, total_colouring_from_json(g, j), limits);
            } else if (root >= 0) {
                report = breaks_all_small_rooted(g, root, edge_colouring_from_json(g, j), limits);
            } else {
                report = breaks_all_small(g, edge_colouring_from_json(g, j), limits);
            }
            emit(opts, report_to_json(report));
            return report.ok ? kExitOk : kExitVerifyFailed;
        } else if (index->parsed()) {
            const OracleOptions oracle_opts{opts.budget};
            const SmallIndexResult value = small_distinguishing_index(g, oracle_opts, limits);
            BoundsOptions bounds_opts;
            bounds_opts.budget = opts.budget;
            bounds_opts.canonical_search = canonical;
            const IndexBounds bounds = small_list_distinguishing_index_bounds(g, bounds_opts, limits);
            emit(opts, json{{"small_distinguishing_index", index_result_to_json(g, value)},
                            {"list_index_bounds", bounds_to_json(g, bounds)}});
        } else if (oracle->parsed()) {
            const ListAssignment lists = load_lists(g, list_source, false);
            const OracleOptions oracle_opts{opts.budget};
            const auto found = exists_breaking_colouring(g, lists, oracle_opts, limits);
            if (found) {
                emit(opts, json{{"exists", true}, {"colouring", colouring_to_json(g, *found)}});
            } else {
                std::uint64_t space = 1;
                for (const auto& list : lists.edge_lists) space *= list.size();
                emit(opts, json{{"exists", false}, {"checked_count", space}});
            }
        }
        return kExitOk;
    } catch (const size_limit_error& e) {
        std::cerr << "symbreak: " << e.what() << "\n";
        return kExitBudget;
    } catch (const budget_error& e) {
        std::cerr << "symbreak: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "symbreak: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "symbreak: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "symbreak: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
