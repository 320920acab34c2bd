// edds: decide, construct, and verify exact doubly dominating sets on graphs
// and on their subdivision / Mycielskian / middle transforms (and the
// complements of those), cross-checked against an exhaustive-search oracle.
//
// Subcommands: gen, transform, solve, decide, verify, crosscheck.
// Input graphs are graph6 lines on stdin or --in FILE; output is JSON lines
// (one object per input graph) except crosscheck, which emits one JSON
// document. Exit status: 0 pass, 1 check/parse failure, 2 usage error.

#include "edds/characterizations.hpp"
#include "edds/crosscheck.hpp"
#include "edds/graph.hpp"
#include "edds/solver.hpp"
#include "edds/transforms.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

struct InputLine {
    std::size_t number; // 1-based, counting every physical line
    std::string text;
};

std::vector<InputLine> read_graph_lines(const std::string& path) {
    std::vector<InputLine> lines;
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty()) {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open input file: " + path);
        in = &file;
    }
    std::string raw;
    std::size_t number = 0;
    while (std::getline(*in, raw)) {
        ++number;
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
            raw.pop_back();
        if (raw.empty()) continue;
        lines.push_back({number, raw});
    }
    return lines;
}

int solver_bound_from_env() {
    if (const char* env = std::getenv("EDDS_MAX_N")) {
        try {
            const int bound = std::stoi(env);
            if (bound > 0) return bound;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid EDDS_MAX_N value \"" << env << "\"\n";
    }
    return edds::kDefaultSolverBound;
}

json vertex_set_json(edds::VertexSet s) {
    json out = json::array();
    for (int v : s) out.push_back(v);
    return out;
}

json tags_json(edds::VertexSet s, const std::vector<edds::VertexTag>& tags) {
    json out = json::array();
    for (int v : s) out.push_back(tags[static_cast<std::size_t>(v)].render());
    return out;
}

// ---------------------------------------------------------------- gen ----

int cmd_gen(const std::string& family_name, int n) {
    const auto family = edds::parse_family(family_name);
    if (!family) {
        std::cerr << "error: unknown family \"" << family_name << "\"\n";
        return 2;
    }
    try {
        std::cout << edds::to_graph6(edds::gen_family(*family, n)) << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------- transform ----

int cmd_transform(const std::string& op, const std::string& in_path,
                  const std::string& tags_path) {
    std::ofstream tags_file;
    if (!tags_path.empty()) {
        tags_file.open(tags_path);
        if (!tags_file) {
            std::cerr << "error: cannot open tag sidecar file: " << tags_path << "\n";
            return 1;
        }
    }
    for (const auto& line : read_graph_lines(in_path)) {
        edds::Graph g;
        try {
            g = edds::parse_graph6(line.text);
        } catch (const std::exception& e) {
            std::cerr << "error: line " << line.number << ": " << e.what() << "\n";
            return 1;
        }
        edds::TaggedGraph t;
        try {
            if (op == "subdivision") t = edds::subdivision(g);
            else if (op == "mycielskian") t = edds::mycielskian(g);
            else if (op == "middle") t = edds::middle(g);
            else if (op == "line") t = edds::line_graph(g);
            else { // complement: original vertices keep their identities
                t.graph = edds::complement(g);
                t.source_n = g.order();
                for (int i = 0; i < g.order(); ++i)
                    t.tags.push_back(edds::VertexTag::original(i));
            }
        } catch (const std::length_error& e) {
            std::cerr << "error: line " << line.number << ": " << e.what() << "\n";
            return 1;
        }
        std::cout << edds::to_graph6(t.graph) << "\n";
        if (tags_file) {
            json sidecar;
            sidecar["line"] = line.number;
            sidecar["tags"] = json::array();
            for (const auto& tag : t.tags) sidecar["tags"].push_back(tag.render());
            tags_file << sidecar.dump() << "\n";
        }
    }
    return 0;
}

// --------------------------------------------------------------- solve ----

int cmd_solve(const std::string& in_path, int bound) {
    int status = 0;
    for (const auto& line : read_graph_lines(in_path)) {
        json out;
        try {
            const auto g = edds::parse_graph6(line.text);
            const auto stats = edds::edds_stats(g, bound);
            out["exists"] = stats.exists;
            if (stats.exists) out["size"] = *stats.size;
            out["count"] = stats.count;
            if (stats.exists) {
                const auto witness = edds::find_edds(g, bound);
                out["witness"] = vertex_set_json(*witness);
                out["matching_ok"] = edds::is_one_regular_on(g, *witness);
            }
        } catch (const std::exception& e) {
            out = json{{"line", line.number}, {"error", e.what()}};
            status = 1;
        }
        std::cout << out.dump() << "\n";
    }
    return status;
}

// -------------------------------------------------------------- decide ----

// Deterministic traversal order when g is a path / cycle under any labeling.
std::optional<std::vector<int>> path_order(const edds::Graph& g) {
    const int n = g.order();
    if (n < 1 || g.size() != n - 1) return std::nullopt;
    if (n == 1) return std::vector<int>{0};
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return std::nullopt;
        if (g.degree(v) == 1 && start < 0) start = v;
    }
    if (start < 0) return std::nullopt;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        const auto nb = g.neighbors(cur);
        int next = -1;
        for (int u : nb)
            if (u != prev) next = u;
        if (next < 0) return std::nullopt; // disconnected
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

std::optional<std::vector<int>> cycle_order(const edds::Graph& g) {
    const int n = g.order();
    if (n < 3 || g.size() != n) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return std::nullopt;
    std::vector<int> order{0};
    int prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int u : g.neighbors(cur))
            if (u != prev && (next < 0 || u < next)) next = u;
        if (next == 0 || next < 0) return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return g.has_edge(order.back(), 0) ? std::optional(order) : std::nullopt;
}

json decision_json(const std::string& target, const edds::Decision& decision,
                   const std::vector<edds::VertexTag>& target_tags,
                   int source_n) {
    json out;
    out["target"] = target;
    out["exists"] = decision.exists;
    out["reason"] = std::string(edds::reason_name(decision.reason));
    if (decision.witness) {
        out["witness"] = vertex_set_json(*decision.witness);
        out["witness_tags"] = tags_json(*decision.witness, target_tags);
    }
    if (decision.omega || decision.isolated_pair) {
        json cert;
        std::vector<edds::VertexTag> source_tags;
        for (int i = 0; i < source_n; ++i)
            source_tags.push_back(edds::VertexTag::original(i));
        if (decision.omega) {
            cert["omega"] = vertex_set_json(*decision.omega);
            cert["omega_tags"] = tags_json(*decision.omega, source_tags);
        }
        if (decision.isolated_pair) {
            const auto [a, b] = *decision.isolated_pair;
            cert["isolated_pair"] = json::array({a, b});
            cert["isolated_pair_tags"] =
                json::array({source_tags[static_cast<std::size_t>(a)].render(),
                             source_tags[static_cast<std::size_t>(b)].render()});
        }
        out["certificate"] = cert;
    }
    return out;
}

int cmd_decide(const std::string& target, const std::string& in_path) {
    const bool family_target = target == "path" || target == "cycle";
    if (!family_target && !edds::parse_target(target)) {
        std::cerr << "error: unknown target \"" << target << "\"\n";
        return 2;
    }
    int status = 0;
    for (const auto& line : read_graph_lines(in_path)) {
        json out;
        try {
            const auto g = edds::parse_graph6(line.text);
            if (family_target) {
                const auto order =
                    target == "path" ? path_order(g) : cycle_order(g);
                if (!order)
                    throw std::invalid_argument("input graph is not a " + target);
                auto decision = target == "path" ? edds::path_edds(g.order())
                                                 : edds::cycle_edds(g.order());
                if (decision.witness) {
                    // canonical witness positions mapped along the traversal
                    edds::VertexSet mapped;
                    for (int pos : *decision.witness)
                        mapped.insert((*order)[static_cast<std::size_t>(pos)]);
                    decision.witness = mapped;
                }
                std::vector<edds::VertexTag> tags;
                for (int i = 0; i < g.order(); ++i)
                    tags.push_back(edds::VertexTag::original(i));
                out = decision_json(target, decision, tags, g.order());
            } else {
                const auto t = *edds::parse_target(target);
                const auto built = edds::build_target(g, t);
                const auto decision = edds::decide_target(g, t);
                out = decision_json(target, decision, built.tags, g.order());
            }
        } catch (const std::exception& e) {
            out = json{{"line", line.number}, {"error", e.what()}};
            status = 1;
        }
        std::cout << out.dump() << "\n";
    }
    return status;
}

// -------------------------------------------------------------- verify ----

std::optional<edds::VertexSet> parse_vertex_set(const std::string& text) {
    edds::VertexSet s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (used != item.size() || v < 0 || v >= edds::Graph::kMaxVertices)
            return std::nullopt;
        s.insert(v);
    }
    return s;
}

int cmd_verify(const std::string& in_path, const std::string& set_text) {
    const auto set = parse_vertex_set(set_text);
    if (!set) {
        std::cerr << "error: --set expects comma-separated vertex indices\n";
        return 2;
    }
    const auto lines = read_graph_lines(in_path);
    if (lines.size() != 1) {
        std::cerr << "error: verify expects exactly one input graph, got "
                  << lines.size() << "\n";
        return 1;
    }
    json out;
    try {
        const auto g = edds::parse_graph6(lines.front().text);
        const auto violations = edds::verify_edds(g, *set);
        out["valid"] = violations.empty();
        out["violations"] = json::array();
        for (const auto& v : violations)
            out["violations"].push_back({{"vertex", v.vertex}, {"count", v.count}});
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    std::cout << out.dump() << "\n";
    return out["valid"].get<bool>() ? 0 : 1;
}

// ---------------------------------------------------------- crosscheck ----

json record_json(const edds::CrossCheckRecord& rec, bool timing) {
    json out;
    out["graph6"] = rec.graph6;
    out["target"] = std::string(edds::target_name(rec.target));
    out["decider_exists"] = rec.decider_exists;
    out["oracle_exists"] = rec.oracle_exists;
    out["witness_valid"] = rec.witness_valid ? json(*rec.witness_valid) : json();
    out["size_law_ok"] = rec.size_law_ok ? json(*rec.size_law_ok) : json();
    out["pass"] = rec.pass();
    if (timing) out["elapsed_ms"] = rec.elapsed_ms;
    return out;
}

int cmd_crosscheck(int max_n, const std::string& targets_text,
                   const std::string& corpus_path, int jobs, bool timing,
                   bool allow_large, int bound) {
    std::vector<edds::Target> targets;
    if (targets_text.empty()) {
        targets.assign(edds::kAllTargets.begin(), edds::kAllTargets.end());
    } else {
        std::stringstream ss(targets_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto t = edds::parse_target(item);
            if (!t) {
                std::cerr << "error: unknown target \"" << item << "\"\n";
                return 2;
            }
            targets.push_back(*t);
        }
    }

    std::vector<edds::Graph> corpus;
    json corpus_desc;
    if (!corpus_path.empty()) {
        for (const auto& line : read_graph_lines(corpus_path)) {
            try {
                corpus.push_back(edds::parse_graph6(line.text));
            } catch (const std::exception& e) {
                std::cerr << "error: corpus line " << line.number << ": " << e.what()
                          << "\n";
                return 1;
            }
        }
        corpus_desc = corpus_path;
    } else {
        if (max_n < 0) {
            std::cerr << "error: crosscheck needs --max-n or --corpus\n";
            return 2;
        }
        if (max_n > 6 && !allow_large) {
            std::cerr << "error: exhaustive sweeps above n = 6 require --allow-large\n";
            return 2;
        }
        if (max_n > 7) {
            std::cerr << "error: exhaustive enumeration is bounded at n <= 7\n";
            return 2;
        }
        corpus = edds::exhaustive_corpus(max_n);
        corpus_desc = json{{"exhaustive_max_n", max_n}};
    }

    edds::CrossCheckOptions options;
    options.targets = targets;
    options.jobs = jobs;
    options.solver_bound = bound;

    edds::CrossCheckReport report;
    try {
        report = edds::run_crosscheck(corpus, options);
    } catch (const edds::BoundExceeded& e) {
        std::cerr << "error: " << e.what()
                  << " (set EDDS_MAX_N to raise the oracle bound)\n";
        return 1;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    json out;
    out["corpus"] = corpus_desc;
    out["graphs"] = corpus.size();
    json targets_json = json::array();
    for (auto t : targets) targets_json.push_back(std::string(edds::target_name(t)));
    out["targets"] = targets_json;
    json totals;
    for (auto t : targets)
        totals[std::string(edds::target_name(t))] = {
            {"pass", report.pass_count(t)}, {"fail", report.fail_count(t)}};
    totals["all"] = {{"pass", report.pass_count()}, {"fail", report.fail_count()}};
    out["totals"] = totals;
    out["records"] = json::array();
    for (const auto& rec : report.records) out["records"].push_back(record_json(rec, timing));
    out["failures"] = json::array();
    for (const auto& rec : report.records)
        if (!rec.pass()) out["failures"].push_back(record_json(rec, timing));
    std::cout << out.dump(2) << "\n";
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact doubly dominating sets: deciders, transforms, oracle"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "emit a canonical family member as graph6");
    std::string gen_family_name;
    int gen_n = 0;
    gen->add_option("--family", gen_family_name, "path|cycle|star|complete|empty")
        ->required();
    gen->add_option("-n,--order", gen_n, "number of vertices")->required();

    auto* transform = app.add_subcommand("transform", "apply a graph transform to graph6 lines");
    std::string transform_op, transform_in, transform_tags;
    transform->add_option("--op", transform_op, "subdivision|mycielskian|middle|line|complement")
        ->required()
        ->check(CLI::IsMember({"subdivision", "mycielskian", "middle", "line", "complement"}));
    transform->add_option("--in", transform_in, "input file (default: stdin)");
    transform->add_option("--tags", transform_tags, "write a JSON-lines tag sidecar to this file");

    auto* solve = app.add_subcommand("solve", "run the exhaustive solver on graph6 lines");
    std::string solve_in;
    solve->add_option("--in", solve_in, "input file (default: stdin)");

    auto* decide = app.add_subcommand("decide", "run a characterization decider");
    std::string decide_target, decide_in;
    decide->add_option("--target", decide_target,
                       "s|s-bar|mu|mu-bar|m|m-bar|path|cycle")
        ->required();
    decide->add_option("--in", decide_in, "input file (default: stdin)");

    auto* verify = app.add_subcommand("verify", "check a vertex set against one graph");
    std::string verify_in, verify_set;
    verify->add_option("--in", verify_in, "input file (default: stdin)");
    verify->add_option("--set", verify_set, "comma-separated 0-based vertex indices")
        ->required();

    auto* crosscheck = app.add_subcommand(
        "crosscheck", "sweep a corpus: decider vs oracle on every target");
    int cc_max_n = -1, cc_jobs = 1;
    std::string cc_targets, cc_corpus;
    bool cc_timing = false, cc_allow_large = false;
    auto* max_n_opt = crosscheck->add_option(
        "--max-n", cc_max_n, "exhaustive corpus bound (all labeled graphs)");
    crosscheck->add_option("--targets", cc_targets, "comma-separated subset of s,s-bar,mu,mu-bar,m,m-bar");
    crosscheck->add_option("--corpus", cc_corpus, "graph6 corpus file instead of exhaustive sweep")
        ->excludes(max_n_opt);
    crosscheck->add_option("--jobs", cc_jobs, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    crosscheck->add_flag("--timing", cc_timing, "include elapsed_ms fields");
    crosscheck->add_flag("--allow-large", cc_allow_large, "permit --max-n 7");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const int bound = solver_bound_from_env();
    try {
        if (gen->parsed()) return cmd_gen(gen_family_name, gen_n);
        if (transform->parsed()) return cmd_transform(transform_op, transform_in, transform_tags);
        if (solve->parsed()) return cmd_solve(solve_in, bound);
        if (decide->parsed()) return cmd_decide(decide_target, decide_in);
        if (verify->parsed()) return cmd_verify(verify_in, verify_set);
        if (crosscheck->parsed())
            return cmd_crosscheck(cc_max_n, cc_targets, cc_corpus, cc_jobs, cc_timing,
                                  cc_allow_large, bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
