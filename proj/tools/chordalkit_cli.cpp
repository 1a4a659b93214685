// Command-line front end for the chordal-graph structure toolkit. Talks to
// the core exclusively through the C API in chordalkit.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chordalkit.h"

namespace {

struct GraphDeleter {
    void operator()(ck_graph* g) const { ck_graph_free(g); }
};
using GraphPtr = std::unique_ptr<ck_graph, GraphDeleter>;

struct StringDeleter {
    void operator()(char* s) const { ck_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

// 65 (parse error) presents as a usage problem at the command line.
int exit_code(ck_status st) { return st == CK_PARSE_ERROR ? 64 : static_cast<int>(st); }

int fail(ck_status st) {
    std::cerr << "error: " << ck_last_error() << '\n';
    return exit_code(st);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int write_output(const std::string& out_path, const char* text) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return 64;
    }
    out << text;
    return 0;
}

int load_graph(const std::string& path, GraphPtr& graph) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << '\n';
        return 64;
    }
    ck_graph* raw = nullptr;
    ck_status st = ck_graph_parse(text.c_str(), &raw);
    if (st != CK_OK) return fail(st);
    graph.reset(raw);
    return 0;
}

// Emits the (possibly partial) report, then maps the status to an exit code.
int finish(ck_status st, char* text, const std::string& out_path) {
    StringPtr owned(text);
    if (text) {
        int rc = write_output(out_path, text);
        if (rc != 0) return rc;
    }
    if (st != CK_OK && !text) return fail(st);
    if (st != CK_OK && *ck_last_error()) std::cerr << "error: " << ck_last_error() << '\n';
    return exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordal-graph structure toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string out_path;
    std::uint64_t seed = 0;
    app.add_flag("--json", as_json, "emit JSON instead of text where supported");
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized commands");

    std::string path;
    std::string tree_file;
    std::string sequence_line;
    bool do_count = false, do_enumerate = false;
    long steps = 1000;
    std::string start = "tree";
    int gen_n = 0;
    std::string method = "tree-of-cliques";
    int max_n = 6;
    int random_count = 0;

    auto* analyze = app.add_subcommand("analyze", "full structure report for a graph");
    analyze->add_option("path", path, "edge-list file")->required();

    auto* trees = app.add_subcommand("trees", "count, enumerate, or check clique trees");
    trees->add_option("path", path, "edge-list file")->required();
    trees->add_flag("--count", do_count, "print the exact clique-tree count");
    trees->add_flag("--enumerate", do_enumerate, "print every clique tree");
    trees->add_option("--check", tree_file, "verify a serialized tree against the graph");

    auto* sequences = app.add_subcommand("sequences", "enumerate or check perfect sequences");
    sequences->add_option("path", path, "edge-list file")->required();
    sequences->add_option("--check", sequence_line,
                          "verify one sequence of 1-based clique indices, e.g. \"2 1 3\"");

    auto* boundary = app.add_subcommand("boundary", "classify the maximal cliques");
    boundary->add_option("path", path, "edge-list file")->required();

    auto* relation = app.add_subcommand(
        "relation", "materialize the tree/sequence relation and report connectivity");
    relation->add_option("path", path, "edge-list file")->required();

    auto* walk = app.add_subcommand("walk", "seeded random walk over trees and sequences");
    walk->add_option("path", path, "edge-list file")->required();
    walk->add_option("--steps", steps, "number of walk steps")->check(CLI::NonNegativeNumber);
    walk->add_option("--start", start, "starting side")
        ->check(CLI::IsMember({"tree", "sequence"}));

    auto* generate = app.add_subcommand("generate", "emit a random connected chordal graph");
    generate->add_option("--n", gen_n, "number of vertices")->required();
    generate->add_option("--method", method, "generation method")
        ->check(CLI::IsMember({"tree-of-cliques", "fill-in"}));

    auto* verify = app.add_subcommand("verify", "run the structural-theorem check suite");
    verify->add_option("--max-n", max_n, "exhaustive tier: all connected chordal graphs");
    verify->add_option("--random", random_count, "random tier size");

    // Let --json/--out/--seed appear after the subcommand as well.
    for (CLI::App* sub : {analyze, trees, sequences, boundary, relation, walk, generate,
                          verify})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    GraphPtr graph;
    char* text = nullptr;

    if (*analyze) {
        if (int rc = load_graph(path, graph)) return rc;
        ck_status st = ck_analyze(graph.get(), as_json, &text);
        return finish(st, text, out_path);
    }
    if (*trees) {
        if (int rc = load_graph(path, graph)) return rc;
        if (!tree_file.empty()) {
            std::string tree_text;
            if (!read_file(tree_file, tree_text)) {
                std::cerr << "error: cannot read " << tree_file << '\n';
                return 64;
            }
            ck_status st = ck_tree_check(graph.get(), tree_text.c_str(), &text);
            return finish(st, text, out_path);
        }
        if (do_enumerate) {
            ck_status st = ck_trees_enumerate(graph.get(), &text);
            return finish(st, text, out_path);
        }
        if (do_count) {
            ck_status st = ck_trees_count(graph.get(), &text);
            return finish(st, text, out_path);
        }
        std::cerr << "error: pick one of --count, --enumerate, --check\n";
        return 64;
    }
    if (*sequences) {
        if (int rc = load_graph(path, graph)) return rc;
        if (!sequence_line.empty()) {
            ck_status st = ck_sequence_check(graph.get(), sequence_line.c_str(), &text);
            return finish(st, text, out_path);
        }
        ck_status st = ck_sequences_enumerate(graph.get(), &text);
        return finish(st, text, out_path);
    }
    if (*boundary) {
        if (int rc = load_graph(path, graph)) return rc;
        ck_status st = ck_boundary(graph.get(), as_json, &text);
        return finish(st, text, out_path);
    }
    if (*relation) {
        if (int rc = load_graph(path, graph)) return rc;
        ck_status st = ck_relation(graph.get(), as_json, &text);
        return finish(st, text, out_path);
    }
    if (*walk) {
        if (int rc = load_graph(path, graph)) return rc;
        ck_status st = ck_walk(graph.get(), start == "tree", steps, seed, &text);
        return finish(st, text, out_path);
    }
    if (*generate) {
        ck_status st = ck_generate(gen_n, seed, method.c_str(), &text);
        return finish(st, text, out_path);
    }
    if (*verify) {
        ck_status st = ck_verify(max_n, random_count, seed, &text);
        return finish(st, text, out_path);
    }

    return 64;
}
