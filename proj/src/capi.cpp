#include "chordalkit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "chordal/bipartite.hpp"
#include "chordal/boundary.hpp"
#include "chordal/chordal.hpp"
#include "chordal/clique_tree.hpp"
#include "chordal/errors.hpp"
#include "chordal/generate.hpp"
#include "chordal/io.hpp"
#include "chordal/report.hpp"
#include "chordal/verify.hpp"

struct ck_graph {
    chordal::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ck_status set_error(ck_status st, const std::string& what) {
    g_last_error = what;
    return st;
}

// Runs the body and maps exceptions onto status codes.
template <typename Fn>
ck_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const chordal::NotChordalError& e) {
        return set_error(CK_NOT_CHORDAL, e.what());
    } catch (const chordal::ResourceLimitError& e) {
        return set_error(CK_RESOURCE_LIMIT, e.what());
    } catch (const chordal::ParseError& e) {
        return set_error(CK_PARSE_ERROR, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(CK_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return set_error(CK_INTERNAL_ERROR, e.what());
    } catch (...) {
        return set_error(CK_INTERNAL_ERROR, "unknown error");
    }
}

ck_status require(const void* p, const char* name) {
    if (p) return CK_OK;
    return set_error(CK_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

ck_status emit(char** out, const std::string& text, ck_status st = CK_OK) {
    *out = dup_string(text);
    if (!*out) return set_error(CK_INTERNAL_ERROR, "out of memory");
    return st;
}

}  // namespace

extern "C" {

const char* ck_version(void) { return "1.0.0"; }

const char* ck_last_error(void) { return g_last_error.c_str(); }

void ck_string_free(char* s) { std::free(s); }

ck_status ck_graph_parse(const char* edge_list_text, ck_graph** out) {
    if (require(edge_list_text, "edge_list_text") != CK_OK ||
        require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        auto* g = new ck_graph{chordal::parse_edge_list(edge_list_text)};
        *out = g;
        return CK_OK;
    });
}

void ck_graph_free(ck_graph* g) { delete g; }

ck_status ck_analyze(const ck_graph* g, int as_json, char** out) {
    if (require(g, "g") != CK_OK || require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        nlohmann::json report = chordal::analyze_graph(g->g);
        std::string text = as_json ? report.dump(2) + "\n"
                                   : chordal::render_analysis_text(report);
        return emit(out, text,
                    chordal::analysis_is_chordal(report) ? CK_OK : CK_NOT_CHORDAL);
    });
}

ck_status ck_trees_count(const ck_graph* g, char** out) {
    if (require(g, "g") != CK_OK || require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        return emit(out, chordal::count_clique_trees(g->g).str() + "\n");
    });
}

ck_status ck_trees_enumerate(const ck_graph* g, char** out) {
    if (require(g, "g") != CK_OK || require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        auto ctx = chordal::ChordalContext::build(g->g);
        try {
            std::ostringstream os;
            auto trees = chordal::enumerate_clique_trees(ctx);
            for (std::size_t i = 0; i < trees.size(); ++i) {
                if (i) os << '\n';
                os << chordal::format_clique_tree(ctx.cliques, trees[i]);
            }
            return emit(out, os.str());
        } catch (const chordal::ResourceLimitError& e) {
            // The exact count is still cheap to report.
            std::string text = "enumeration guard exceeded; count = " +
                               chordal::count_clique_trees(ctx).str() + "\n";
            emit(out, text);
            return set_error(CK_RESOURCE_LIMIT, e.what());
        }
    });
}

ck_status ck_tree_check(const ck_graph* g, const char* tree_text, char** out) {
    if (require(g, "g") != CK_OK || require(tree_text, "tree_text") != CK_OK ||
        require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        auto ctx = chordal::ChordalContext::build(g->g);
        chordal::CliqueTree t = chordal::parse_clique_tree(ctx.cliques, tree_text);
        if (chordal::is_clique_tree(ctx, t)) return emit(out, "valid clique tree\n");
        chordal::VertexSet violated;
        std::string text;
        if (chordal::junction_violation(ctx, t, &violated))
            text = "junction property violated at S=" + violated.to_string() + "\n";
        else
            text = "not a spanning tree of the clique set\n";
        return emit(out, text, CK_VERIFY_FAIL);
    });
}

ck_status ck_sequences_enumerate(const ck_graph* g, char** out) {
    if (require(g, "g") != CK_OK || require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        auto ctx = chordal::ChordalContext::build(g->g);
        std::ostringstream os;
        for (const auto& pi : chordal::all_perfect_sequences(ctx))
            os << chordal::format_sequence(pi) << '\n';
        return emit(out, os.str());
    });
}

ck_status ck_sequence_check(const ck_graph* g, const char* sequence_line, char** out) {
    if (require(g, "g") != CK_OK || require(sequence_line, "sequence_line") != CK_OK ||
        require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        auto ctx = chordal::ChordalContext::build(g->g);
        auto pi = chordal::parse_sequence_line(sequence_line, ctx.clique_count());
        if (chordal::is_perfect_sequence(ctx, pi)) return emit(out, "perfect sequence\n");
        return emit(out, "not a perfect sequence\n", CK_VERIFY_FAIL);
    });
}

ck_status ck_boundary(const ck_graph* g, int as_json, char** out) {
    if (require(g, "g") != CK_OK || require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        auto ctx = chordal::ChordalContext::build(g->g);
        auto classes = chordal::classify_cliques(ctx);
        if (as_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& c : classes) {
                nlohmann::json e;
                e["index"] = c.clique + 1;
                e["clique"] = ctx.cliques[c.clique].to_string();
                e["class"] = chordal::to_string(c.klass);
                if (c.dominant) e["dominant"] = *c.dominant + 1;
                if (c.boundary_separator)
                    e["boundary_separator"] = c.boundary_separator->to_string();
                arr.push_back(std::move(e));
            }
            return emit(out, arr.dump(2) + "\n");
        }
        std::ostringstream os;
        for (const auto& c : classes) {
            os << c.clique + 1 << ": " << ctx.cliques[c.clique].to_string() << "  "
               << chordal::to_string(c.klass);
            if (c.dominant) os << "  dominant=" << *c.dominant + 1;
            if (c.boundary_separator)
                os << "  boundary-sep=" << c.boundary_separator->to_string();
            os << '\n';
        }
        return emit(out, os.str());
    });
}

ck_status ck_relation(const ck_graph* g, int as_json, char** out) {
    if (require(g, "g") != CK_OK || require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        auto ctx = chordal::ChordalContext::build(g->g);
        chordal::BipartiteGraph b = chordal::build_bipartite(ctx);
        bool connected = chordal::is_connected(b);
        if (as_json) {
            nlohmann::json doc;
            doc["trees"] = nlohmann::json::array();
            for (const auto& t : b.trees) doc["trees"].push_back(chordal::tree_key(t));
            doc["sequences"] = nlohmann::json::array();
            for (const auto& s : b.sequences)
                doc["sequences"].push_back(chordal::sequence_key(s));
            doc["edges"] = nlohmann::json::array();
            for (auto [ti, si] : b.edges)
                doc["edges"].push_back(nlohmann::json::array({ti + 1, si + 1}));
            doc["connected"] = connected;
            return emit(out, doc.dump(2) + "\n");
        }
        std::ostringstream os;
        os << "trees " << b.trees.size() << '\n';
        for (std::size_t i = 0; i < b.trees.size(); ++i)
            os << i + 1 << ": " << chordal::tree_key(b.trees[i]) << '\n';
        os << "sequences " << b.sequences.size() << '\n';
        for (std::size_t i = 0; i < b.sequences.size(); ++i)
            os << i + 1 << ": " << chordal::sequence_key(b.sequences[i]) << '\n';
        os << "edges " << b.edges.size() << '\n';
        for (auto [ti, si] : b.edges) os << ti + 1 << ' ' << si + 1 << '\n';
        os << "connected " << (connected ? "yes" : "no") << '\n';
        return emit(out, os.str());
    });
}

ck_status ck_walk(const ck_graph* g, int start_on_tree, long steps, uint64_t seed,
                  char** out) {
    if (require(g, "g") != CK_OK || require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        auto ctx = chordal::ChordalContext::build(g->g);
        chordal::WalkLog log = chordal::random_walk(ctx, start_on_tree != 0, steps, seed);
        return emit(out, chordal::format_walk_log(log, chordal::graph_hash(g->g)));
    });
}

ck_status ck_generate(int n, uint64_t seed, const char* method, char** out) {
    if (require(method, "method") != CK_OK || require(out, "out") != CK_OK)
        return CK_INVALID_ARGUMENT;
    return guarded([&] {
        chordal::GenerateMethod m;
        if (std::strcmp(method, "tree-of-cliques") == 0)
            m = chordal::GenerateMethod::TreeOfCliques;
        else if (std::strcmp(method, "fill-in") == 0)
            m = chordal::GenerateMethod::FillIn;
        else
            return set_error(CK_INVALID_ARGUMENT,
                             "method must be tree-of-cliques or fill-in");
        return emit(out, chordal::format_edge_list(chordal::random_chordal(n, seed, m)));
    });
}

ck_status ck_verify(int max_n, int random_count, uint64_t seed, char** out) {
    if (require(out, "out") != CK_OK) return CK_INVALID_ARGUMENT;
    return guarded([&] {
        if (max_n < 1 || max_n > 7)
            return set_error(CK_INVALID_ARGUMENT, "max_n must be between 1 and 7");
        if (random_count < 0)
            return set_error(CK_INVALID_ARGUMENT, "random_count must be nonnegative");
        chordal::VerifyOptions opt;
        opt.max_n = max_n;
        opt.random_count = random_count;
        opt.seed = seed;
        chordal::VerifyResult res = chordal::run_verification(opt);
        return emit(out, res.to_text(), res.pass() ? CK_OK : CK_VERIFY_FAIL);
    });
}

}  // extern "C"
