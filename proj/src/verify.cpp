#include "chordal/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "chordal/bipartite.hpp"
#include "chordal/boundary.hpp"
#include "chordal/clique_tree.hpp"
#include "chordal/errors.hpp"

namespace chordal {

bool VerifyResult::pass() const {
    for (const auto& c : checks)
        if (c.failures > 0) return false;
    return true;
}

const CheckStat* VerifyResult::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string VerifyResult::to_text() const {
    std::ostringstream os;
    os << "graphs checked: " << graphs << '\n';
    for (const auto& c : checks) {
        os << (c.failures == 0 ? "pass" : "FAIL") << "  " << c.name << "  checked="
           << c.checked << " failures=" << c.failures << '\n';
        for (const auto& n : c.notes) os << "      " << n << '\n';
    }
    os << (pass() ? "verification passed" : "VERIFICATION FAILED") << '\n';
    return os.str();
}

namespace {

class Suite {
public:
    CheckStat& at(const std::string& name) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            index_[name] = stats_.size();
            stats_.push_back(CheckStat{name});
            return stats_.back();
        }
        return stats_[it->second];
    }
    void record(const std::string& name, bool ok, const std::string& detail = {}) {
        CheckStat& s = at(name);
        ++s.checked;
        if (!ok) {
            ++s.failures;
            if (s.notes.size() < 10 && !detail.empty()) s.notes.push_back(detail);
        }
    }
    std::vector<CheckStat> take() { return std::move(stats_); }

private:
    std::map<std::string, std::size_t> index_;
    std::vector<CheckStat> stats_;
};

std::map<VertexSet, int> edge_label_multiset(const ChordalContext& ctx, const CliqueTree& t) {
    std::map<VertexSet, int> out;
    for (auto [i, j] : t.edges) ++out[set_intersection(ctx.cliques[i], ctx.cliques[j])];
    return out;
}

void check_simplicial_equivalences(Suite& suite, const ChordalContext& ctx) {
    for (Vertex v : ctx.graph.vertices()) {
        bool hood_clique = is_clique(ctx.graph, ctx.graph.neighbors(v));
        int containing = 0;
        for (std::size_t i = 0; i < ctx.clique_count(); ++i)
            if (ctx.cliques[i].contains(v)) ++containing;
        bool in_separator = false;
        for (const auto& [s, nu] : ctx.separators.entries)
            if (s.contains(v)) in_separator = true;
        bool ok = hood_clique == (containing == 1) && hood_clique == !in_separator;
        suite.record("simplicial-equivalences", ok,
                     "vertex " + std::to_string(v) + " disagrees");
    }
}

void check_separator_properties(Suite& suite, const ChordalContext& ctx) {
    const Graph& g = ctx.graph;
    for (const auto& [s, nu] : ctx.separators.entries) {
        bool clique = is_clique(g, s);
        Graph rest = induced_subgraph(g, set_difference(g.vertices(), s));
        bool separates = connected_components(rest).size() >= 2;
        suite.record("separator-clique-and-separates", clique && separates, "S = " + s.to_string());
    }
    long long total = 0;
    for (const auto& [s, nu] : ctx.separators.entries) total += nu;
    suite.record("separator-multiplicity-sum",
                 total == static_cast<long long>(ctx.clique_count()) - 1 ||
                     ctx.clique_count() == 0,
                 "sum nu != K - 1");
    for (std::size_t a = 0; a < ctx.separators.size(); ++a)
        for (std::size_t b = a + 1; b < ctx.separators.size(); ++b) {
            auto ca = cliques_containing(ctx.cliques, ctx.separators.entries[a].first);
            auto cb = cliques_containing(ctx.cliques, ctx.separators.entries[b].first);
            suite.record("distinct-separators-distinct-upsets", ca != cb,
                         ctx.separators.entries[a].first.to_string() + " vs " +
                             ctx.separators.entries[b].first.to_string());
        }
}

void check_component_lemma(Suite& suite, const ChordalContext& ctx) {
    for (const auto& s : inclusion_minimal_separators(ctx.separators)) {
        Graph rest = induced_subgraph(ctx.graph, set_difference(ctx.graph.vertices(), s));
        std::vector<VertexSet> seen;
        for (const auto& gamma : connected_components(rest)) {
            Graph part = induced_subgraph(ctx.graph, set_union(gamma, s));
            for (const auto& c : maximal_cliques(part).cliques) seen.push_back(c);
        }
        std::sort(seen.begin(), seen.end());
        bool disjoint = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
        suite.record("component-lemma", disjoint && seen == ctx.cliques.cliques,
                     "S = " + s.to_string());
    }
}

void check_separation_pairs(Suite& suite, const ChordalContext& ctx) {
    if (is_complete(ctx.graph)) return;
    VertexSet simplicial = simplicial_vertices(ctx.graph);
    bool two_nonadjacent = false;
    for (Vertex u : simplicial)
        for (Vertex v : simplicial)
            if (u < v && !ctx.graph.has_edge(u, v)) two_nonadjacent = true;
    suite.record("two-nonadjacent-simplicial-vertices", simplicial.size() >= 2 && two_nonadjacent);

    // Stronger form: two boundary cliques whose simplicial parts are
    // non-adjacent.
    bool found = false;
    const int k = static_cast<int>(ctx.clique_count());
    for (int a = 0; a < k && !found; ++a) {
        if (!is_boundary_clique(ctx, a).first) continue;
        VertexSet sa = simplicial_part(ctx, a);
        for (int b = a + 1; b < k && !found; ++b) {
            if (!is_boundary_clique(ctx, b).first) continue;
            VertexSet sb = simplicial_part(ctx, b);
            bool adjacent = false;
            for (Vertex u : sa)
                for (Vertex v : sb)
                    if (ctx.graph.has_edge(u, v)) adjacent = true;
            if (!adjacent && !sa.empty() && !sb.empty()) found = true;
        }
    }
    suite.record("two-nonadjacent-boundary-cliques", found);
}

void check_boundary(Suite& suite, const ChordalContext& ctx, bool* any_not_strongly,
                    bool* any_simplicial_not_boundary) {
    const int k = static_cast<int>(ctx.clique_count());
    const bool complete = is_complete(ctx.graph);
    for (int c = 0; c < k; ++c) {
        auto [boundary, witness] = is_boundary_clique(ctx, c);
        if (boundary) {
            suite.record("boundary-implies-simplicial", !simplicial_part(ctx, c).empty());
            suite.record("dominant-witness-intersection",
                         set_intersection(ctx.cliques[c], ctx.cliques[*witness]) ==
                             set_difference(ctx.cliques[c], simplicial_part(ctx, c)));
        }
        if (!complete) {
            bool via_sep = boundary_via_separator(ctx, c);
            bool via_rem = boundary_via_removal(ctx, c);
            suite.record("boundary-three-way", boundary == via_sep && via_sep == via_rem,
                         "clique " + ctx.cliques[c].to_string());
            bool strongly = is_strongly_simplicial(ctx, c);
            suite.record("strongly-simplicial-implies-boundary", !strongly || boundary,
                         "clique " + ctx.cliques[c].to_string());
            if (boundary && !strongly && any_not_strongly) *any_not_strongly = true;
            if (!boundary && !simplicial_part(ctx, c).empty() && any_simplicial_not_boundary)
                *any_simplicial_not_boundary = true;
        }
    }
    suite.record("boundary-components", boundary_components_check(ctx).pass);
}

void check_counting(Suite& suite, const ChordalContext& ctx,
                    const std::vector<CliqueTree>& trees) {
    BigInt count = count_clique_trees(ctx);
    suite.record("count-equals-enumeration", count == trees.size(),
                 "count " + count.str() + " != " + std::to_string(trees.size()));
    for (const auto& t : trees) {
        std::map<VertexSet, int> labels = edge_label_multiset(ctx, t);
        std::map<VertexSet, int> catalog(ctx.separators.entries.begin(),
                                         ctx.separators.entries.end());
        suite.record("edge-labels-are-separator-multiset", labels == catalog);
    }

    const int k = static_cast<int>(ctx.clique_count());
    if (k >= 2 && k <= 6) {
        BigInt cayley = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(k - 2));
        bool arbitrary = is_arbitrary_tree(ctx);
        bool all_valid = BigInt(trees.size()) == cayley;
        suite.record("arbitrariness-iff", arbitrary == (count == cayley && all_valid));
    }
    auto forms = unique_tree_formulations(ctx);
    bool unique = count == 1;
    suite.record("uniqueness-formulations",
                 forms[0] == unique && forms[1] == unique && forms[2] == unique);
}

void check_sequences(Suite& suite, const ChordalContext& ctx,
                     const std::vector<CliqueTree>& trees,
                     const std::vector<PerfectSequence>* sequences) {
    if (sequences) {
        // nu-invariance: the separator multiset of every perfect sequence is
        // the catalog.
        std::map<VertexSet, int> catalog(ctx.separators.entries.begin(),
                                         ctx.separators.entries.end());
        for (const auto& pi : *sequences) {
            std::map<VertexSet, int> ms;
            for (const auto& s : pi.separators) ++ms[s];
            suite.record("nu-invariance", ms == catalog);
        }
        for (const auto& pi : *sequences) {
            CliqueTree t = tree_from_sequence(ctx.cliques, pi);
            suite.record("tree-from-sequence-valid", is_clique_tree(ctx, t));
        }
    }
    for (const auto& t : trees)
        for (int root : {0, t.nodes - 1})
            suite.record("sequence-from-tree-perfect",
                         is_perfect_sequence(ctx, sequence_from_tree(ctx.cliques, t, root).order));

    // Any clique can start a perfect sequence.
    for (int c = 0; c < static_cast<int>(ctx.clique_count()); ++c) {
        PerfectSequence pi = sequence_from_tree(ctx.cliques, trees.front(), c);
        suite.record("any-first-clique", pi.order.front() == c &&
                                             is_perfect_sequence(ctx, pi.order));
    }
}

void check_prefix_subtree(Suite& suite, const ChordalContext& ctx,
                          const std::vector<CliqueTree>& trees,
                          const std::vector<PerfectSequence>& sequences) {
    const int k = static_cast<int>(ctx.clique_count());
    if (k > 5) return;
    std::vector<std::vector<bool>> prefix_sets;
    for (const auto& pi : sequences)
        for (int len = 1; len <= k; ++len) {
            std::vector<bool> in(k, false);
            for (int i = 0; i < len; ++i) in[pi.order[i]] = true;
            prefix_sets.push_back(std::move(in));
        }
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> subset;
        std::vector<bool> in(k, false);
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) {
                subset.push_back(i);
                in[i] = true;
            }
        bool some_tree = false;
        for (const auto& t : trees) {
            CliqueTree probe = t;
            // Connected iff the induced edge count is |subset| - 1 (subgraph
            // of a tree is a forest).
            std::size_t inner = 0;
            for (auto [i, j] : probe.edges)
                if (in[i] && in[j]) ++inner;
            if (inner + 1 == subset.size()) {
                some_tree = true;
                break;
            }
        }
        bool some_prefix =
            std::find(prefix_sets.begin(), prefix_sets.end(), in) != prefix_sets.end();
        suite.record("prefix-subtree-correspondence", some_tree == some_prefix);
    }
}

void check_relation(Suite& suite, const ChordalContext& ctx,
                    const std::vector<CliqueTree>& trees,
                    const std::vector<PerfectSequence>& sequences, bool* any_noncomplete_b) {
    BipartiteGraph b;
    b.trees = trees;
    b.sequences = sequences;
    for (std::size_t ti = 0; ti < trees.size(); ++ti)
        for (std::size_t si = 0; si < sequences.size(); ++si)
            if (in_relation(ctx, trees[ti], sequences[si]))
                b.edges.emplace_back(static_cast<int>(ti), static_cast<int>(si));

    std::vector<int> tree_degree(trees.size(), 0), seq_degree(sequences.size(), 0);
    for (auto [t, s] : b.edges) {
        ++tree_degree[t];
        ++seq_degree[s];
    }
    for (int d : tree_degree) suite.record("bipartite-degree-positive", d >= 1);
    for (int d : seq_degree) suite.record("bipartite-degree-positive", d >= 1);
    suite.record("bipartite-connectivity", is_connected(b));
    if (any_noncomplete_b && b.edges.size() < trees.size() * sequences.size())
        *any_noncomplete_b = true;

    if (ctx.clique_count() <= 5) {
        for (std::size_t ti = 0; ti < trees.size(); ++ti) {
            auto from_tree = all_sequences_from_tree(ctx, trees[ti]);
            for (std::size_t si = 0; si < sequences.size(); ++si) {
                bool related = in_relation(ctx, trees[ti], sequences[si]);
                auto from_seq = all_trees_from_sequence(ctx.cliques, sequences[si]);
                bool via_seq = std::find(from_seq.begin(), from_seq.end(), trees[ti]) !=
                               from_seq.end();
                bool via_tree = std::find(from_tree.begin(), from_tree.end(), sequences[si]) !=
                                from_tree.end();
                suite.record("relation-symmetry", related == via_seq && via_seq == via_tree);
            }
        }
    }
}

void check_induced_subtree_lemma(Suite& suite, const ChordalContext& ctx) {
    const int k = static_cast<int>(ctx.clique_count());
    if (k > 5) return;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) subset.push_back(i);
        bool restrictable = false;
        auto restricted = induced_subtree_restriction(ctx, subset, &restrictable);
        if (!restrictable) continue;
        VertexSet vs;
        for (int c : subset) vs = set_union(vs, ctx.cliques[c]);
        ChordalContext sub = ChordalContext::build(induced_subgraph(ctx.graph, vs));
        std::vector<VertexSet> expected;
        for (int c : subset) expected.push_back(ctx.cliques[c]);
        if (sub.cliques.cliques != expected) continue;
        // Every restricted tree must be a clique tree of the induced subgraph.
        auto sub_trees = enumerate_clique_trees(sub);
        bool all_valid = true;
        for (const auto& rt : restricted)
            if (std::find(sub_trees.begin(), sub_trees.end(), rt) == sub_trees.end())
                all_valid = false;
        suite.record("induced-subtree-lemma", !restricted.empty() && all_valid);
    }
}

void check_one_graph(Suite& suite, const Graph& g, bool* any_not_strongly,
                     bool* any_simplicial_not_boundary, bool* any_noncomplete_b) {
    ChordalContext ctx = ChordalContext::build(g);
    const int k = static_cast<int>(ctx.clique_count());

    check_simplicial_equivalences(suite, ctx);
    check_separator_properties(suite, ctx);
    check_component_lemma(suite, ctx);
    check_separation_pairs(suite, ctx);
    check_boundary(suite, ctx, any_not_strongly, any_simplicial_not_boundary);

    auto trees = enumerate_clique_trees(ctx);
    check_counting(suite, ctx, trees);

    std::vector<PerfectSequence> sequences;
    bool have_sequences = k <= 8;
    if (have_sequences) sequences = all_perfect_sequences(ctx);
    check_sequences(suite, ctx, trees, have_sequences ? &sequences : nullptr);

    suite.record("endpoint-theorems", endpoint_boundary_check(ctx).pass);
    if (have_sequences && k >= 2)
        suite.record("final-clique-theorem", final_clique_check(ctx).pass);
    if (!is_complete(ctx.graph))
        suite.record("endpoint-components", endpoint_component_check(ctx).pass);

    if (have_sequences) {
        check_prefix_subtree(suite, ctx, trees, sequences);
        check_relation(suite, ctx, trees, sequences, any_noncomplete_b);
    }
    check_induced_subtree_lemma(suite, ctx);
}

void negative_control(Suite& suite) {
    // Path of three cliques; the star tree centered on an end clique breaks
    // the junction property and must be rejected.
    Graph g = Graph::from_edges({{1, 2}, {2, 3}, {3, 4}});
    ChordalContext ctx = ChordalContext::build(g);
    CliqueTree bad;
    bad.nodes = 3;
    bad.edges = {{0, 1}, {0, 2}};
    suite.record("negative-control-non-junction-tree", !is_clique_tree(ctx, bad));
}

}  // namespace

VerifyResult run_verification(const VerifyOptions& options) {
    Suite suite;
    VerifyResult result;
    bool any_not_strongly = false;
    bool any_simplicial_not_boundary = false;
    bool any_noncomplete_b = false;

    for (const Graph& g : exhaustive_corpus(options.max_n)) {
        check_one_graph(suite, g, &any_not_strongly, &any_simplicial_not_boundary,
                        &any_noncomplete_b);
        ++result.graphs;
    }

    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.random_count; ++i) {
        GenerateMethod method =
            i % 2 == 0 ? GenerateMethod::TreeOfCliques : GenerateMethod::FillIn;
        int n = 4 + static_cast<int>(rng() % 7);  // 4..10
        Graph g = random_chordal(n, rng(), method);
        suite.record("generator-chordal", is_chordal(g) && is_connected(g));
        ChordalContext ctx = ChordalContext::build(g);
        while (ctx.clique_count() > 8) {
            g = random_chordal(n, rng(), method);
            ctx = ChordalContext::build(g);
        }
        auto trees = enumerate_clique_trees(ctx);
        suite.record("random-count-agreement", count_clique_trees(ctx) == trees.size());
        if (g.vertex_count() <= 8 && ctx.clique_count() <= 6) {
            BipartiteGraph b = build_bipartite(ctx);
            suite.record("random-bipartite-connectivity", is_connected(b));
        }
        ++result.graphs;
    }

    // Existence witnesses: the smallest instances appear at n = 6, 5 and 4.
    if (options.max_n >= 6)
        suite.record("exists-boundary-not-strongly-simplicial", any_not_strongly);
    if (options.max_n >= 5)
        suite.record("exists-simplicial-not-boundary", any_simplicial_not_boundary);
    if (options.max_n >= 4)
        suite.record("exists-non-complete-bipartite", any_noncomplete_b);
    negative_control(suite);

    result.checks = suite.take();
    return result;
}

}  // namespace chordal
