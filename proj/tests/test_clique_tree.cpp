#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <functional>

#include "chordal/chordal.hpp"
#include "chordal/clique_tree.hpp"
#include "chordal/errors.hpp"
#include "chordal/generate.hpp"

using namespace chordal;

namespace {

const Graph kStar = Graph::from_edges({{1, 2}, {1, 3}, {1, 4}});
const Graph kPath3 = Graph::from_edges({{1, 2}, {2, 3}, {3, 4}});
const Graph kFive = Graph::from_edges({{1, 2}, {2, 3}, {2, 4}, {3, 4}, {2, 5}, {4, 5}});

// Definition-level junction check: for every clique pair, every clique on the
// unique tree path contains the pair's intersection.
bool brute_junction(const ChordalContext& ctx, const CliqueTree& t) {
    const int k = t.nodes;
    auto adj = t.adjacency();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            // Path from a to b by depth-first search.
            std::vector<int> parent(k, -1);
            std::function<void(int, int)> dfs = [&](int v, int p) {
                parent[v] = p;
                for (int w : adj[v])
                    if (w != p) dfs(w, v);
            };
            dfs(a, a);
            VertexSet inter = set_intersection(ctx.cliques[a], ctx.cliques[b]);
            for (int v = b; v != a; v = parent[v])
                if (!is_subset(inter, ctx.cliques[v])) return false;
        }
    return true;
}

// Independent enumeration: try every (K-1)-subset of clique pairs as an edge
// set, keep spanning trees satisfying the definition-level junction check.
std::vector<CliqueTree> brute_enumerate(const ChordalContext& ctx) {
    const int k = static_cast<int>(ctx.clique_count());
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) slots.emplace_back(i, j);
    std::vector<CliqueTree> out;
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        if (std::popcount(mask) != k - 1) continue;
        CliqueTree t;
        t.nodes = k;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1ull << i)) t.edges.push_back(slots[i]);
        // Spanning check via union-find.
        std::vector<int> root(k);
        for (int i = 0; i < k; ++i) root[i] = i;
        std::function<int(int)> find = [&](int v) {
            return root[v] == v ? v : root[v] = find(root[v]);
        };
        bool acyclic = true;
        for (auto [i, j] : t.edges) {
            int a = find(i), b = find(j);
            if (a == b) acyclic = false;
            root[a] = b;
        }
        if (!acyclic) continue;
        if (brute_junction(ctx, t)) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("pinned clique tree counts") {
    CHECK(count_clique_trees(kStar) == 3);
    CHECK(count_clique_trees(kPath3) == 1);
    CHECK(count_clique_trees(kFive) == 2);
    CHECK(count_clique_trees(Graph::from_edges({}, {1})) == 1);
}

TEST_CASE("enumeration matches the brute-force spanning tree filter") {
    for (const Graph& g : exhaustive_corpus(5)) {
        ChordalContext ctx = ChordalContext::build(g);
        if (ctx.clique_count() > 5) continue;
        auto trees = enumerate_clique_trees(ctx);
        CHECK(trees == brute_enumerate(ctx));
        CHECK(count_clique_trees(ctx) == trees.size());
        for (const auto& t : trees) CHECK(is_clique_tree(ctx, t));
    }
}

TEST_CASE("canonical clique tree is valid and deterministic") {
    for (const Graph& g : exhaustive_corpus(4)) {
        ChordalContext ctx = ChordalContext::build(g);
        CliqueTree t = canonical_clique_tree(g, ctx.cliques);
        CHECK(is_clique_tree(ctx, t));
        CHECK(t == canonical_clique_tree(g, ctx.cliques));
    }
}

TEST_CASE("junction violation reporting") {
    ChordalContext ctx = ChordalContext::build(kPath3);
    CliqueTree bad;
    bad.nodes = 3;
    bad.edges = {{0, 1}, {0, 2}};  // star centered on an end clique
    CHECK_FALSE(is_clique_tree(ctx, bad));
    VertexSet violated;
    CHECK(junction_violation(ctx, bad, &violated));
    CHECK(violated == VertexSet{3});

    CliqueTree wrong_nodes;
    wrong_nodes.nodes = 2;
    CHECK_THROWS_AS((void)is_clique_tree(ctx, wrong_nodes), std::invalid_argument);
}

TEST_CASE("sequence and tree conversions round-trip") {
    for (const Graph& g : exhaustive_corpus(5)) {
        ChordalContext ctx = ChordalContext::build(g);
        const int k = static_cast<int>(ctx.clique_count());
        for (const auto& pi : all_perfect_sequences(ctx)) {
            CliqueTree t = tree_from_sequence(ctx.cliques, pi);
            CHECK(is_clique_tree(ctx, t));
            for (const auto& t2 : all_trees_from_sequence(ctx.cliques, pi))
                CHECK(is_clique_tree(ctx, t2));
        }
        for (const auto& t : enumerate_clique_trees(ctx))
            for (int root = 0; root < k; ++root) {
                PerfectSequence pi = sequence_from_tree(ctx.cliques, t, root);
                CHECK(pi.order.front() == root);
                CHECK(is_perfect_sequence(ctx, pi.order));
            }
    }
}

TEST_CASE("explicit parent choice in sequence-to-tree") {
    ChordalContext ctx = ChordalContext::build(kStar);
    PerfectSequence pi = make_perfect_sequence(ctx, {0, 1, 2});
    // Attach each clique to its immediate predecessor: a chain, not the
    // canonical star rooted at the first clique.
    CliqueTree t = tree_from_sequence(ctx.cliques, pi, [](int k) { return k - 1; });
    CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(tree_from_sequence(ctx.cliques, pi, [](int) { return 7; }),
                    std::invalid_argument);
}

TEST_CASE("endpoints") {
    CliqueTree path{3, {{0, 1}, {1, 2}}};
    CHECK(endpoints(path) == std::vector<int>{0, 2});
    CHECK(endpoints(CliqueTree{1, {}}) == std::vector<int>{0});
}

TEST_CASE("uniqueness and arbitrariness classification") {
    CHECK(is_unique_tree(kPath3));
    CHECK_FALSE(is_unique_tree(kStar));
    CHECK(is_arbitrary_tree(ChordalContext::build(kStar)));
    CHECK_FALSE(is_arbitrary_tree(ChordalContext::build(kFive)));
    CHECK_THROWS_AS(is_arbitrary_tree(ChordalContext::build(Graph::from_edges({}, {1}))),
                    std::invalid_argument);
    auto forms = unique_tree_formulations(ChordalContext::build(kPath3));
    CHECK(forms == std::array<bool, 3>{true, true, true});
}

TEST_CASE("enumeration guard") {
    // Star K_{1,14}: 14 cliques exceeds the clique-count guard.
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 2; v <= 15; ++v) edges.emplace_back(1, v);
    Graph star = Graph::from_edges(edges);
    CHECK_THROWS_AS(enumerate_clique_trees(ChordalContext::build(star)), ResourceLimitError);
    // Counting still works exactly: 14^12.
    CHECK(count_clique_trees(star) == BigInt("56693912375296"));
}

TEST_CASE("structure theorem check reports pass on small fixtures") {
    for (const Graph* g : {&kStar, &kPath3, &kFive}) {
        ChordalContext ctx = ChordalContext::build(*g);
        CHECK(endpoint_boundary_check(ctx).pass);
        CHECK(final_clique_check(ctx).pass);
        CHECK(endpoint_component_check(ctx).pass);
    }
    Graph k3 = Graph::from_edges({{1, 2}, {2, 3}, {1, 3}});
    CHECK_THROWS_AS(endpoint_component_check(ChordalContext::build(k3)),
                    std::invalid_argument);
}
