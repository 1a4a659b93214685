#include "chordal/bipartite.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chordal/errors.hpp"

namespace chordal {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

std::vector<int> valid_parents(const CliqueSet& cs, const PerfectSequence& pi, int k) {
    std::vector<int> out;
    const VertexSet& s = pi.separators[k - 1];
    for (int j = 0; j < k; ++j)
        if (set_intersection(cs[pi.order[j]], cs[pi.order[k]]) == s) out.push_back(j);
    return out;
}

}  // namespace

bool in_relation(const ChordalContext& ctx, const CliqueTree& t, const PerfectSequence& pi) {
    const int k_total = static_cast<int>(ctx.clique_count());
    if (t.nodes != k_total || static_cast<int>(pi.order.size()) != k_total)
        throw std::invalid_argument("tree and sequence cover different clique sets");
    // Each clique after the first must attach to the already-placed prefix;
    // for a tree this is exactly prefix connectivity.
    auto adj = t.adjacency();
    std::vector<bool> placed(k_total, false);
    for (int k = 0; k < k_total; ++k) {
        int c = pi.order[k];
        if (k > 0) {
            bool attached = false;
            for (int v : adj[c])
                if (placed[v]) {
                    attached = true;
                    break;
                }
            if (!attached) return false;
        }
        placed[c] = true;
    }
    return true;
}

BipartiteGraph build_bipartite(const ChordalContext& ctx) {
    BipartiteGraph b;
    b.trees = enumerate_clique_trees(ctx);
    b.sequences = all_perfect_sequences(ctx);
    long long pairs = static_cast<long long>(b.trees.size()) *
                      static_cast<long long>(b.sequences.size());
    if (pairs > kBipartitePairGuard)
        throw ResourceLimitError("bipartite materialization guard exceeded: " +
                                 std::to_string(pairs) + " pairs");
    for (std::size_t ti = 0; ti < b.trees.size(); ++ti)
        for (std::size_t si = 0; si < b.sequences.size(); ++si)
            if (in_relation(ctx, b.trees[ti], b.sequences[si]))
                b.edges.emplace_back(static_cast<int>(ti), static_cast<int>(si));
    return b;
}

BipartiteGraph build_bipartite(const Graph& g) {
    return build_bipartite(ChordalContext::build(g));
}

bool is_connected(const BipartiteGraph& b) {
    std::size_t total = b.trees.size() + b.sequences.size();
    if (total <= 1) return true;
    // Node ids: trees first, then sequences.
    std::vector<std::vector<int>> adj(total);
    for (auto [t, s] : b.edges) {
        adj[t].push_back(static_cast<int>(b.trees.size()) + s);
        adj[b.trees.size() + s].push_back(t);
    }
    std::vector<bool> seen(total, false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++visited;
                stack.push_back(v);
            }
    }
    return visited == total;
}

std::string tree_key(const CliqueTree& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        if (i) os << ' ';
        os << t.edges[i].first + 1 << '-' << t.edges[i].second + 1;
    }
    if (t.edges.empty()) os << '-';
    return os.str();
}

std::string sequence_key(const PerfectSequence& pi) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pi.order.size(); ++i) {
        if (i) os << ' ';
        os << pi.order[i] + 1;
    }
    return os.str();
}

namespace {

PerfectSequence sample_sequence(const ChordalContext& ctx, const CliqueTree& t,
                                std::mt19937_64& rng) {
    const int k_total = t.nodes;
    auto adj = t.adjacency();
    std::vector<bool> placed(k_total, false);
    std::vector<int> order;
    int root = static_cast<int>(pick(rng, k_total));
    order.push_back(root);
    placed[root] = true;
    while (static_cast<int>(order.size()) < k_total) {
        std::vector<int> available;
        for (int c = 0; c < k_total; ++c) {
            if (placed[c]) continue;
            for (int v : adj[c])
                if (placed[v]) {
                    available.push_back(c);
                    break;
                }
        }
        int next = available[pick(rng, available.size())];
        placed[next] = true;
        order.push_back(next);
    }
    return PerfectSequence{order, sequence_separators(ctx.cliques, order)};
}

CliqueTree sample_tree(const ChordalContext& ctx, const PerfectSequence& pi,
                       std::mt19937_64& rng) {
    const int k_total = static_cast<int>(pi.order.size());
    CliqueTree t;
    t.nodes = k_total;
    for (int k = 1; k < k_total; ++k) {
        auto parents = valid_parents(ctx.cliques, pi, k);
        int parent = parents[pick(rng, parents.size())];
        t.edges.emplace_back(pi.order[parent], pi.order[k]);
    }
    t.canonicalize();
    return t;
}

}  // namespace

WalkLog random_walk(const ChordalContext& ctx, bool start_on_tree, long steps,
                    std::uint64_t seed, bool validate) {
    if (ctx.clique_count() == 0)
        throw std::invalid_argument("random walk requires at least one maximal clique");
    std::mt19937_64 rng(seed);
    WalkLog log;
    log.seed = seed;
    log.steps = steps;
    log.start_on_tree = start_on_tree;

    std::map<std::string, int> tree_index, seq_index;
    auto visit_tree = [&](const CliqueTree& t) {
        auto [it, fresh] = tree_index.emplace(tree_key(t), static_cast<int>(tree_index.size()) + 1);
        (void)fresh;
        return it->second;
    };
    auto visit_seq = [&](const PerfectSequence& pi) {
        auto [it, fresh] = seq_index.emplace(sequence_key(pi),
                                             static_cast<int>(seq_index.size()) + 1);
        (void)fresh;
        return it->second;
    };

    CliqueTree tree = canonical_clique_tree(ctx.graph, ctx.cliques);
    PerfectSequence seq = sequence_from_tree(ctx.cliques, tree, 0);
    bool on_tree = start_on_tree;
    if (on_tree) {
        visit_tree(tree);
        log.start_key = tree_key(tree);
    } else {
        visit_seq(seq);
        log.start_key = sequence_key(seq);
    }

    for (long step = 1; step <= steps; ++step) {
        WalkEntry entry;
        entry.step = step;
        if (on_tree) {
            seq = sample_sequence(ctx, tree, rng);
            if (validate && !is_perfect_sequence(ctx, seq.order))
                throw std::logic_error("walk produced an imperfect sequence");
            entry.on_tree = false;
            entry.index = visit_seq(seq);
            entry.key = sequence_key(seq);
        } else {
            tree = sample_tree(ctx, seq, rng);
            if (validate && !is_clique_tree(ctx, tree))
                throw std::logic_error("walk produced an invalid clique tree");
            entry.on_tree = true;
            entry.index = visit_tree(tree);
            entry.key = tree_key(tree);
        }
        on_tree = !on_tree;
        log.entries.push_back(std::move(entry));
    }
    log.trees_seen = static_cast<int>(tree_index.size());
    log.sequences_seen = static_cast<int>(seq_index.size());
    return log;
}

std::vector<CliqueTree> induced_subtree_restriction(const ChordalContext& ctx,
                                                    const std::vector<int>& clique_subset,
                                                    bool* restrictable) {
    std::vector<int> local(ctx.clique_count(), -1);
    for (std::size_t i = 0; i < clique_subset.size(); ++i) {
        int c = clique_subset[i];
        if (c < 0 || static_cast<std::size_t>(c) >= ctx.clique_count() || local[c] != -1)
            throw std::invalid_argument("invalid clique subset");
        local[c] = static_cast<int>(i);
    }
    std::vector<CliqueTree> out;
    for (const auto& t : enumerate_clique_trees(ctx)) {
        CliqueTree restricted;
        restricted.nodes = static_cast<int>(clique_subset.size());
        for (auto [i, j] : t.edges)
            if (local[i] >= 0 && local[j] >= 0)
                restricted.edges.emplace_back(local[i], local[j]);
        // A forest (subgraph of a tree) with |C'| - 1 edges is a tree.
        if (restricted.edges.size() + 1 != clique_subset.size()) continue;
        restricted.canonicalize();
        out.push_back(std::move(restricted));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (restrictable) *restrictable = !out.empty();
    return out;
}

}  // namespace chordal
