#include "chordal/chordal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "chordal/clique_tree.hpp"
#include "chordal/errors.hpp"

namespace chordal {

namespace {

bool is_index_permutation(const std::vector<int>& pi, std::size_t k) {
    if (pi.size() != k) return false;
    std::vector<bool> seen(k, false);
    for (int i : pi) {
        if (i < 0 || static_cast<std::size_t>(i) >= k || seen[i]) return false;
        seen[i] = true;
    }
    return true;
}

}  // namespace

int CliqueSet::index_of(const VertexSet& c) const {
    auto it = std::lower_bound(cliques.begin(), cliques.end(), c);
    if (it != cliques.end() && *it == c) return static_cast<int>(it - cliques.begin());
    return -1;
}

bool SeparatorCatalog::contains(const VertexSet& s) const { return multiplicity(s) > 0; }

int SeparatorCatalog::multiplicity(const VertexSet& s) const {
    for (const auto& [key, nu] : entries)
        if (key == s) return nu;
    return 0;
}

EliminationOrder maximum_cardinality_search(const Graph& g) {
    // Visit vertices in order of most already-visited neighbors, smallest id
    // on ties; the reversed visit order is the elimination order. Disconnected
    // inputs are handled implicitly: the search restarts at weight zero.
    std::map<Vertex, int> weight;
    for (Vertex v : g.vertices()) weight[v] = 0;

    std::vector<Vertex> visit;
    visit.reserve(g.vertex_count());
    while (!weight.empty()) {
        Vertex best = -1;
        int best_w = -1;
        for (const auto& [v, w] : weight)
            if (w > best_w) {
                best = v;
                best_w = w;
            }
        visit.push_back(best);
        weight.erase(best);
        for (Vertex u : g.neighbors(best)) {
            auto it = weight.find(u);
            if (it != weight.end()) ++it->second;
        }
    }
    std::reverse(visit.begin(), visit.end());
    return EliminationOrder{std::move(visit)};
}

bool is_perfect_elimination(const Graph& g, const EliminationOrder& sigma) {
    const auto& order = sigma.order;
    if (order.size() != g.vertex_count())
        throw std::invalid_argument("elimination order is not a permutation of the vertices");
    VertexSet remaining = g.vertices();
    for (Vertex v : order) {
        if (!remaining.contains(v))
            throw std::invalid_argument("elimination order is not a permutation of the vertices");
        remaining.erase(v);
        VertexSet later = set_intersection(g.neighbors(v), remaining);
        if (!is_clique(g, later)) return false;
    }
    return true;
}

bool is_chordal(const Graph& g) {
    return is_perfect_elimination(g, maximum_cardinality_search(g));
}

CliqueSet maximal_cliques(const Graph& g) {
    EliminationOrder sigma = maximum_cardinality_search(g);
    if (!is_perfect_elimination(g, sigma))
        throw NotChordalError("maximal_cliques requires a chordal graph");

    // Each vertex together with its later neighbors in a perfect elimination
    // scheme is a clique; every maximal clique shows up this way.
    std::vector<VertexSet> candidates;
    VertexSet remaining = g.vertices();
    for (Vertex v : sigma.order) {
        remaining.erase(v);
        VertexSet c = set_intersection(g.neighbors(v), remaining);
        c.insert(v);
        candidates.push_back(std::move(c));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<VertexSet> maximal;
    for (const auto& c : candidates) {
        bool dominated = false;
        for (const auto& d : candidates)
            if (is_proper_subset(c, d)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(c);
    }
    return CliqueSet{std::move(maximal)};
}

ChordalContext ChordalContext::build(const Graph& g) {
    if (g.vertex_count() > 0 && !is_connected(g))
        throw std::invalid_argument("structure operations require a connected graph");
    ChordalContext ctx;
    ctx.graph = g;
    ctx.cliques = maximal_cliques(g);

    SeparatorCatalog cat;
    if (ctx.cliques.size() >= 2) {
        // Canonical perfect sequence: walk the canonical clique tree from the
        // canonically-first clique.
        CliqueTree t = canonical_clique_tree(g, ctx.cliques);
        PerfectSequence pi = sequence_from_tree(ctx.cliques, t, 0);
        std::map<VertexSet, int> counts;
        for (const auto& s : pi.separators) ++counts[s];
        cat.entries.assign(counts.begin(), counts.end());
    }
    ctx.separators = std::move(cat);
    return ctx;
}

SeparatorCatalog minimal_separators(const Graph& g) {
    return ChordalContext::build(g).separators;
}

VertexSet simplicial_vertices(const Graph& g) {
    if (!is_chordal(g)) throw NotChordalError("simplicial_vertices requires a chordal graph");
    VertexSet out;
    for (Vertex v : g.vertices())
        if (is_clique(g, g.neighbors(v))) out.insert(v);
    return out;
}

std::pair<VertexSet, VertexSet> simp_sep_partition(const Graph& g, const VertexSet& c) {
    CliqueSet cs = maximal_cliques(g);
    if (cs.index_of(c) < 0)
        throw std::invalid_argument(c.to_string() + " is not a maximal clique");
    VertexSet simp = set_intersection(simplicial_vertices(g), c);
    return {simp, set_difference(c, simp)};
}

std::vector<VertexSet> sequence_separators(const CliqueSet& cs, const std::vector<int>& pi) {
    std::vector<VertexSet> seps;
    if (pi.empty()) return seps;
    VertexSet history = cs[pi[0]];
    for (std::size_t k = 1; k < pi.size(); ++k) {
        seps.push_back(set_intersection(history, cs[pi[k]]));
        history = set_union(history, cs[pi[k]]);
    }
    return seps;
}

bool is_perfect_sequence(const ChordalContext& ctx, const std::vector<int>& pi) {
    if (!is_index_permutation(pi, ctx.clique_count()))
        throw std::invalid_argument("not a permutation of the clique indices");
    // S_{pi(k)} is a subset of the clique C_{pi(k)}, hence itself a clique;
    // only the containment witness needs checking.
    auto seps = sequence_separators(ctx.cliques, pi);
    for (std::size_t k = 1; k < pi.size(); ++k) {
        bool witnessed = false;
        for (std::size_t j = 0; j < k && !witnessed; ++j)
            witnessed = is_subset(seps[k - 1], ctx.cliques[pi[j]]);
        if (!witnessed) return false;
    }
    return true;
}

bool is_perfect_sequence(const Graph& g, const std::vector<int>& pi) {
    return is_perfect_sequence(ChordalContext::build(g), pi);
}

PerfectSequence make_perfect_sequence(const ChordalContext& ctx, const std::vector<int>& pi) {
    if (!is_perfect_sequence(ctx, pi))
        throw std::invalid_argument("sequence violates the running intersection property");
    return PerfectSequence{pi, sequence_separators(ctx.cliques, pi)};
}

namespace {

void extend_sequences(const ChordalContext& ctx, std::vector<int>& prefix,
                      std::vector<bool>& used, const VertexSet& history,
                      std::vector<PerfectSequence>& out) {
    const std::size_t k_total = ctx.clique_count();
    if (prefix.size() == k_total) {
        out.push_back(make_perfect_sequence(ctx, prefix));
        return;
    }
    for (std::size_t c = 0; c < k_total; ++c) {
        if (used[c]) continue;
        if (!prefix.empty()) {
            VertexSet s = set_intersection(history, ctx.cliques[c]);
            bool witnessed = false;
            for (int j : prefix)
                if (is_subset(s, ctx.cliques[j])) {
                    witnessed = true;
                    break;
                }
            if (!witnessed) continue;
        }
        used[c] = true;
        prefix.push_back(static_cast<int>(c));
        extend_sequences(ctx, prefix, used, set_union(history, ctx.cliques[c]), out);
        prefix.pop_back();
        used[c] = false;
    }
}

}  // namespace

std::vector<PerfectSequence> all_perfect_sequences(const ChordalContext& ctx, int max_k) {
    const std::size_t k_total = ctx.clique_count();
    if (k_total > static_cast<std::size_t>(max_k))
        throw ResourceLimitError("perfect-sequence enumeration guard exceeded: K = " +
                                 std::to_string(k_total) + " > " + std::to_string(max_k));
    std::vector<PerfectSequence> out;
    if (k_total == 0) return out;
    std::vector<int> prefix;
    std::vector<bool> used(k_total, false);
    extend_sequences(ctx, prefix, used, VertexSet{}, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PerfectSequence> all_perfect_sequences(const Graph& g, int max_k) {
    return all_perfect_sequences(ChordalContext::build(g), max_k);
}

}  // namespace chordal
