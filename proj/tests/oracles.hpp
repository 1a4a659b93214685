// Brute-force reference implementations used only by tests. Deliberately
// definition-level and exponential; keep inputs tiny (n <= 8).
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "chordal/chordal.hpp"
#include "chordal/graph.hpp"

namespace oracle {

using chordal::Graph;
using chordal::Vertex;
using chordal::VertexSet;

inline std::vector<VertexSet> all_subsets(const VertexSet& vs) {
    const auto& m = vs.members();
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (1ull << m.size()); ++mask) {
        std::vector<Vertex> pick;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (mask & (1ull << i)) pick.push_back(m[i]);
        out.emplace_back(pick);
    }
    return out;
}

// Chordal iff no induced subgraph is a chordless cycle of length >= 4: every
// vertex of the induced subgraph has degree exactly 2 and it is connected.
inline bool brute_is_chordal(const Graph& g) {
    for (const auto& sub : all_subsets(g.vertices())) {
        if (sub.size() < 4) continue;
        Graph h = chordal::induced_subgraph(g, sub);
        bool cycle = chordal::is_connected(h);
        for (Vertex v : sub)
            if (h.neighbors(v).size() != 2) cycle = false;
        if (cycle) return false;
    }
    return true;
}

inline std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
    std::vector<VertexSet> cliques;
    for (const auto& sub : all_subsets(g.vertices()))
        if (!sub.empty() && chordal::is_clique(g, sub)) cliques.push_back(sub);
    std::vector<VertexSet> maximal;
    for (const auto& c : cliques) {
        bool top = true;
        for (const auto& d : cliques)
            if (c != d && chordal::is_proper_subset(c, d)) top = false;
        if (top) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

inline bool separates(const Graph& g, const VertexSet& s, Vertex u, Vertex v) {
    Graph rest = chordal::induced_subgraph(g, chordal::set_difference(g.vertices(), s));
    for (const auto& comp : chordal::connected_components(rest))
        if (comp.contains(u) && comp.contains(v)) return false;
    return true;
}

// Minimal (u, v)-separators for all non-adjacent pairs, deduplicated.
inline std::vector<VertexSet> brute_minimal_separators(const Graph& g) {
    std::vector<VertexSet> out;
    auto subsets = all_subsets(g.vertices());
    for (Vertex u : g.vertices())
        for (Vertex v : g.vertices()) {
            if (u >= v || g.has_edge(u, v)) continue;
            for (const auto& s : subsets) {
                if (s.contains(u) || s.contains(v)) continue;
                if (!separates(g, s, u, v)) continue;
                bool minimal = true;
                for (const auto& t : all_subsets(s))
                    if (t != s && separates(g, t, u, v)) minimal = false;
                if (minimal && std::find(out.begin(), out.end(), s) == out.end())
                    out.push_back(s);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Definition-level running-intersection check over a clique ordering.
inline bool brute_is_perfect_sequence(const Graph& g,
                                      const std::vector<VertexSet>& cliques,
                                      const std::vector<int>& pi) {
    if (pi.size() != cliques.size()) return false;
    std::vector<bool> used(cliques.size(), false);
    for (int c : pi) {
        if (c < 0 || c >= static_cast<int>(cliques.size()) || used[c]) return false;
        used[c] = true;
    }
    VertexSet history = cliques[pi[0]];
    for (std::size_t k = 1; k < pi.size(); ++k) {
        VertexSet s = chordal::set_intersection(history, cliques[pi[k]]);
        if (!chordal::is_clique(g, s)) return false;
        bool witnessed = false;
        for (std::size_t j = 0; j < k; ++j)
            if (chordal::is_subset(s, cliques[pi[j]])) witnessed = true;
        if (!witnessed) return false;
        history = chordal::set_union(history, cliques[pi[k]]);
    }
    return true;
}

inline std::vector<std::vector<int>> brute_perfect_sequences(
    const Graph& g, const std::vector<VertexSet>& cliques) {
    std::vector<int> pi(cliques.size());
    for (std::size_t i = 0; i < pi.size(); ++i) pi[i] = static_cast<int>(i);
    std::vector<std::vector<int>> out;
    std::sort(pi.begin(), pi.end());
    do {
        if (brute_is_perfect_sequence(g, cliques, pi)) out.push_back(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

}  // namespace oracle
