#include "chordal/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "chordal/chordal.hpp"

namespace chordal {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

Graph tree_of_cliques(int n, std::mt19937_64& rng) {
    // Grow cliques one at a time; each new clique overlaps a random existing
    // clique in a random nonempty subset and adds at least one fresh vertex.
    std::vector<VertexSet> cliques;
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex next = 1;

    auto add_clique = [&](const VertexSet& c) {
        const auto& m = c.members();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) edges.emplace_back(m[i], m[j]);
        cliques.push_back(c);
    };

    int first = 1 + static_cast<int>(pick(rng, std::min(n, 4)));
    VertexSet root;
    for (int i = 0; i < first; ++i) root.insert(next++);
    add_clique(root);

    while (next <= n) {
        const VertexSet& base = cliques[pick(rng, cliques.size())];
        VertexSet overlap;
        for (Vertex v : base)
            if (pick(rng, 2) == 0) overlap.insert(v);
        if (overlap.empty()) overlap.insert(base.members()[pick(rng, base.size())]);
        int fresh = 1 + static_cast<int>(pick(rng, 3));
        fresh = std::min(fresh, n - next + 1);
        VertexSet c = overlap;
        for (int i = 0; i < fresh; ++i) c.insert(next++);
        add_clique(c);
    }
    return Graph::from_edges(edges);
}

Graph fill_in(int n, std::mt19937_64& rng) {
    // Random spanning tree plus sprinkled edges, then make the result chordal
    // by adding fill edges along a random elimination order.
    std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
    auto connect = [&](int u, int v) {
        adj[u][v] = adj[v][u] = true;
    };
    for (int v = 2; v <= n; ++v) connect(v, 1 + static_cast<int>(pick(rng, v - 1)));
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!adj[u][v] && pick(rng, 10) < 2) connect(u, v);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[pick(rng, i + 1)]);

    std::vector<bool> eliminated(n + 1, false);
    for (int v : order) {
        std::vector<int> later;
        for (int u = 1; u <= n; ++u)
            if (u != v && !eliminated[u] && adj[v][u]) later.push_back(u);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j) connect(later[i], later[j]);
        eliminated[v] = true;
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (adj[u][v]) edges.emplace_back(u, v);
    std::vector<Vertex> all;
    for (int v = 1; v <= n; ++v) all.push_back(v);
    return Graph::from_edges(edges, all);
}

}  // namespace

Graph random_chordal(int n, std::uint64_t seed, GenerateMethod method) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    std::mt19937_64 rng(seed);
    if (n == 1) return Graph::from_edges({}, {1});
    switch (method) {
        case GenerateMethod::TreeOfCliques: return tree_of_cliques(n, rng);
        case GenerateMethod::FillIn: return fill_in(n, rng);
    }
    throw std::invalid_argument("unknown generation method");
}

std::vector<Graph> exhaustive_connected_chordal(int n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    std::vector<Vertex> all;
    for (int v = 1; v <= n; ++v) all.push_back(v);

    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1ull << i)) edges.push_back(slots[i]);
        Graph g = Graph::from_edges(edges, all);
        if (is_connected(g) && is_chordal(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> exhaustive_corpus(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : exhaustive_connected_chordal(n)) out.push_back(std::move(g));
    return out;
}

}  // namespace chordal
