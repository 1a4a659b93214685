#include "chordal/graph.hpp"

#include <stdexcept>

namespace chordal {

namespace {

void require_vertex(const Graph& g, Vertex v) {
    if (!g.has_vertex(v))
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

void require_subset(const Graph& g, const VertexSet& vs) {
    for (Vertex v : vs) require_vertex(g, v);
}

}  // namespace

Graph Graph::from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges,
                        const std::vector<Vertex>& extra_vertices) {
    Graph g;
    for (Vertex v : extra_vertices) {
        if (v < 0) throw std::invalid_argument("negative vertex id");
        g.vertices_.insert(v);
        g.adjacency_[v];
    }
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0) throw std::invalid_argument("negative vertex id");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.vertices_.insert(u);
        g.vertices_.insert(v);
        auto& nu = g.adjacency_[u];
        if (!nu.contains(v)) {
            nu.insert(v);
            g.adjacency_[v].insert(u);
            ++g.edge_count_;
        }
    }
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto it = adjacency_.find(u);
    return it != adjacency_.end() && it->second.contains(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end())
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (const auto& [u, nbrs] : adjacency_)
        for (Vertex v : nbrs)
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
    require_subset(g, vs);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : vs)
        for (Vertex v : g.neighbors(u))
            if (u < v && vs.contains(v)) edges.emplace_back(u, v);
    return Graph::from_edges(edges, vs.members());
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (Vertex start : g.vertices()) {
        if (seen.contains(start)) continue;
        VertexSet comp;
        std::vector<Vertex> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.insert(u);
            for (Vertex v : g.neighbors(u))
                if (!seen.contains(v)) {
                    seen.insert(v);
                    stack.push_back(v);
                }
        }
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

VertexSet open_neighborhood(const Graph& g, Vertex v) {
    require_vertex(g, v);
    return g.neighbors(v);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet n = open_neighborhood(g, v);
    n.insert(v);
    return n;
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& vs) {
    require_subset(g, vs);
    VertexSet out;
    for (Vertex v : vs) out = set_union(out, g.neighbors(v));
    return set_difference(out, vs);
}

bool is_clique(const Graph& g, const VertexSet& vs) {
    require_subset(g, vs);
    const auto& m = vs.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!g.has_edge(m[i], m[j])) return false;
    return true;
}

bool is_complete(const Graph& g) { return is_clique(g, g.vertices()); }

}  // namespace chordal
