#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chordal/vertex_set.hpp"

namespace chordal {

// Immutable undirected simple graph over integer-labeled vertices. Vertex ids
// are arbitrary nonnegative integers preserved from input.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(const std::vector<std::pair<Vertex, Vertex>>& edges,
                            const std::vector<Vertex>& extra_vertices = {});

    const VertexSet& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_vertex(Vertex v) const { return vertices_.contains(v); }
    bool has_edge(Vertex u, Vertex v) const;

    // Open neighborhood N_G(v); throws std::invalid_argument on unknown v.
    const VertexSet& neighbors(Vertex v) const;

    // Canonical edge list, u < v.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    VertexSet vertices_;
    std::map<Vertex, VertexSet> adjacency_;
    std::size_t edge_count_ = 0;
};

Graph induced_subgraph(const Graph& g, const VertexSet& vs);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
VertexSet set_neighborhood(const Graph& g, const VertexSet& vs);
bool is_clique(const Graph& g, const VertexSet& vs);
bool is_complete(const Graph& g);

}  // namespace chordal
