#pragma once

#include <utility>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

// Elimination order sigma: position i (0-based) holds the vertex eliminated
// i-th. A permutation of the graph's vertices.
struct EliminationOrder {
    std::vector<Vertex> order;
};

// Canonically ordered list of the maximal cliques; clique indices are
// positions into `cliques`.
struct CliqueSet {
    std::vector<VertexSet> cliques;

    std::size_t size() const { return cliques.size(); }
    const VertexSet& operator[](std::size_t i) const { return cliques[i]; }
    int index_of(const VertexSet& c) const;  // -1 when absent
};

// Minimal vertex separators with multiplicities nu(S), keyed in canonical
// order. Sum of multiplicities is K - 1.
struct SeparatorCatalog {
    std::vector<std::pair<VertexSet, int>> entries;

    std::size_t size() const { return entries.size(); }
    bool contains(const VertexSet& s) const;
    int multiplicity(const VertexSet& s) const;  // 0 when absent
};

// An ordering pi of all maximal cliques satisfying the running intersection
// property. order[k] is the clique index at position k (0-based);
// separators[k-1] = (C_{pi(0)} u ... u C_{pi(k-1)}) n C_{pi(k)} for k >= 1.
struct PerfectSequence {
    std::vector<int> order;
    std::vector<VertexSet> separators;

    bool operator==(const PerfectSequence& o) const { return order == o.order; }
    auto operator<=>(const PerfectSequence& o) const { return order <=> o.order; }
};

EliminationOrder maximum_cardinality_search(const Graph& g);
bool is_perfect_elimination(const Graph& g, const EliminationOrder& sigma);
bool is_chordal(const Graph& g);
CliqueSet maximal_cliques(const Graph& g);
SeparatorCatalog minimal_separators(const Graph& g);
VertexSet simplicial_vertices(const Graph& g);
std::pair<VertexSet, VertexSet> simp_sep_partition(const Graph& g, const VertexSet& c);

// Precomputed structure shared by the clique-tree, boundary and relation
// operations. Construction fails fast on non-chordal input.
struct ChordalContext {
    Graph graph;
    CliqueSet cliques;
    SeparatorCatalog separators;

    static ChordalContext build(const Graph& g);
    std::size_t clique_count() const { return cliques.size(); }
};

// Separator sequence of pi, or empty on a non-permutation.
std::vector<VertexSet> sequence_separators(const CliqueSet& cs, const std::vector<int>& pi);

bool is_perfect_sequence(const Graph& g, const std::vector<int>& pi);
bool is_perfect_sequence(const ChordalContext& ctx, const std::vector<int>& pi);

// pi must already satisfy the running intersection property.
PerfectSequence make_perfect_sequence(const ChordalContext& ctx, const std::vector<int>& pi);

inline constexpr int kDefaultSequenceGuard = 9;

std::vector<PerfectSequence> all_perfect_sequences(const Graph& g,
                                                   int max_k = kDefaultSequenceGuard);
std::vector<PerfectSequence> all_perfect_sequences(const ChordalContext& ctx,
                                                   int max_k = kDefaultSequenceGuard);

}  // namespace chordal
