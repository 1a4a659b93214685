#pragma once

#include <cstdint>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

enum class GenerateMethod {
    TreeOfCliques,  // random clique tree with running-intersection overlaps
    FillIn,         // random connected graph plus elimination fill-in
};

// Connected chordal graph on vertices 1..n, deterministic in (n, seed).
Graph random_chordal(int n, std::uint64_t seed, GenerateMethod method);

// All connected chordal graphs on vertices 1..n (labeled, no isomorphism
// reduction).
std::vector<Graph> exhaustive_connected_chordal(int n);

// The union over n' = 1..max_n.
std::vector<Graph> exhaustive_corpus(int max_n);

}  // namespace chordal
