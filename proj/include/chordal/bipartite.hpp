#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chordal/clique_tree.hpp"

namespace chordal {

// The relation between clique trees and perfect sequences, materialized at
// desk scale: (T, pi) adjacent when the sequence-to-tree algorithm can
// produce T from pi.
struct BipartiteGraph {
    std::vector<CliqueTree> trees;
    std::vector<PerfectSequence> sequences;
    std::vector<std::pair<int, int>> edges;  // (tree index, sequence index)
};

inline constexpr long long kBipartitePairGuard = 10'000'000;

// Prefix-connectivity membership test: every prefix of pi induces a connected
// subtree of t. O(K^2) instead of enumerating choice functions.
bool in_relation(const ChordalContext& ctx, const CliqueTree& t, const PerfectSequence& pi);

BipartiteGraph build_bipartite(const ChordalContext& ctx);
BipartiteGraph build_bipartite(const Graph& g);

bool is_connected(const BipartiteGraph& b);

struct WalkEntry {
    long step = 0;
    bool on_tree = false;
    int index = 0;        // first-visit ordinal on its side, 1-based
    std::string key;      // canonical serialization of the state
};

struct WalkLog {
    std::uint64_t seed = 0;
    long steps = 0;
    bool start_on_tree = true;
    std::string start_key;
    std::vector<WalkEntry> entries;
    int trees_seen = 0;
    int sequences_seen = 0;
};

// Alternating seeded walk tree -> sequence -> tree with uniform local
// choices. Never materializes the bipartite graph. With validate set, every
// visited state is checked against the junction / running-intersection
// predicates.
WalkLog random_walk(const ChordalContext& ctx, bool start_on_tree, long steps,
                    std::uint64_t seed, bool validate = false);

std::string tree_key(const CliqueTree& t);
std::string sequence_key(const PerfectSequence& pi);

// {T(C') : T clique tree, T(C') connected}, re-indexed over the subset in
// its given order. restrictable reports whether any tree qualified.
std::vector<CliqueTree> induced_subtree_restriction(const ChordalContext& ctx,
                                                    const std::vector<int>& clique_subset,
                                                    bool* restrictable = nullptr);

}  // namespace chordal
