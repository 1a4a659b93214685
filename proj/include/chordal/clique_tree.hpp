#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "chordal/chordal.hpp"

namespace chordal {

using BigInt = boost::multiprecision::cpp_int;

// Tree over clique indices 0..K-1. Edges are canonical (i < j, sorted);
// the separator label of edge (i, j) is C_i n C_j.
struct CliqueTree {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;

    void canonicalize();
    bool has_edge(int i, int j) const;
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const CliqueTree& o) const { return nodes == o.nodes && edges == o.edges; }
    auto operator<=>(const CliqueTree& o) const {
        if (auto c = nodes <=> o.nodes; c != 0) return c;
        return edges <=> o.edges;
    }
};

// Pass/fail verdict of a theorem check, with one finding per violation.
struct CheckReport {
    bool pass = true;
    std::vector<std::string> findings;

    void fail(std::string finding) {
        pass = false;
        findings.push_back(std::move(finding));
    }
};

inline constexpr long long kEnumerationCountGuard = 1'000'000;
inline constexpr int kEnumerationCliqueGuard = 12;

bool is_clique_tree(const ChordalContext& ctx, const CliqueTree& t);
bool is_clique_tree(const Graph& g, const CliqueTree& t);

// Separator S in S with no connected C_{|S} node set in t, when invalid.
bool junction_violation(const ChordalContext& ctx, const CliqueTree& t, VertexSet* violated);

std::vector<int> cliques_containing(const CliqueSet& cs, const VertexSet& d);
std::vector<int> cliques_containing(const Graph& g, const VertexSet& d);

// Maximum-weight spanning tree of the clique intersection graph with
// deterministic tie-breaks; the reference tree behind canonical sequences.
CliqueTree canonical_clique_tree(const Graph& g, const CliqueSet& cs);

// choice maps position k (1-based, k >= 1) to a valid earlier position k';
// empty choice means canonical (smallest valid k').
CliqueTree tree_from_sequence(const CliqueSet& cs, const PerfectSequence& pi,
                              const std::function<int(int)>& choice = {});
std::vector<CliqueTree> all_trees_from_sequence(const CliqueSet& cs, const PerfectSequence& pi);

PerfectSequence sequence_from_tree(const CliqueSet& cs, const CliqueTree& t, int root);
std::vector<PerfectSequence> all_sequences_from_tree(const ChordalContext& ctx,
                                                     const CliqueTree& t,
                                                     int max_k = kDefaultSequenceGuard);

std::vector<int> endpoints(const CliqueTree& t);

BigInt count_clique_trees(const ChordalContext& ctx);
BigInt count_clique_trees(const Graph& g);

std::vector<CliqueTree> enumerate_clique_trees(const ChordalContext& ctx);
std::vector<CliqueTree> enumerate_clique_trees(const Graph& g);

bool is_arbitrary_tree(const ChordalContext& ctx);
bool is_arbitrary_tree(const Graph& g);

// The three equivalent uniqueness formulations, in order: nu(S) = 1 for all S
// and no inclusion-comparable separator pair; K_S = 2 for all S; |M_S| = 2
// with singleton C_{|S}(Gamma_m u S) for all S.
std::array<bool, 3> unique_tree_formulations(const ChordalContext& ctx);
bool is_unique_tree(const ChordalContext& ctx);
bool is_unique_tree(const Graph& g);

CheckReport endpoint_boundary_check(const ChordalContext& ctx);
CheckReport final_clique_check(const ChordalContext& ctx);
CheckReport endpoint_component_check(const ChordalContext& ctx);

}  // namespace chordal
