#pragma once

#include <string>
#include <vector>

#include "chordal/bipartite.hpp"
#include "chordal/clique_tree.hpp"

namespace chordal {

// Edge-list text: one edge "u v" per line, whitespace-separated nonnegative
// integers; '#' starts a comment line; a single "v" declares an isolated
// vertex. Throws ParseError with the offending line number.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// Tree serialization: clique index table first ("i : v1 v2 ..."), then one
// line per edge "i j | s1 s2 ..." with 1-based clique indices.
std::string format_clique_tree(const CliqueSet& cs, const CliqueTree& t);
CliqueTree parse_clique_tree(const CliqueSet& cs, const std::string& text);

std::string format_sequence(const PerfectSequence& pi);

// One line of 1-based clique indices.
std::vector<int> parse_sequence_line(const std::string& text, std::size_t clique_count);

std::string graph_hash(const Graph& g);  // FNV-1a over the canonical edge list

// One "step side index" line per visited state, with a seed/hash header and a
// coverage footer.
std::string format_walk_log(const WalkLog& log, const std::string& hash);

}  // namespace chordal
