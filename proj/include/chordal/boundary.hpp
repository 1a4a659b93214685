#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordal/chordal.hpp"

namespace chordal {

struct CheckReport;

enum class CliqueClass {
    NotSimplicial,
    SimplicialNotBoundary,
    BoundaryNotStronglySimplicial,
    StronglySimplicial,
};

std::string to_string(CliqueClass c);

struct CliqueClassification {
    int clique = -1;
    CliqueClass klass = CliqueClass::NotSimplicial;
    std::optional<int> dominant;                  // canonically-first witness
    std::optional<VertexSet> boundary_separator;  // Sep(C) when boundary
};

// Definition route: some C' != C with C n C' = Sep(C); witness is the
// canonically-first such clique.
std::pair<bool, std::optional<int>> is_boundary_clique(const ChordalContext& ctx, int clique);
std::pair<bool, std::optional<int>> is_boundary_clique(const Graph& g, const VertexSet& c);

// Separator route: Sep(C) is itself a minimal vertex separator. Rejects
// complete graphs.
bool boundary_via_separator(const ChordalContext& ctx, int clique);
bool boundary_via_separator(const Graph& g, const VertexSet& c);

// Removal route: dropping C leaves a chordal graph whose maximal cliques are
// exactly the remaining ones. Rejects complete graphs.
bool boundary_via_removal(const ChordalContext& ctx, int clique);
bool boundary_via_removal(const Graph& g, const VertexSet& c);

bool is_strongly_simplicial(const ChordalContext& ctx, int clique);
std::vector<int> strongly_simplicial_cliques(const ChordalContext& ctx);
std::vector<int> strongly_simplicial_cliques(const Graph& g);

std::vector<CliqueClassification> classify_cliques(const ChordalContext& ctx);

std::vector<VertexSet> inclusion_minimal_separators(const SeparatorCatalog& cat);

// Every component of G(V \ S), S inclusion-minimal, holds the simplicial part
// of some boundary clique.
CheckReport boundary_components_check(const ChordalContext& ctx);

// Simp(C) for clique index i, via the precomputed structure.
VertexSet simplicial_part(const ChordalContext& ctx, int clique);

}  // namespace chordal
