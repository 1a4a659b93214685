#include "chordal/boundary.hpp"

#include <algorithm>
#include <stdexcept>

#include "chordal/clique_tree.hpp"
#include "chordal/errors.hpp"

namespace chordal {

std::string to_string(CliqueClass c) {
    switch (c) {
        case CliqueClass::NotSimplicial: return "not-simplicial";
        case CliqueClass::SimplicialNotBoundary: return "simplicial-not-boundary";
        case CliqueClass::BoundaryNotStronglySimplicial: return "boundary-not-strongly-simplicial";
        case CliqueClass::StronglySimplicial: return "strongly-simplicial";
    }
    return "?";
}

namespace {

void require_clique_index(const ChordalContext& ctx, int clique) {
    if (clique < 0 || static_cast<std::size_t>(clique) >= ctx.clique_count())
        throw std::invalid_argument("clique index out of range");
}

void require_not_complete(const ChordalContext& ctx, const char* op) {
    if (is_complete(ctx.graph))
        throw std::invalid_argument(std::string(op) + " requires a non-complete graph");
}

int clique_index_for(const ChordalContext& ctx, const VertexSet& c) {
    int i = ctx.cliques.index_of(c);
    if (i < 0) throw std::invalid_argument(c.to_string() + " is not a maximal clique");
    return i;
}

}  // namespace

VertexSet simplicial_part(const ChordalContext& ctx, int clique) {
    require_clique_index(ctx, clique);
    // Simplicial vertices are exactly those in a single maximal clique.
    VertexSet simp;
    for (Vertex v : ctx.cliques[clique]) {
        int containing = 0;
        for (std::size_t i = 0; i < ctx.clique_count(); ++i)
            if (ctx.cliques[i].contains(v)) ++containing;
        if (containing == 1) simp.insert(v);
    }
    return simp;
}

std::pair<bool, std::optional<int>> is_boundary_clique(const ChordalContext& ctx, int clique) {
    require_clique_index(ctx, clique);
    VertexSet sep = set_difference(ctx.cliques[clique], simplicial_part(ctx, clique));
    for (std::size_t j = 0; j < ctx.clique_count(); ++j) {
        if (static_cast<int>(j) == clique) continue;
        if (set_intersection(ctx.cliques[clique], ctx.cliques[j]) == sep)
            return {true, static_cast<int>(j)};
    }
    return {false, std::nullopt};
}

std::pair<bool, std::optional<int>> is_boundary_clique(const Graph& g, const VertexSet& c) {
    ChordalContext ctx = ChordalContext::build(g);
    return is_boundary_clique(ctx, clique_index_for(ctx, c));
}

bool boundary_via_separator(const ChordalContext& ctx, int clique) {
    require_clique_index(ctx, clique);
    require_not_complete(ctx, "boundary_via_separator");
    VertexSet sep = set_difference(ctx.cliques[clique], simplicial_part(ctx, clique));
    return ctx.separators.contains(sep);
}

bool boundary_via_separator(const Graph& g, const VertexSet& c) {
    ChordalContext ctx = ChordalContext::build(g);
    return boundary_via_separator(ctx, clique_index_for(ctx, c));
}

bool boundary_via_removal(const ChordalContext& ctx, int clique) {
    require_clique_index(ctx, clique);
    require_not_complete(ctx, "boundary_via_removal");
    VertexSet rest_vertices;
    std::vector<VertexSet> rest_cliques;
    for (std::size_t i = 0; i < ctx.clique_count(); ++i) {
        if (static_cast<int>(i) == clique) continue;
        rest_vertices = set_union(rest_vertices, ctx.cliques[i]);
        rest_cliques.push_back(ctx.cliques[i]);
    }
    Graph rest = induced_subgraph(ctx.graph, rest_vertices);
    if (!is_chordal(rest)) return false;
    return maximal_cliques(rest).cliques == rest_cliques;
}

bool boundary_via_removal(const Graph& g, const VertexSet& c) {
    ChordalContext ctx = ChordalContext::build(g);
    return boundary_via_removal(ctx, clique_index_for(ctx, c));
}

bool is_strongly_simplicial(const ChordalContext& ctx, int clique) {
    require_clique_index(ctx, clique);
    VertexSet simp = simplicial_part(ctx, clique);
    if (simp.empty()) return false;
    VertexSet closed = simp;
    for (Vertex v : simp) closed = set_union(closed, ctx.graph.neighbors(v));
    std::vector<VertexSet> hoods;
    for (Vertex v : closed) hoods.push_back(closed_neighborhood(ctx.graph, v));
    std::sort(hoods.begin(), hoods.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    for (std::size_t i = 1; i < hoods.size(); ++i)
        if (!is_subset(hoods[i - 1], hoods[i])) return false;
    return true;
}

std::vector<int> strongly_simplicial_cliques(const ChordalContext& ctx) {
    std::vector<int> out;
    for (std::size_t i = 0; i < ctx.clique_count(); ++i)
        if (is_strongly_simplicial(ctx, static_cast<int>(i))) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> strongly_simplicial_cliques(const Graph& g) {
    return strongly_simplicial_cliques(ChordalContext::build(g));
}

std::vector<CliqueClassification> classify_cliques(const ChordalContext& ctx) {
    std::vector<CliqueClassification> out;
    for (std::size_t i = 0; i < ctx.clique_count(); ++i) {
        CliqueClassification cc;
        cc.clique = static_cast<int>(i);
        VertexSet simp = simplicial_part(ctx, static_cast<int>(i));
        auto [boundary, dominant] = is_boundary_clique(ctx, static_cast<int>(i));
        if (simp.empty()) {
            cc.klass = CliqueClass::NotSimplicial;
        } else if (is_strongly_simplicial(ctx, static_cast<int>(i))) {
            cc.klass = CliqueClass::StronglySimplicial;
        } else if (boundary) {
            cc.klass = CliqueClass::BoundaryNotStronglySimplicial;
        } else {
            cc.klass = CliqueClass::SimplicialNotBoundary;
        }
        if (boundary) {
            cc.dominant = dominant;
            cc.boundary_separator = set_difference(ctx.cliques[i], simp);
        }
        out.push_back(std::move(cc));
    }
    return out;
}

std::vector<VertexSet> inclusion_minimal_separators(const SeparatorCatalog& cat) {
    std::vector<VertexSet> out;
    for (const auto& [s, nu] : cat.entries) {
        bool minimal = true;
        for (const auto& [other, nu2] : cat.entries)
            if (is_proper_subset(other, s)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    return out;
}

CheckReport boundary_components_check(const ChordalContext& ctx) {
    CheckReport report;
    if (is_complete(ctx.graph)) return report;
    for (const auto& s : inclusion_minimal_separators(ctx.separators)) {
        Graph rest = induced_subgraph(ctx.graph, set_difference(ctx.graph.vertices(), s));
        for (const auto& gamma : connected_components(rest)) {
            bool witnessed = false;
            for (std::size_t i = 0; i < ctx.clique_count() && !witnessed; ++i) {
                if (!is_boundary_clique(ctx, static_cast<int>(i)).first) continue;
                VertexSet simp = simplicial_part(ctx, static_cast<int>(i));
                witnessed = !simp.empty() && is_subset(simp, gamma);
            }
            if (!witnessed)
                report.fail("component " + gamma.to_string() + " of S = " + s.to_string() +
                            " holds no simply separated component");
        }
    }
    return report;
}

}  // namespace chordal
