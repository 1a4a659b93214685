#include "chordal/clique_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "chordal/boundary.hpp"
#include "chordal/errors.hpp"

namespace chordal {

void CliqueTree::canonicalize() {
    for (auto& [i, j] : edges)
        if (i > j) std::swap(i, j);
    std::sort(edges.begin(), edges.end());
}

bool CliqueTree::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<std::vector<int>> CliqueTree::adjacency() const {
    std::vector<std::vector<int>> adj(nodes);
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

namespace {

bool is_spanning_tree(const CliqueTree& t) {
    if (t.nodes == 0) return t.edges.empty();
    if (t.edges.size() != static_cast<std::size_t>(t.nodes) - 1) return false;
    for (auto [i, j] : t.edges)
        if (i < 0 || j < 0 || i >= t.nodes || j >= t.nodes || i == j) return false;
    auto adj = t.adjacency();
    std::vector<bool> seen(t.nodes, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++visited;
                stack.push_back(v);
            }
    }
    return visited == t.nodes;
}

// Do the given nodes induce a connected subtree of t?
bool induces_connected(const CliqueTree& t, const std::vector<int>& nodes) {
    if (nodes.size() <= 1) return true;
    std::vector<bool> in(t.nodes, false);
    for (int n : nodes) in[n] = true;
    auto adj = t.adjacency();
    std::vector<bool> seen(t.nodes, false);
    std::vector<int> stack{nodes[0]};
    seen[nodes[0]] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (in[v] && !seen[v]) {
                seen[v] = true;
                ++visited;
                stack.push_back(v);
            }
    }
    return visited == nodes.size();
}

struct SeparatorSplit {
    VertexSet separator;
    std::vector<VertexSet> components;        // of G(V \ S)
    std::vector<int> full_components;         // M_S: indices m with N(Gamma_m) = S
    std::vector<std::vector<int>> cliques_in; // C_{|S}(Gamma_m u S) per component
};

SeparatorSplit split_by_separator(const ChordalContext& ctx, const VertexSet& s) {
    SeparatorSplit out;
    out.separator = s;
    Graph rest = induced_subgraph(ctx.graph, set_difference(ctx.graph.vertices(), s));
    out.components = connected_components(rest);
    out.cliques_in.resize(out.components.size());
    for (std::size_t m = 0; m < out.components.size(); ++m) {
        if (set_neighborhood(ctx.graph, out.components[m]) == s)
            out.full_components.push_back(static_cast<int>(m));
        VertexSet closure = set_union(out.components[m], s);
        for (std::size_t i = 0; i < ctx.clique_count(); ++i) {
            const VertexSet& c = ctx.cliques[i];
            if (is_subset(c, closure) && is_proper_subset(s, c))
                out.cliques_in[m].push_back(static_cast<int>(i));
        }
    }
    return out;
}

}  // namespace

bool junction_violation(const ChordalContext& ctx, const CliqueTree& t, VertexSet* violated) {
    for (const auto& [s, nu] : ctx.separators.entries) {
        if (!induces_connected(t, cliques_containing(ctx.cliques, s))) {
            if (violated) *violated = s;
            return true;
        }
    }
    return false;
}

bool is_clique_tree(const ChordalContext& ctx, const CliqueTree& t) {
    if (t.nodes != static_cast<int>(ctx.clique_count()))
        throw std::invalid_argument("tree node count does not match the clique count");
    if (!is_spanning_tree(t)) return false;
    return !junction_violation(ctx, t, nullptr);
}

bool is_clique_tree(const Graph& g, const CliqueTree& t) {
    return is_clique_tree(ChordalContext::build(g), t);
}

std::vector<int> cliques_containing(const CliqueSet& cs, const VertexSet& d) {
    std::vector<int> out;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (is_subset(d, cs[i])) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> cliques_containing(const Graph& g, const VertexSet& d) {
    return cliques_containing(maximal_cliques(g), d);
}

CliqueTree canonical_clique_tree(const Graph& g, const CliqueSet& cs) {
    // Prim over intersection weights |C_i n C_j|, largest weight first,
    // smallest index pair on ties. The maximum-weight spanning tree of the
    // clique intersection graph is always a clique tree.
    const int k = static_cast<int>(cs.size());
    CliqueTree t;
    t.nodes = k;
    if (k <= 1) return t;
    std::vector<bool> in_tree(k, false);
    in_tree[0] = true;
    for (int added = 1; added < k; ++added) {
        int best_w = -1, best_i = -1, best_j = -1;
        for (int i = 0; i < k; ++i) {
            if (!in_tree[i]) continue;
            for (int j = 0; j < k; ++j) {
                if (in_tree[j]) continue;
                int w = static_cast<int>(set_intersection(cs[i], cs[j]).size());
                if (w > best_w) {
                    best_w = w;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        in_tree[best_j] = true;
        t.edges.emplace_back(best_i, best_j);
    }
    t.canonicalize();
    return t;
}

namespace {

std::vector<int> valid_parents(const CliqueSet& cs, const PerfectSequence& pi, int k) {
    std::vector<int> out;
    const VertexSet& s = pi.separators[k - 1];
    for (int j = 0; j < k; ++j)
        if (set_intersection(cs[pi.order[j]], cs[pi.order[k]]) == s) out.push_back(j);
    return out;
}

}  // namespace

CliqueTree tree_from_sequence(const CliqueSet& cs, const PerfectSequence& pi,
                              const std::function<int(int)>& choice) {
    const int k_total = static_cast<int>(pi.order.size());
    CliqueTree t;
    t.nodes = static_cast<int>(cs.size());
    if (t.nodes != k_total)
        throw std::invalid_argument("sequence does not cover the clique set");
    for (int k = 1; k < k_total; ++k) {
        auto parents = valid_parents(cs, pi, k);
        int parent;
        if (choice) {
            parent = choice(k);
            if (std::find(parents.begin(), parents.end(), parent) == parents.end())
                throw std::invalid_argument("invalid parent choice at position " +
                                            std::to_string(k));
        } else {
            parent = parents.front();
        }
        t.edges.emplace_back(pi.order[parent], pi.order[k]);
    }
    t.canonicalize();
    return t;
}

std::vector<CliqueTree> all_trees_from_sequence(const CliqueSet& cs, const PerfectSequence& pi) {
    const int k_total = static_cast<int>(pi.order.size());
    std::vector<std::vector<int>> options;
    for (int k = 1; k < k_total; ++k) options.push_back(valid_parents(cs, pi, k));

    std::vector<CliqueTree> out;
    std::vector<int> pick(options.size(), 0);
    while (true) {
        CliqueTree t;
        t.nodes = static_cast<int>(cs.size());
        for (int k = 1; k < k_total; ++k)
            t.edges.emplace_back(pi.order[options[k - 1][pick[k - 1]]], pi.order[k]);
        t.canonicalize();
        out.push_back(std::move(t));

        int pos = static_cast<int>(options.size()) - 1;
        while (pos >= 0 && pick[pos] + 1 == static_cast<int>(options[pos].size())) {
            pick[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++pick[pos];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PerfectSequence sequence_from_tree(const CliqueSet& cs, const CliqueTree& t, int root) {
    if (root < 0 || root >= t.nodes) throw std::invalid_argument("unknown root node");
    auto adj = t.adjacency();
    std::vector<bool> placed(t.nodes, false);
    std::vector<bool> available(t.nodes, false);
    std::vector<int> order;
    available[root] = true;
    for (int step = 0; step < t.nodes; ++step) {
        int next = -1;
        for (int i = 0; i < t.nodes; ++i)
            if (available[i]) {
                next = i;
                break;
            }
        placed[next] = true;
        available[next] = false;
        order.push_back(next);
        for (int v : adj[next])
            if (!placed[v]) available[v] = true;
    }
    return PerfectSequence{order, sequence_separators(cs, order)};
}

namespace {

void extend_tree_sequences(const ChordalContext& ctx, const std::vector<std::vector<int>>& adj,
                           std::vector<int>& order, std::vector<bool>& placed,
                           std::vector<PerfectSequence>& out) {
    const int k_total = static_cast<int>(ctx.clique_count());
    if (static_cast<int>(order.size()) == k_total) {
        out.push_back(PerfectSequence{order, sequence_separators(ctx.cliques, order)});
        return;
    }
    for (int c = 0; c < k_total; ++c) {
        if (placed[c]) continue;
        bool adjacent_to_prefix = false;
        for (int v : adj[c])
            if (placed[v]) {
                adjacent_to_prefix = true;
                break;
            }
        if (!adjacent_to_prefix) continue;
        placed[c] = true;
        order.push_back(c);
        extend_tree_sequences(ctx, adj, order, placed, out);
        order.pop_back();
        placed[c] = false;
    }
}

}  // namespace

std::vector<PerfectSequence> all_sequences_from_tree(const ChordalContext& ctx,
                                                     const CliqueTree& t, int max_k) {
    const int k_total = static_cast<int>(ctx.clique_count());
    if (k_total > max_k)
        throw ResourceLimitError("sequence enumeration guard exceeded: K = " +
                                 std::to_string(k_total));
    std::vector<PerfectSequence> out;
    if (k_total == 0) return out;
    auto adj = t.adjacency();
    std::vector<bool> placed(k_total, false);
    std::vector<int> order;
    for (int root = 0; root < k_total; ++root) {
        placed[root] = true;
        order.push_back(root);
        extend_tree_sequences(ctx, adj, order, placed, out);
        order.pop_back();
        placed[root] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> endpoints(const CliqueTree& t) {
    if (t.nodes == 1) return {0};
    std::vector<int> degree(t.nodes, 0);
    for (auto [i, j] : t.edges) {
        ++degree[i];
        ++degree[j];
    }
    std::vector<int> out;
    for (int i = 0; i < t.nodes; ++i)
        if (degree[i] == 1) out.push_back(i);
    return out;
}

BigInt count_clique_trees(const ChordalContext& ctx) {
    BigInt total = 1;
    for (const auto& [s, nu] : ctx.separators.entries) {
        SeparatorSplit split = split_by_separator(ctx, s);
        BigInt sum = 0;
        BigInt prod = 1;
        for (int m : split.full_components) {
            BigInt sz = static_cast<int>(split.cliques_in[m].size());
            sum += sz;
            prod *= sz;
        }
        // |M_S| >= 2 for any minimal vertex separator, so the exponent is
        // never negative.
        unsigned exponent = static_cast<unsigned>(split.full_components.size() - 2);
        total *= boost::multiprecision::pow(sum, exponent) * prod;
    }
    return total;
}

BigInt count_clique_trees(const Graph& g) {
    return count_clique_trees(ChordalContext::build(g));
}

namespace {

CliqueTree tree_from_pruefer(int k, const std::vector<int>& code) {
    std::vector<int> degree(k, 1);
    for (int a : code) ++degree[a];
    CliqueTree t;
    t.nodes = k;
    std::vector<bool> used(k, false);
    for (int a : code) {
        int leaf = -1;
        for (int i = 0; i < k; ++i)
            if (degree[i] == 1 && !used[i]) {
                leaf = i;
                break;
            }
        used[leaf] = true;
        t.edges.emplace_back(leaf, a);
        --degree[a];
    }
    std::vector<int> last;
    for (int i = 0; i < k; ++i)
        if (!used[i] && degree[i] == 1) last.push_back(i);
    t.edges.emplace_back(last[0], last[1]);
    t.canonicalize();
    return t;
}

// All spanning trees of the graph given by `edges` over k nodes, by
// include/exclude branching with a connectivity feasibility cut.
void spanning_trees_rec(int k, const std::vector<std::pair<int, int>>& edges, std::size_t idx,
                        std::vector<std::pair<int, int>>& chosen, std::vector<int>& comp,
                        std::vector<CliqueTree>& out) {
    if (chosen.size() == static_cast<std::size_t>(k) - 1) {
        CliqueTree t;
        t.nodes = k;
        t.edges = chosen;
        t.canonicalize();
        out.push_back(std::move(t));
        return;
    }
    if (idx == edges.size()) return;
    auto [u, v] = edges[idx];
    if (comp[u] == comp[v]) {
        spanning_trees_rec(k, edges, idx + 1, chosen, comp, out);
        return;
    }
    // Exclude edges[idx], if the remaining edges can still connect everything.
    {
        std::vector<int> probe = comp;
        auto root = [&probe](int x) {
            while (probe[x] != x) x = probe[x] = probe[probe[x]];
            return x;
        };
        for (std::size_t i = idx + 1; i < edges.size(); ++i)
            probe[root(edges[i].first)] = root(edges[i].second);
        bool connectable = true;
        for (int i = 1; i < k && connectable; ++i) connectable = root(i) == root(0);
        if (connectable) spanning_trees_rec(k, edges, idx + 1, chosen, comp, out);
    }
    // Include edges[idx]: contract.
    std::vector<int> merged = comp;
    int from = comp[v], to = comp[u];
    for (int i = 0; i < k; ++i)
        if (merged[i] == from) merged[i] = to;
    chosen.push_back(edges[idx]);
    spanning_trees_rec(k, edges, idx + 1, chosen, merged, out);
    chosen.pop_back();
}

}  // namespace

std::vector<CliqueTree> enumerate_clique_trees(const ChordalContext& ctx) {
    const int k = static_cast<int>(ctx.clique_count());
    if (k > kEnumerationCliqueGuard)
        throw ResourceLimitError("clique-tree enumeration guard exceeded: K = " +
                                 std::to_string(k));
    BigInt predicted = count_clique_trees(ctx);
    if (predicted > kEnumerationCountGuard)
        throw ResourceLimitError("clique-tree enumeration guard exceeded: predicted count " +
                                 predicted.str());

    std::vector<CliqueTree> out;
    if (k <= 1) {
        CliqueTree t;
        t.nodes = k;
        out.push_back(t);
        return out;
    }
    if (k == 2) {
        CliqueTree t;
        t.nodes = 2;
        t.edges = {{0, 1}};
        out.push_back(t);
        return out;
    }
    if (k <= 7) {
        // All labeled trees via Pruefer codes, filtered by the junction check.
        std::vector<int> code(k - 2, 0);
        while (true) {
            CliqueTree t = tree_from_pruefer(k, code);
            if (!junction_violation(ctx, t, nullptr)) out.push_back(std::move(t));
            int pos = k - 3;
            while (pos >= 0 && code[pos] + 1 == k) code[pos--] = 0;
            if (pos < 0) break;
            ++code[pos];
        }
    } else {
        // Spanning trees of the clique intersection graph, filtered.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (!set_intersection(ctx.cliques[i], ctx.cliques[j]).empty())
                    edges.emplace_back(i, j);
        std::vector<std::pair<int, int>> chosen;
        std::vector<int> comp(k);
        std::iota(comp.begin(), comp.end(), 0);
        std::vector<CliqueTree> spanning;
        spanning_trees_rec(k, edges, 0, chosen, comp, spanning);
        for (auto& t : spanning)
            if (!junction_violation(ctx, t, nullptr)) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CliqueTree> enumerate_clique_trees(const Graph& g) {
    return enumerate_clique_trees(ChordalContext::build(g));
}

bool is_arbitrary_tree(const ChordalContext& ctx) {
    if (ctx.clique_count() < 2)
        throw std::invalid_argument("arbitrariness requires at least two maximal cliques");
    return ctx.separators.size() == 1;
}

bool is_arbitrary_tree(const Graph& g) { return is_arbitrary_tree(ChordalContext::build(g)); }

std::array<bool, 3> unique_tree_formulations(const ChordalContext& ctx) {
    const auto& entries = ctx.separators.entries;

    bool via_catalog = true;
    for (const auto& [s, nu] : entries)
        if (nu != 1) via_catalog = false;
    for (std::size_t a = 0; a < entries.size() && via_catalog; ++a)
        for (std::size_t b = a + 1; b < entries.size() && via_catalog; ++b)
            if (is_subset(entries[a].first, entries[b].first) ||
                is_subset(entries[b].first, entries[a].first))
                via_catalog = false;

    bool via_ks = true;
    for (const auto& [s, nu] : entries)
        if (cliques_containing(ctx.cliques, s).size() != 2) via_ks = false;

    bool via_components = true;
    for (const auto& [s, nu] : entries) {
        SeparatorSplit split = split_by_separator(ctx, s);
        if (split.full_components.size() != 2) via_components = false;
        for (int m : split.full_components)
            if (split.cliques_in[m].size() != 1) via_components = false;
    }

    return {via_catalog, via_ks, via_components};
}

bool is_unique_tree(const ChordalContext& ctx) {
    auto forms = unique_tree_formulations(ctx);
    if (forms[0] != forms[1] || forms[1] != forms[2])
        throw std::logic_error("uniqueness formulations disagree");
    return forms[0];
}

bool is_unique_tree(const Graph& g) { return is_unique_tree(ChordalContext::build(g)); }

CheckReport endpoint_boundary_check(const ChordalContext& ctx) {
    CheckReport report;
    const int k = static_cast<int>(ctx.clique_count());
    if (k <= 1) return report;

    std::vector<bool> boundary(k, false);
    for (int c = 0; c < k; ++c) boundary[c] = is_boundary_clique(ctx, c).first;

    auto trees = enumerate_clique_trees(ctx);
    std::vector<bool> some_endpoint(k, false);
    for (const auto& t : trees)
        for (int e : endpoints(t)) some_endpoint[e] = true;
    for (int c = 0; c < k; ++c)
        if (some_endpoint[c] != boundary[c])
            report.fail("endpoint/boundary mismatch at clique " + ctx.cliques[c].to_string());

    if (k <= kDefaultSequenceGuard - 1) {
        std::vector<bool> some_last(k, false);
        for (const auto& pi : all_perfect_sequences(ctx))
            some_last[pi.order.back()] = true;
        for (int c = 0; c < k; ++c)
            if (some_last[c] != boundary[c])
                report.fail("final-clique/boundary mismatch at clique " +
                            ctx.cliques[c].to_string());
    }

    // Two-endpoint strengthening over inclusion-minimal separators.
    if (!is_complete(ctx.graph)) {
        for (const auto& s : inclusion_minimal_separators(ctx.separators)) {
            SeparatorSplit split = split_by_separator(ctx, s);
            auto component_of = [&](int c) {
                for (std::size_t m = 0; m < split.components.size(); ++m)
                    if (is_subset(set_difference(ctx.cliques[c], s), split.components[m]))
                        return static_cast<int>(m);
                return -1;
            };
            for (int c = 0; c < k; ++c) {
                if (!boundary[c]) continue;
                for (int d = c + 1; d < k; ++d) {
                    if (!boundary[d] || component_of(c) == component_of(d)) continue;
                    bool found = false;
                    for (const auto& t : trees) {
                        auto eps = endpoints(t);
                        if (std::find(eps.begin(), eps.end(), c) != eps.end() &&
                            std::find(eps.begin(), eps.end(), d) != eps.end()) {
                            found = true;
                            break;
                        }
                    }
                    if (!found)
                        report.fail("no tree with endpoints " + ctx.cliques[c].to_string() +
                                    " and " + ctx.cliques[d].to_string() + " across S = " +
                                    s.to_string());
                }
            }
        }
    }

    if (is_unique_tree(ctx)) {
        auto eps = endpoints(trees.front());
        for (int c = 0; c < k; ++c)
            if (boundary[c] &&
                std::find(eps.begin(), eps.end(), c) == eps.end())
                report.fail("boundary clique " + ctx.cliques[c].to_string() +
                            " is not an endpoint of the unique tree");
    }
    return report;
}

CheckReport final_clique_check(const ChordalContext& ctx) {
    CheckReport report;
    const int k = static_cast<int>(ctx.clique_count());
    if (k <= 1) return report;
    std::vector<bool> some_last(k, false);
    for (const auto& pi : all_perfect_sequences(ctx)) some_last[pi.order.back()] = true;
    for (int c = 0; c < k; ++c)
        if (some_last[c] != is_boundary_clique(ctx, c).first)
            report.fail("final-clique/boundary mismatch at clique " + ctx.cliques[c].to_string());
    return report;
}

CheckReport endpoint_component_check(const ChordalContext& ctx) {
    if (is_complete(ctx.graph))
        throw std::invalid_argument("endpoint_component_check requires a non-complete graph");
    CheckReport report;
    auto trees = enumerate_clique_trees(ctx);
    for (const auto& s : inclusion_minimal_separators(ctx.separators)) {
        SeparatorSplit split = split_by_separator(ctx, s);
        for (const auto& t : trees) {
            std::vector<bool> hit(split.components.size(), false);
            for (int e : endpoints(t)) {
                VertexSet off = set_difference(ctx.cliques[e], s);
                for (std::size_t m = 0; m < split.components.size(); ++m)
                    if (is_subset(off, split.components[m])) hit[m] = true;
            }
            if (std::count(hit.begin(), hit.end(), true) < 2)
                report.fail("tree endpoints meet fewer than two components of S = " +
                            s.to_string());
        }
    }
    return report;
}

}  // namespace chordal
