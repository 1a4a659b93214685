#include "chordal/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "chordal/boundary.hpp"
#include "chordal/chordal.hpp"
#include "chordal/clique_tree.hpp"

namespace chordal {

using nlohmann::json;

namespace {

json vertex_set_json(const VertexSet& vs) {
    json arr = json::array();
    for (Vertex v : vs) arr.push_back(v);
    return arr;
}

std::string set_text(const json& arr) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) os << ',';
        os << arr[i].get<long long>();
    }
    os << '}';
    return os.str();
}

}  // namespace

json analyze_graph(const Graph& g) {
    json report;
    report["n"] = g.vertex_count();
    report["edges"] = g.edge_count();
    report["connected"] = is_connected(g);
    report["chordal"] = is_chordal(g);
    if (!report["chordal"].get<bool>()) return report;
    if (!report["connected"].get<bool>()) {
        report["components"] = connected_components(g).size();
        return report;
    }

    ChordalContext ctx = ChordalContext::build(g);
    const int k = static_cast<int>(ctx.clique_count());
    report["clique_count"] = k;

    json cliques = json::array();
    auto classes = classify_cliques(ctx);
    for (int i = 0; i < k; ++i) {
        json c;
        c["index"] = i + 1;
        c["vertices"] = vertex_set_json(ctx.cliques[i]);
        VertexSet simp = simplicial_part(ctx, i);
        c["simp"] = vertex_set_json(simp);
        c["sep"] = vertex_set_json(set_difference(ctx.cliques[i], simp));
        c["class"] = to_string(classes[i].klass);
        if (classes[i].dominant)
            c["dominant"] = *classes[i].dominant + 1;
        if (classes[i].boundary_separator)
            c["boundary_separator"] = vertex_set_json(*classes[i].boundary_separator);
        cliques.push_back(std::move(c));
    }
    report["cliques"] = std::move(cliques);

    json seps = json::array();
    for (const auto& [s, nu] : ctx.separators.entries) {
        json e;
        e["vertices"] = vertex_set_json(s);
        e["multiplicity"] = nu;
        seps.push_back(std::move(e));
    }
    report["separators"] = std::move(seps);

    report["tree_count"] = count_clique_trees(ctx).str();
    report["unique"] = is_unique_tree(ctx);
    if (k >= 2) report["arbitrary"] = is_arbitrary_tree(ctx);
    return report;
}

std::string render_analysis_text(const json& report) {
    std::ostringstream os;
    os << "graph: n=" << report["n"].get<long long>()
       << " edges=" << report["edges"].get<long long>()
       << " connected=" << (report["connected"].get<bool>() ? "yes" : "no")
       << " chordal=" << (report["chordal"].get<bool>() ? "yes" : "no") << '\n';
    if (!report["chordal"].get<bool>()) {
        os << "not chordal: structure analysis skipped\n";
        return os.str();
    }
    if (!report["connected"].get<bool>()) {
        os << "components: " << report["components"].get<long long>()
           << " (structure analysis requires a connected graph)\n";
        return os.str();
    }
    os << "maximal cliques (K=" << report["clique_count"].get<int>() << "):\n";
    for (const auto& c : report["cliques"]) {
        os << "  " << c["index"].get<int>() << ": " << set_text(c["vertices"])
           << "  simp=" << set_text(c["simp"]) << " sep=" << set_text(c["sep"])
           << "  class=" << c["class"].get<std::string>();
        if (c.contains("dominant")) os << " dominant=" << c["dominant"].get<int>();
        if (c.contains("boundary_separator"))
            os << " boundary-sep=" << set_text(c["boundary_separator"]);
        os << '\n';
    }
    os << "minimal vertex separators:\n";
    for (const auto& e : report["separators"])
        os << "  " << set_text(e["vertices"]) << "  nu=" << e["multiplicity"].get<int>() << '\n';
    if (report["separators"].empty()) os << "  (none)\n";
    os << "clique trees: count=" << report["tree_count"].get<std::string>()
       << " unique=" << (report["unique"].get<bool>() ? "yes" : "no");
    if (report.contains("arbitrary"))
        os << " arbitrary=" << (report["arbitrary"].get<bool>() ? "yes" : "no");
    os << '\n';
    return os.str();
}

bool analysis_is_chordal(const json& report) { return report["chordal"].get<bool>(); }

}  // namespace chordal
