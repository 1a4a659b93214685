#include "chordal/io.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "chordal/errors.hpp"

namespace chordal {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> isolated;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(body);
        long long u, v;
        if (!(ls >> u)) throw ParseError(lineno, "malformed vertex id");
        if (u < 0) throw ParseError(lineno, "negative vertex id");
        if (ls >> v) {
            if (v < 0) throw ParseError(lineno, "negative vertex id");
            if (u == v) throw ParseError(lineno, "self-loop");
            long long extra;
            if (ls >> extra) throw ParseError(lineno, "expected at most two vertex ids");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else if (!ls.eof() && ls.fail()) {
            std::string tail;
            ls.clear();
            ls >> tail;
            if (!tail.empty()) throw ParseError(lineno, "malformed vertex id");
            isolated.push_back(static_cast<Vertex>(u));
        } else {
            isolated.push_back(static_cast<Vertex>(u));
        }
    }
    return Graph::from_edges(edges, isolated);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    VertexSet covered;
    for (auto [u, v] : g.edges()) {
        os << u << ' ' << v << '\n';
        covered.insert(u);
        covered.insert(v);
    }
    for (Vertex v : set_difference(g.vertices(), covered)) os << v << '\n';
    return os.str();
}

std::string format_clique_tree(const CliqueSet& cs, const CliqueTree& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        os << i + 1 << " :";
        for (Vertex v : cs[i]) os << ' ' << v;
        os << '\n';
    }
    for (auto [i, j] : t.edges) {
        os << i + 1 << ' ' << j + 1 << " |";
        for (Vertex v : set_intersection(cs[i], cs[j])) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

CliqueTree parse_clique_tree(const CliqueSet& cs, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    CliqueTree t;
    t.nodes = static_cast<int>(cs.size());
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = body.find(':');
        if (colon != std::string::npos) {
            // Clique table line: validate against the canonical clique set.
            std::istringstream hs(body.substr(0, colon));
            int idx;
            if (!(hs >> idx) || idx < 1 || idx > t.nodes)
                throw ParseError(lineno, "bad clique index in table");
            std::istringstream vs(body.substr(colon + 1));
            std::vector<Vertex> members;
            Vertex v;
            while (vs >> v) members.push_back(v);
            if (VertexSet(members) != cs[idx - 1])
                throw ParseError(lineno, "clique table does not match the graph's cliques");
            continue;
        }
        auto bar = body.find('|');
        std::istringstream es(bar == std::string::npos ? body : body.substr(0, bar));
        int i, j;
        if (!(es >> i >> j) || i < 1 || j < 1 || i > t.nodes || j > t.nodes || i == j)
            throw ParseError(lineno, "bad tree edge");
        t.edges.emplace_back(i - 1, j - 1);
    }
    t.canonicalize();
    return t;
}

std::string format_sequence(const PerfectSequence& pi) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pi.order.size(); ++i) {
        if (i) os << ' ';
        os << pi.order[i] + 1;
    }
    return os.str();
}

std::vector<int> parse_sequence_line(const std::string& text, std::size_t clique_count) {
    std::istringstream in(strip_comment(text));
    std::vector<int> out;
    int idx;
    while (in >> idx) {
        if (idx < 1 || static_cast<std::size_t>(idx) > clique_count)
            throw ParseError(1, "clique index out of range");
        out.push_back(idx - 1);
    }
    return out;
}

std::string graph_hash(const Graph& g) {
    std::string data = format_edge_list(g);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string format_walk_log(const WalkLog& log, const std::string& hash) {
    std::ostringstream os;
    os << "# walk seed=" << log.seed << " graph=" << hash
       << " start=" << (log.start_on_tree ? "tree" : "sequence") << " steps=" << log.steps
       << '\n';
    for (const auto& e : log.entries)
        os << e.step << ' ' << (e.on_tree ? "tree" : "sequence") << ' ' << e.index << '\n';
    os << "# coverage trees=" << log.trees_seen << " sequences=" << log.sequences_seen << '\n';
    return os.str();
}

}  // namespace chordal
