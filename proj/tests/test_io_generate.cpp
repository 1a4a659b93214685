#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chordal/errors.hpp"
#include "chordal/generate.hpp"
#include "chordal/io.hpp"
#include "chordal/verify.hpp"

using namespace chordal;

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("# comment\n1 2\n\n2 3   # trailing\n7\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 3));
    CHECK(g.has_vertex(7));

    CHECK(parse_edge_list("").vertex_count() == 0);

    CHECK_THROWS_AS(parse_edge_list("1 2\n3 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
    try {
        parse_edge_list("1 2\nbogus\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("edge list round trip") {
    Graph g = Graph::from_edges({{2, 1}, {2, 3}}, {9});
    Graph back = parse_edge_list(format_edge_list(g));
    CHECK(back == g);
}

TEST_CASE("clique tree serialization round trip") {
    Graph g = Graph::from_edges({{1, 2}, {2, 3}, {3, 4}});
    ChordalContext ctx = ChordalContext::build(g);
    for (const auto& t : enumerate_clique_trees(ctx)) {
        CliqueTree back = parse_clique_tree(ctx.cliques, format_clique_tree(ctx.cliques, t));
        CHECK(back == t);
    }
    CHECK_THROWS_AS(parse_clique_tree(ctx.cliques, "1 : 9 9\n"), ParseError);
    CHECK_THROWS_AS(parse_clique_tree(ctx.cliques, "1 5 | 2\n"), ParseError);
}

TEST_CASE("sequence formatting uses 1-based indices") {
    PerfectSequence pi;
    pi.order = {2, 0, 1};
    CHECK(format_sequence(pi) == "3 1 2");
    CHECK(parse_sequence_line("3 1 2", 3) == std::vector<int>{2, 0, 1});
    CHECK_THROWS_AS(parse_sequence_line("0 1", 3), ParseError);
    CHECK_THROWS_AS(parse_sequence_line("4", 3), ParseError);
}

TEST_CASE("graph hash is stable under input ordering") {
    Graph a = Graph::from_edges({{1, 2}, {2, 3}});
    Graph b = Graph::from_edges({{3, 2}, {2, 1}});
    CHECK(graph_hash(a) == graph_hash(b));
    CHECK(graph_hash(a) != graph_hash(Graph::from_edges({{1, 2}})));
}

TEST_CASE("random generators produce connected chordal graphs deterministically") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        for (auto method : {GenerateMethod::TreeOfCliques, GenerateMethod::FillIn}) {
            int n = 1 + static_cast<int>(seed % 12);
            Graph g = random_chordal(n, seed, method);
            CHECK(g.vertex_count() == static_cast<std::size_t>(n));
            CHECK(is_connected(g));
            CHECK(is_chordal(g));
            CHECK(g == random_chordal(n, seed, method));
        }
    }
    CHECK(random_chordal(1, 0, GenerateMethod::TreeOfCliques).vertex_count() == 1);
    CHECK_THROWS_AS(random_chordal(0, 0, GenerateMethod::FillIn), std::invalid_argument);
}

TEST_CASE("exhaustive corpus counts") {
    // Connected chordal graphs on labeled vertices: 1, 1, 4, 35 for n = 1..4.
    CHECK(exhaustive_connected_chordal(1).size() == 1);
    CHECK(exhaustive_connected_chordal(2).size() == 1);
    CHECK(exhaustive_connected_chordal(3).size() == 4);
    CHECK(exhaustive_connected_chordal(4).size() == 35);
    CHECK(exhaustive_corpus(3).size() == 6);
}

TEST_CASE("verification suite passes on a small tier") {
    VerifyOptions opt;
    opt.max_n = 4;
    opt.random_count = 10;
    opt.seed = 3;
    VerifyResult res = run_verification(opt);
    CHECK(res.pass());
    CHECK(res.graphs == 41 + 10);  // 1 + 1 + 4 + 35 exhaustive plus the random tier
    CHECK(res.find("count-equals-enumeration") != nullptr);
    CHECK(res.find("no-such-check") == nullptr);
    CHECK(res.to_text().find("verification passed") != std::string::npos);
}
