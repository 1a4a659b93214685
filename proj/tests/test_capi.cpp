#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "chordalkit.h"

namespace {

struct Graph {
    ck_graph* g = nullptr;
    explicit Graph(const char* text) { REQUIRE(ck_graph_parse(text, &g) == CK_OK); }
    ~Graph() { ck_graph_free(g); }
};

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    ck_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and null argument handling") {
    CHECK(std::strlen(ck_version()) > 0);
    CHECK(ck_graph_parse(nullptr, nullptr) == CK_INVALID_ARGUMENT);
    CHECK(std::strlen(ck_last_error()) > 0);
    char* out = nullptr;
    CHECK(ck_analyze(nullptr, 0, &out) == CK_INVALID_ARGUMENT);
    CHECK(out == nullptr);
}

TEST_CASE("parse errors carry a message") {
    ck_graph* g = nullptr;
    CHECK(ck_graph_parse("1 2\nnonsense\n", &g) == CK_PARSE_ERROR);
    CHECK(std::string(ck_last_error()).find("line 2") != std::string::npos);
}

TEST_CASE("analyze distinguishes chordal and non-chordal inputs") {
    Graph star("1 2\n1 3\n1 4\n");
    char* out = nullptr;
    CHECK(ck_analyze(star.g, 0, &out) == CK_OK);
    std::string text = take(out);
    CHECK(text.find("chordal=yes") != std::string::npos);
    CHECK(text.find("count=3") != std::string::npos);

    Graph c4("1 2\n2 3\n3 4\n4 1\n");
    out = nullptr;
    CHECK(ck_analyze(c4.g, 0, &out) == CK_NOT_CHORDAL);
    CHECK(take(out).find("chordal=no") != std::string::npos);

    out = nullptr;
    CHECK(ck_analyze(star.g, 1, &out) == CK_OK);
    std::string json = take(out);
    CHECK(json.find("\"tree_count\": \"3\"") != std::string::npos);
}

TEST_CASE("tree count, enumeration and checking") {
    Graph path3("1 2\n2 3\n3 4\n");
    char* out = nullptr;
    CHECK(ck_trees_count(path3.g, &out) == CK_OK);
    CHECK(take(out) == "1\n");

    out = nullptr;
    CHECK(ck_trees_enumerate(path3.g, &out) == CK_OK);
    std::string trees = take(out);
    CHECK(trees.find("1 2 |") != std::string::npos);

    out = nullptr;
    CHECK(ck_tree_check(path3.g, trees.c_str(), &out) == CK_OK);
    CHECK(take(out) == "valid clique tree\n");

    // Star tree centered on an end clique violates the junction property.
    out = nullptr;
    CHECK(ck_tree_check(path3.g, "1 2\n1 3\n", &out) == CK_VERIFY_FAIL);
    CHECK(take(out).find("junction property violated") != std::string::npos);
}

TEST_CASE("sequence enumeration and checking") {
    Graph path3("1 2\n2 3\n3 4\n");
    char* out = nullptr;
    CHECK(ck_sequences_enumerate(path3.g, &out) == CK_OK);
    std::string seqs = take(out);
    CHECK(seqs == "1 2 3\n2 1 3\n2 3 1\n3 2 1\n");

    out = nullptr;
    CHECK(ck_sequence_check(path3.g, "2 1 3", &out) == CK_OK);
    take(out);
    out = nullptr;
    CHECK(ck_sequence_check(path3.g, "1 3 2", &out) == CK_VERIFY_FAIL);
    take(out);
}

TEST_CASE("boundary, relation and walk") {
    Graph star("1 2\n1 3\n1 4\n");
    char* out = nullptr;
    CHECK(ck_boundary(star.g, 0, &out) == CK_OK);
    CHECK(take(out).find("strongly-simplicial") != std::string::npos);

    out = nullptr;
    CHECK(ck_relation(star.g, 0, &out) == CK_OK);
    std::string rel = take(out);
    CHECK(rel.find("trees 3") != std::string::npos);
    CHECK(rel.find("sequences 6") != std::string::npos);
    CHECK(rel.find("edges 12") != std::string::npos);
    CHECK(rel.find("connected yes") != std::string::npos);

    out = nullptr;
    CHECK(ck_walk(star.g, 1, 100, 7, &out) == CK_OK);
    std::string log1 = take(out);
    out = nullptr;
    CHECK(ck_walk(star.g, 1, 100, 7, &out) == CK_OK);
    CHECK(log1 == take(out));
}

TEST_CASE("generate and verify") {
    char* out = nullptr;
    CHECK(ck_generate(6, 11, "tree-of-cliques", &out) == CK_OK);
    std::string edges = take(out);
    ck_graph* g = nullptr;
    REQUIRE(ck_graph_parse(edges.c_str(), &g) == CK_OK);
    char* report = nullptr;
    CHECK(ck_analyze(g, 0, &report) == CK_OK);
    CHECK(take(report).find("chordal=yes") != std::string::npos);
    ck_graph_free(g);

    CHECK(ck_generate(3, 0, "bogus", &out) == CK_INVALID_ARGUMENT);
    CHECK(ck_generate(0, 0, "fill-in", &out) == CK_INVALID_ARGUMENT);

    out = nullptr;
    CHECK(ck_verify(3, 5, 1, &out) == CK_OK);
    CHECK(take(out).find("verification passed") != std::string::npos);
    CHECK(ck_verify(99, 0, 0, &out) == CK_INVALID_ARGUMENT);
}
