#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include <ucycle/ucycle.h>

namespace {

struct Class {
    ucy_class* handle = nullptr;
    ~Class() { ucy_class_destroy(handle); }
};

struct Graph {
    ucy_digraph* handle = nullptr;
    ~Graph() { ucy_digraph_destroy(handle); }
};

ucy_class_params basic_params(int n, int k) {
    ucy_class_params params{};
    params.word_length = n;
    params.alphabet_size = k;
    return params;
}

} // namespace

TEST_CASE("create, query and destroy a class") {
    Class cls;
    ucy_class_params params = basic_params(3, 3);
    REQUIRE(ucy_class_create("noninjective", &params, &cls.handle) == UCY_OK);

    ucy_class_info info{};
    REQUIRE(ucy_class_get_info(cls.handle, &info) == UCY_OK);
    CHECK(info.word_length == 3);
    CHECK(info.alphabet_size == 3);
    CHECK(info.has_word_space == 1);
    CHECK(info.word_space == 27);
    CHECK(info.has_closed_count == 1);
    CHECK(info.closed_count == 21);
    CHECK(info.enumeration_cap == 10000000);

    char symbols[8];
    REQUIRE(ucy_class_get_symbols(cls.handle, symbols, sizeof symbols) == UCY_OK);
    CHECK(std::string(symbols) == "ABC");

    std::uint64_t count = 0;
    REQUIRE(ucy_class_count(cls.handle, &count) == UCY_OK);
    CHECK(count == 21);

    std::int32_t is_member = -1;
    REQUIRE(ucy_class_contains(cls.handle, "AAB", &is_member) == UCY_OK);
    CHECK(is_member == 1);
    REQUIRE(ucy_class_contains(cls.handle, "ABC", &is_member) == UCY_OK);
    CHECK(is_member == 0);
}

TEST_CASE("failures set codes and a readable message") {
    Class cls;
    ucy_class_params params = basic_params(3, 3);
    CHECK(ucy_class_create("no_such_class", &params, &cls.handle) == UCY_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(ucy_last_error()).find("no_such_class") != std::string::npos);
    CHECK(cls.handle == nullptr);

    CHECK(ucy_class_create(nullptr, &params, &cls.handle) == UCY_ERROR_INVALID_ARGUMENT);

    REQUIRE(ucy_class_create("noninjective", &params, &cls.handle) == UCY_OK);
    CHECK(std::string(ucy_last_error()).empty()); // success clears the slate

    std::int32_t is_member = -1;
    CHECK(ucy_class_contains(cls.handle, "AAXB", &is_member) == UCY_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(ucy_last_error()).find("X") != std::string::npos);
    CHECK(ucy_class_contains(cls.handle, "AABA", &is_member) == UCY_ERROR_INVALID_ARGUMENT);

    char tiny[2];
    CHECK(ucy_class_get_symbols(cls.handle, tiny, sizeof tiny) == UCY_ERROR_BUFFER_TOO_SMALL);

    ucy_class_params capped = basic_params(12, 3);
    capped.enumeration_cap = 50;
    Class small;
    REQUIRE(ucy_class_create("all_words", &capped, &small.handle) == UCY_OK);
    std::uint64_t count = 0;
    CHECK(ucy_class_count(small.handle, &count) == UCY_OK); // closed form still works
    CHECK(count == 531441);
    Graph no_graph;
    CHECK(ucy_digraph_build(small.handle, &no_graph.handle) == UCY_ERROR_CAP_EXCEEDED);

    ucy_class_params one = basic_params(1, 3);
    Class single;
    REQUIRE(ucy_class_create("all_words", &one, &single.handle) == UCY_OK);
    CHECK(ucy_digraph_build(single.handle, &no_graph.handle) == UCY_ERROR_UNSUPPORTED);
}

TEST_CASE("status names cover the enum") {
    CHECK(std::string(ucy_status_name(UCY_OK)) == "ok");
    CHECK(std::string(ucy_status_name(UCY_ERROR_CAP_EXCEEDED)) == "cap_exceeded");
    CHECK(std::string(ucy_status_name(UCY_ERROR_NOT_EULERIAN)) == "not_eulerian");
    CHECK(std::string(ucy_version()).find('.') != std::string::npos);
}

TEST_CASE("theorem verdicts cross the interface") {
    Class noninj;
    ucy_class_params params = basic_params(4, 5);
    REQUIRE(ucy_class_create("noninjective", &params, &noninj.handle) == UCY_OK);
    ucy_existence verdict = UCY_UNSETTLED;
    char citation[256];
    REQUIRE(ucy_class_theorem(noninj.handle, &verdict, citation, sizeof citation) == UCY_OK);
    CHECK(verdict == UCY_EXISTS);
    CHECK(std::strlen(citation) > 0);

    Class unsettled;
    params = basic_params(3, 3);
    REQUIRE(ucy_class_create("noninjective", &params, &unsettled.handle) == UCY_OK);
    REQUIRE(ucy_class_theorem(unsettled.handle, &verdict, nullptr, 0) == UCY_OK);
    CHECK(verdict == UCY_UNSETTLED);

    Class illegal;
    ucy_class_params ranking{};
    ranking.word_length = 3;
    REQUIRE(ucy_class_create("illegal_ranking", &ranking, &illegal.handle) == UCY_OK);
    REQUIRE(ucy_class_theorem(illegal.handle, &verdict, citation, sizeof citation) == UCY_OK);
    CHECK(verdict == UCY_NOT_EXISTS);
}

TEST_CASE("predicted degrees cross the interface") {
    Class illegal;
    ucy_class_params params{};
    params.word_length = 5;
    REQUIRE(ucy_class_create("illegal_ranking", &params, &illegal.handle) == UCY_OK);
    std::int32_t known = 0;
    std::uint64_t degree = 0;
    REQUIRE(ucy_class_predicted_degree(illegal.handle, "1145", &known, &degree) == UCY_OK);
    CHECK(known == 1);
    CHECK(degree == 3);
    REQUIRE(ucy_class_predicted_degree(illegal.handle, "5555", &known, &degree) == UCY_OK);
    CHECK(degree == 5);

    Class all;
    params = basic_params(3, 2);
    REQUIRE(ucy_class_create("all_words", &params, &all.handle) == UCY_OK);
    REQUIRE(ucy_class_predicted_degree(all.handle, "AB", &known, &degree) == UCY_OK);
    CHECK(known == 0);
}

TEST_CASE("digraph report, listings and cycle extraction") {
    Class cls;
    ucy_class_params params = basic_params(3, 3);
    REQUIRE(ucy_class_create("noninjective", &params, &cls.handle) == UCY_OK);
    Graph graph;
    REQUIRE(ucy_digraph_build(cls.handle, &graph.handle) == UCY_OK);

    ucy_existence_report report{};
    REQUIRE(ucy_digraph_report(graph.handle, &report) == UCY_OK);
    CHECK(report.eulerian == 1);
    CHECK(report.edge_count == 21);
    CHECK(report.vertex_count == 9);
    CHECK(report.degree_violations == 0);
    CHECK(report.nontrivial_components == 1);

    char vertex[16];
    std::uint64_t component = 99;
    REQUIRE(ucy_digraph_vertex(graph.handle, 0, vertex, sizeof vertex, &component) == UCY_OK);
    CHECK(std::string(vertex) == "AA");
    CHECK(component == 0);
    CHECK(ucy_digraph_vertex(graph.handle, 9, vertex, sizeof vertex, &component) ==
          UCY_ERROR_OUT_OF_RANGE);

    char word[16];
    REQUIRE(ucy_digraph_edge(graph.handle, 0, word, sizeof word, &component) == UCY_OK);
    CHECK(std::string(word) == "AAA");
    CHECK(ucy_digraph_edge(graph.handle, 21, word, sizeof word, &component) ==
          UCY_ERROR_OUT_OF_RANGE);

    REQUIRE(ucy_digraph_start_vertex(graph.handle, vertex, sizeof vertex) == UCY_OK);
    CHECK(std::string(vertex) == "AA");

    char* cycle = nullptr;
    REQUIRE(ucy_digraph_cycle(graph.handle, 0, &cycle) == UCY_OK);
    REQUIRE(cycle != nullptr);
    const std::string plain = cycle;
    ucy_string_free(cycle);
    CHECK(plain.size() == 21);

    ucy_verify_result check{};
    REQUIRE(ucy_verify(cls.handle, plain.c_str(), &check) == UCY_OK);
    CHECK(check.valid == 1);
    CHECK(check.outcome == UCY_VERIFY_VALID);

    char* canonical = nullptr;
    REQUIRE(ucy_digraph_cycle(graph.handle, 1, &canonical) == UCY_OK);
    const std::string least = canonical;
    ucy_string_free(canonical);
    CHECK(least.size() == plain.size());
    // canonical form is a rotation of the plain form, no larger than any other
    const std::string doubled = plain + plain;
    CHECK(doubled.find(least) != std::string::npos);
    for (std::size_t shift = 0; shift < plain.size(); ++shift)
        CHECK(least <= doubled.substr(shift, plain.size()));

    char* dot = nullptr;
    REQUIRE(ucy_digraph_dot(graph.handle, &dot) == UCY_OK);
    const std::string rendered = dot;
    ucy_string_free(dot);
    CHECK(rendered.find("digraph") == 0);
    CHECK(rendered.find("\"AA\" -> \"AA\" [label=\"AAA\"]") != std::string::npos);
}

TEST_CASE("a split digraph reports its components and refuses a cycle") {
    Class cls;
    ucy_class_params params{};
    params.word_length = 3;
    REQUIRE(ucy_class_create("illegal_ranking", &params, &cls.handle) == UCY_OK);
    Graph graph;
    REQUIRE(ucy_digraph_build(cls.handle, &graph.handle) == UCY_OK);

    ucy_existence_report report{};
    REQUIRE(ucy_digraph_report(graph.handle, &report) == UCY_OK);
    CHECK(report.eulerian == 0);
    CHECK(report.edge_count == 14);
    CHECK(report.nontrivial_components == 2);

    char* cycle = nullptr;
    CHECK(ucy_digraph_cycle(graph.handle, 0, &cycle) == UCY_ERROR_NOT_EULERIAN);
    CHECK(cycle == nullptr);
    CHECK(std::strlen(ucy_last_error()) > 0);

    // collect the members of the component holding 112 through the C API
    std::uint64_t target_component = ~std::uint64_t{0};
    std::vector<std::string> words;
    for (std::uint64_t e = 0; e < report.edge_count; ++e) {
        char word[16];
        std::uint64_t component = 0;
        REQUIRE(ucy_digraph_edge(graph.handle, e, word, sizeof word, &component) == UCY_OK);
        if (std::string(word) == "112")
            target_component = component;
    }
    REQUIRE(target_component != ~std::uint64_t{0});
    for (std::uint64_t e = 0; e < report.edge_count; ++e) {
        char word[16];
        std::uint64_t component = 0;
        REQUIRE(ucy_digraph_edge(graph.handle, e, word, sizeof word, &component) == UCY_OK);
        if (component == target_component)
            words.push_back(word);
    }
    CHECK(words == std::vector<std::string>{"112", "121", "211"});
}

TEST_CASE("degree violations are listed in vertex order") {
    Class cls;
    std::vector<std::int32_t> sizes{2, 1};
    ucy_class_params params{};
    params.word_length = 5;
    params.category_sizes = sizes.data();
    params.category_count = 2;
    REQUIRE(ucy_class_create("alternating", &params, &cls.handle) == UCY_OK);
    Graph graph;
    REQUIRE(ucy_digraph_build(cls.handle, &graph.handle) == UCY_OK);

    ucy_existence_report report{};
    REQUIRE(ucy_digraph_report(graph.handle, &report) == UCY_OK);
    CHECK(report.eulerian == 0);
    REQUIRE(report.degree_violations > 0);

    std::string previous;
    for (std::uint64_t i = 0; i < report.degree_violations; ++i) {
        char vertex[16];
        std::uint64_t in = 0;
        std::uint64_t out = 0;
        REQUIRE(ucy_digraph_violation(graph.handle, i, vertex, sizeof vertex, &in, &out) ==
                UCY_OK);
        CHECK(in != out);
        if (i > 0)
            CHECK(previous < std::string(vertex));
        previous = vertex;
    }
    std::uint64_t in = 0;
    std::uint64_t out = 0;
    char vertex[16];
    CHECK(ucy_digraph_violation(graph.handle, report.degree_violations, vertex, sizeof vertex,
                                &in, &out) == UCY_ERROR_OUT_OF_RANGE);
}

TEST_CASE("verification details cross the interface") {
    Class cls;
    ucy_class_params params = basic_params(3, 2);
    params.symbols = "01";
    REQUIRE(ucy_class_create("all_words", &params, &cls.handle) == UCY_OK);

    ucy_verify_result result{};
    REQUIRE(ucy_verify(cls.handle, "11101000", &result) == UCY_OK);
    CHECK(result.valid == 1);
    CHECK(result.expected_length == 8);

    REQUIRE(ucy_verify(cls.handle, "11101001", &result) == UCY_OK);
    CHECK(result.valid == 0);
    CHECK(result.outcome == UCY_VERIFY_DUPLICATE_WINDOW);
    CHECK(result.first_index == 0);
    CHECK(result.window_index == 7);
    CHECK(std::string(result.window) == "111");
    CHECK(std::string(ucy_verify_outcome_name(result.outcome)) == "duplicate_window");

    CHECK(ucy_verify(cls.handle, "11102000", &result) == UCY_ERROR_INVALID_ARGUMENT);

    REQUIRE(ucy_verify(cls.handle, "", &result) == UCY_OK);
    CHECK(result.valid == 0);
    CHECK(result.outcome == UCY_VERIFY_LENGTH_MISMATCH);
    CHECK(result.actual_length == 0);
}

TEST_CASE("alternating word cycles round-trip through the interface") {
    Class cls;
    std::vector<std::int32_t> sizes{2, 2};
    ucy_class_params params{};
    params.word_length = 4;
    params.category_sizes = sizes.data();
    params.category_count = 2;
    REQUIRE(ucy_class_create("alternating", &params, &cls.handle) == UCY_OK);

    ucy_class_info info{};
    REQUIRE(ucy_class_get_info(cls.handle, &info) == UCY_OK);
    CHECK(info.alphabet_size == 4); // derived from the block sizes
    CHECK(info.closed_count == 32);

    Graph graph;
    REQUIRE(ucy_digraph_build(cls.handle, &graph.handle) == UCY_OK);
    char* cycle = nullptr;
    REQUIRE(ucy_digraph_cycle(graph.handle, 0, &cycle) == UCY_OK);
    ucy_verify_result check{};
    REQUIRE(ucy_verify(cls.handle, cycle, &check) == UCY_OK);
    CHECK(check.valid == 1);
    ucy_string_free(cycle);
}
