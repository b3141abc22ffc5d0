#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "galcov/degeneration.hpp"
#include "galcov/presentation.hpp"

using namespace galcov;

TEST_CASE("family counts: 3n+1 lines, 2n+2 planes, n+4 vertices") {
    auto d = build_family(3);
    CHECK(d.line_count() == 10);
    CHECK(d.plane_count() == 8);
    CHECK(d.vertices.size() == 7);
    CHECK_NOTHROW(validate(d));

    for (int n = 3; n <= 10; ++n) {
        auto f = build_family(n);
        CHECK(f.line_count() == 3 * n + 1);
        CHECK(f.plane_count() == 2 * n + 2);
        CHECK(static_cast<int>(f.vertices.size()) == n + 4);
        int fourline = 0;
        for (const auto& v : f.vertices)
            if (v.kind == VertexKind::four_line) ++fourline;
        CHECK(fourline == n);
        CHECK_NOTHROW(validate(f));
    }
}

TEST_CASE("n < 3 is rejected") {
    CHECK_THROWS_AS(build_family(2), std::invalid_argument);
    CHECK_THROWS_AS(build_family(0), std::invalid_argument);
}

TEST_CASE("local orderings match the worked cases") {
    auto d3 = build_family(3);
    CHECK(d3.vertices[0].lines == std::vector<int>{1, 3, 5});    // V1
    CHECK(d3.vertices[1].lines == std::vector<int>{7, 9, 10});   // V2
    CHECK(d3.vertices[2].lines == std::vector<int>{2});          // V3
    CHECK(d3.vertices[3].lines == std::vector<int>{8});          // V4
    CHECK(d3.vertices[4].lines == std::vector<int>{1, 2, 4, 7}); // V5
    CHECK(d3.vertices[5].lines == std::vector<int>{3, 4, 6, 9});
    CHECK(d3.vertices[6].lines == std::vector<int>{5, 6, 8, 10});

    auto d4 = build_family(4);
    CHECK(d4.vertices[7].lines == std::vector<int>{7, 8, 10, 13});  // V8
    CHECK(d4.vertices[1].lines == std::vector<int>{9, 11, 12, 13}); // V2
}

TEST_CASE("four-line vertices have horizontal b,c, top-interior a, bottom-interior d") {
    for (int n = 3; n <= 8; ++n) {
        auto d = build_family(n);
        for (const auto& v : d.vertices) {
            if (v.kind != VertexKind::four_line) continue;
            CHECK(v.lines[0] % 2 == 1);
            CHECK(v.lines[0] <= 2 * n - 1);
            CHECK(v.lines[1] % 2 == 0);
            CHECK(v.lines[2] % 2 == 0);
            CHECK(v.lines[3] >= 2 * n + 1);
        }
    }
}

TEST_CASE("disjoint pairs for n=3: the 21 pairs of the worked example") {
    auto d = build_family(3);
    auto pairs = disjoint_line_pairs(d);
    CHECK(pairs.size() == 21);

    // the list from the paper's n=3 commutator blocks, frozen by hand
    std::set<std::pair<int, int>> expected{
        {1, 6}, {1, 8}, {1, 9}, {1, 10},
        {2, 3}, {2, 5}, {2, 6}, {2, 8}, {2, 9}, {2, 10},
        {3, 7}, {3, 8}, {3, 10},
        {4, 5}, {4, 8}, {4, 10},
        {5, 7}, {5, 9},
        {6, 7},
        {7, 8},
        {8, 9}};
    std::set<std::pair<int, int>> got(pairs.begin(), pairs.end());
    CHECK(got == expected);
    CHECK(got.count({1, 6}) == 1);
    CHECK(got.count({1, 2}) == 0);
}

TEST_CASE("disjoint pair count matches both closed forms") {
    for (int n = 3; n <= 8; ++n) {
        auto d = build_family(n);
        auto cnt = static_cast<long long>(disjoint_line_pairs(d).size());
        long long lines = 3 * n + 1;
        CHECK(cnt == lines * (lines - 1) / 2 - 2 * (n * (n - 1) / 2) - 6 * n);
        CHECK(4 * cnt == 14 * n * n - 14 * n);  // nodes of type (par)
    }
}

TEST_CASE("transposition map for n=3") {
    auto d = build_family(3);
    auto tmap = transposition_map(d);
    CHECK(tmap[1] == std::array<int, 2>{1, 2});  // (T1,T2)
    CHECK(tmap[2] == std::array<int, 2>{1, 5});  // (T1,B1)
    CHECK(tmap[7] == std::array<int, 2>{5, 6});  // (B1,B2)
}

TEST_CASE("monodromy consistency holds for the family and fails for a mutation") {
    for (int n = 3; n <= 6; ++n) CHECK(monodromy_consistency_check(build_family(n)).ok);

    auto d = build_family(3);
    d.lines[3].planes = {PlaneLabel{Side::top, 1}, PlaneLabel{Side::top, 2}};  // line 4
    auto rep = monodromy_consistency_check(d);
    CHECK_FALSE(rep.ok);
    CHECK(rep.vertex_id == 5);
}

TEST_CASE("validation rejects malformed inputs") {
    auto d = build_family(3);
    d.vertices[2].lines = {2, 4};  // conic endpoint with two lines
    CHECK_THROWS_AS(validate(d), std::invalid_argument);

    auto d2 = build_family(3);
    d2.lines[0].planes = {PlaneLabel{Side::top, 1}, PlaneLabel{Side::top, 1}};
    CHECK_THROWS_AS(validate(d2), std::invalid_argument);
}
