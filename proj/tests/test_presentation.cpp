#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "galcov/degeneration.hpp"
#include "galcov/perm.hpp"
#include "galcov/presentation.hpp"

using namespace galcov;

namespace {

std::vector<std::string> to_strings(const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(to_string(w));
    return out;
}

bool contains(const std::vector<std::string>& hay, const std::string& needle) {
    return std::find(hay.begin(), hay.end(), needle) != hay.end();
}

// test-local permutation evaluation, independent of perm.hpp: applies
// transpositions right-to-left over 1..npoints
bool maps_to_identity(const Word& w, const std::vector<std::array<int, 2>>& tmap,
                      int npoints) {
    for (int start = 1; start <= npoints; ++start) {
        int x = start;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            auto [p, q] = tmap[static_cast<std::size_t>(it->gen.line)];
            if (x == p)
                x = q;
            else if (x == q)
                x = p;
        }
        if (x != start) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("four-line raw family: 20 relators, chained equalities expanded") {
    auto rels = fourline_relators_raw(1, 2, 4, 7);
    // 3+3+1+1+3+3+1+1 from the braid/commutator groups plus the four
    // equality relations, expanding every chained equality separately
    CHECK(rels.size() == 20);
}

TEST_CASE("four-line raw relators die under the derived transpositions") {
    // a=(1 2), b=(1 5), c=(2 6), d=(5 6) with primes equal to unprimed:
    // the incidences of lines 1,2,4,7 at V5 for n=3
    std::vector<std::array<int, 2>> tmap(8);
    tmap[1] = {1, 2};
    tmap[2] = {1, 5};
    tmap[4] = {2, 6};
    tmap[7] = {5, 6};
    for (const auto& r : fourline_relators_raw(1, 2, 4, 7))
        CHECK(maps_to_identity(r, tmap, 6));
}

TEST_CASE("four-line raw instantiates relation (1.9) correctly") {
    auto rels = fourline_relators_raw(1, 2, 4, 7);
    // (1.9): b'b a' b a'^-1 b^-1 b'^-1 = d c' d^-1 with (a,b,c,d)=(1,2,4,7)
    CHECK(to_string(rels[16]) ==
          "2' 2 1' 2 1'^-1 2^-1 2'^-1 7 4'^-1 7^-1");
}

TEST_CASE("four-line simplified family reproduces the n=3 vertex blocks") {
    auto v5 = to_strings(fourline_relators_simplified(1, 2, 4, 7));
    // relations (6.2)-(6.3) plus 4=4'
    CHECK(contains(v5, "4 4'"));
    CHECK(contains(v5, "1 2 1 2 1 2"));
    CHECK(contains(v5, "2 7 2 7 2 7"));
    CHECK(contains(v5, "7 4 7 4 7 4"));
    CHECK(contains(v5, "4 1 4 1 4 1"));
    CHECK(contains(v5, "2 4 2 4"));
    CHECK(contains(v5, "1 7 1 7"));
    CHECK(contains(v5, "1' 2 7 4 7 2"));
    CHECK(contains(v5, "7' 7 4 1 2 1 4 7"));
    CHECK(v5.size() == 9);

    auto v6 = to_strings(fourline_relators_simplified(3, 4, 6, 9));
    CHECK(contains(v6, "3' 4 9 6 9 4"));          // 3' = 4 9 6 9 4
    CHECK(contains(v6, "9' 9 6 3 4 3 6 9"));      // 9' = 9 6 3 4 3 6 9
}

TEST_CASE("zappatic family for V1, V2 at n=3 matches the worked lists") {
    auto v1 = to_strings(zappatic_relators({1, 3, 5}));
    CHECK(contains(v1, "1 3' 3 1' 3 3'"));                    // 1 = 3'3 1' 33'
    CHECK(contains(v1, "5 5' 5 3' 3 5 3 3'"));                // 55'5 = 3'3 5 33'
    CHECK(contains(v1, "1 5 1 5"));
    CHECK(contains(v1, "1 5' 1 5'"));
    CHECK(contains(v1, "1' 5 1' 5"));
    CHECK(contains(v1, "1' 5' 1' 5'"));
    CHECK(v1.size() == 12);

    auto v2 = to_strings(zappatic_relators({7, 9, 10}));
    CHECK(contains(v2, "7' 9 7' 9 7' 9"));
    CHECK(contains(v2, "7' 9' 7' 9' 7' 9'"));
    CHECK(contains(v2, "7' 9 9' 9 7' 9 9' 9 7' 9 9' 9"));
    CHECK(contains(v2, "9' 10 9' 10 9' 10"));
    CHECK(contains(v2, "10 9' 9 9' 7' 9' 9 9' 10 9' 9 9' 7' 9' 9 9' 10 9' 9 9' 7' 9' 9 9'"));
    CHECK(contains(v2, "9 10 9 10 9 10"));
    CHECK(contains(v2, "7 9' 9 7' 9 9'"));
    CHECK(contains(v2, "10 10' 10 9' 9 10 9 9'"));
}

TEST_CASE("zappatic family arity") {
    CHECK_THROWS_AS(zappatic_relators({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(zappatic_relators_raw_r4({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(zappatic_relators_raw_r5({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("raw R4 family: the five relation groups, 12 relators") {
    auto rels = zappatic_relators_raw_r4({1, 2, 3});
    CHECK(rels.size() == 12);
    auto strs = to_strings(rels);
    // (5.2): 1 = 2'2 1' 22'
    CHECK(contains(strs, "1 2' 2 1' 2 2'"));
    // (5.4): 3' = 3 2'2 1' 2'2 1' 22' 3 2'2 1' 22' 1' 22' 3
    CHECK(contains(strs, "3' 3 2' 2 1' 2' 2 1' 2 2' 3 2' 2 1' 2 2' 1' 2 2' 3"));
    CHECK(contains(strs, "1 3 1 3"));
    CHECK(contains(strs, "1' 3' 1' 3'"));
}

TEST_CASE("raw R5 family includes the fourth-line block") {
    auto rels = zappatic_relators_raw_r5({1, 2, 3, 4});
    CHECK(rels.size() == 12 + 16);
    auto strs = to_strings(rels);
    // [1,434] and [1,43'4]
    CHECK(contains(strs, "1 4 3 4 1 4 3 4"));
    CHECK(contains(strs, "1 4 3' 4 1 4 3' 4"));
    // 44'4 = 3'3 4' 33'
    CHECK(contains(strs, "4 4' 4 3' 3 4' 3 3'"));
}

TEST_CASE("assembled G_1 for n=3: structure and image") {
    auto d = build_family(3);
    auto p = assemble_g1(d, AssemblyMode::simplified);
    CHECK(p.involutive);
    CHECK(p.alphabet.size() == 20);
    // V1(12) + V2(12) + conic(2) + 3 four-line(27) + 21 pairs(84) + projective
    CHECK(p.relators.size() == 138);

    auto strs = to_strings(p.relators);
    CHECK(contains(strs, "10' 10 9' 9 8' 8 7' 7 6' 6 5' 5 4' 4 3' 3 2' 2 1' 1"));
    CHECK(contains(strs, "2 2'"));

    auto tmap = transposition_map(d);
    for (const auto& r : p.relators) CHECK(maps_to_identity(r, tmap, 8));
}

TEST_CASE("assembled G_1 relators die in the image for n=3..8") {
    for (int n = 3; n <= 8; ++n) {
        auto d = build_family(n);
        auto p = assemble_g1(d, AssemblyMode::simplified);
        auto tmap = transposition_map(d);
        bool all = true;
        for (const auto& r : p.relators)
            all = all && maps_to_identity(r, tmap, 2 * n + 2);
        CHECK(all);
    }
}

TEST_CASE("raw assembly dies in the image too (n=3, n=4)") {
    for (int n : {3, 4}) {
        auto d = build_family(n);
        auto p = assemble_g1(d, AssemblyMode::raw);
        auto tmap = transposition_map(d);
        bool all = true;
        for (const auto& r : p.relators)
            all = all && maps_to_identity(r, tmap, 2 * n + 2);
        CHECK(all);
    }
}

TEST_CASE("raw assembly is rejected for n > 4") {
    CHECK_THROWS_AS(assemble_g1(build_family(5), AssemblyMode::raw),
                    std::invalid_argument);
}

TEST_CASE("n=4 simplified assembly contains the theorem block for V8") {
    auto p = assemble_g1(build_family(4), AssemblyMode::simplified);
    auto strs = to_strings(p.relators);
    // d' = d c a b a c d at V8=(7,8,10,13); with 13=13' this is the
    // '13 = 10 7 8 7 10' relation of the worked n=4 list
    CHECK(contains(strs, "13' 13 10 7 8 7 10 13"));
}

TEST_CASE("projective relator dies under free involutive reduction once all j=j'") {
    auto d = build_family(3);
    auto p = assemble_g1(d, AssemblyMode::simplified);
    const Word& proj = p.relators.back();
    Word unprimed;
    for (const Token& t : proj) unprimed.push_back(tok(t.gen.line));
    CHECK(reduced(unprimed, true).empty());
}

TEST_CASE("n=3 braid pairs on the kept generators match the theorem list") {
    // braid-shaped relators projected along j' -> j (an equality that holds
    // in G_1), restricted to the generator choice {1,3,4,5,6,7,8}
    auto p = assemble_g1(build_family(3), AssemblyMode::simplified);
    std::set<int> kept{1, 3, 4, 5, 6, 7, 8};
    std::set<std::pair<int, int>> braid_pairs;
    for (const Word& r : p.relators) {
        if (r.size() != 6) continue;
        bool shape = true;
        for (std::size_t i = 0; i < 6; ++i)
            if (r[i].gen != r[i % 2].gen) shape = false;
        if (!shape || r[0].gen.line == r[1].gen.line) continue;
        auto pr = std::minmax(r[0].gen.line, r[1].gen.line);
        if (kept.count(pr.first) && kept.count(pr.second))
            braid_pairs.insert({pr.first, pr.second});
    }
    std::set<std::pair<int, int>> expected{{4, 7}, {1, 4}, {1, 3}, {3, 4},
                                           {3, 6}, {3, 5}, {5, 6}, {5, 8}};
    CHECK(braid_pairs == expected);
}
