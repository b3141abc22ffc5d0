#include <catch2/catch_amalgamated.hpp>

#include "galcov/perm.hpp"
#include "galcov/word.hpp"

using namespace galcov;

namespace {

Word W(std::initializer_list<int> lines) {
    Word w;
    for (int l : lines) w.push_back(tok(l));
    return w;
}

}  // namespace

TEST_CASE("braid relator of single letters is (xy)^3 in involutive mode") {
    Word x = word_of(Gen{1, true});
    Word y = word_of(Gen{2, false});
    Word b = braid_relator(x, y, true);
    CHECK(to_string(b) == "1' 2 1' 2 1' 2");
}

TEST_CASE("braid relator in raw mode keeps inverses") {
    Word b = braid_relator(word_of(Gen{1, false}), word_of(Gen{2, false}), false);
    CHECK(to_string(b) == "1 2 1 2^-1 1^-1 2^-1");
}

TEST_CASE("degenerate braid(x,x) reduces to the empty word") {
    Word x = word_of(Gen{3, false});
    CHECK(braid_relator(x, x, true).empty());
    CHECK(braid_relator(x, x, false).empty());
}

TEST_CASE("commutator of single letters is (xy)^2 involutively, comm(x,x) empty") {
    Word c = commutator_relator(W({2}), W({4}), true);
    CHECK(to_string(c) == "2 4 2 4");
    CHECK(commutator_relator(W({2}), W({2}), true).empty());
}

TEST_CASE("free reduction is idempotent and length-nonincreasing") {
    // deterministic pseudo-random words
    std::uint64_t state = 12345;
    auto next = [&] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    for (int iter = 0; iter < 200; ++iter) {
        Word w;
        const auto len = next() % 40;
        for (std::uint64_t i = 0; i < len; ++i)
            w.push_back(Token{Gen{static_cast<int>(next() % 4 + 1), (next() % 2) == 0},
                              +1});
        Word r1 = reduced(w, true);
        Word r2 = reduced(r1, true);
        CHECK(r1 == r2);
        CHECK(r1.size() <= w.size());
        // a word times its inverse dies
        Word wwinv = concat({w, inverse(w, true)});
        CHECK(reduced(wwinv, true).empty());
    }
}

TEST_CASE("equality relator is u v^-1") {
    Word u = word_of(Gen{1, true});
    Word v = W({2, 7, 4, 7, 2});
    CHECK(to_string(equality_relator(u, v, true)) == "1' 2 7 4 7 2");
}

TEST_CASE("token parsing round-trips") {
    for (const char* s : {"7", "7'", "7^-1", "7'^-1"}) {
        Token t = parse_token(s);
        CHECK(to_string(t) == s);
    }
    CHECK_THROWS_AS(parse_token("x3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_token("3''"), std::invalid_argument);
}

TEST_CASE("transpositions along an edge satisfy the braid relation") {
    // (1 2) and (2 3) inside S_3
    std::vector<std::array<int, 2>> tmap{{0, 0}, {1, 2}, {2, 3}};
    Word b = braid_relator(W({1}), W({2}), true);
    CHECK(perm_is_identity(evaluate_word(b, tmap, 3)));
}

TEST_CASE("disjoint transpositions commute") {
    std::vector<std::array<int, 2>> tmap{{0, 0}, {1, 2}, {3, 4}};
    Word c = commutator_relator(W({1}), W({2}), true);
    CHECK(perm_is_identity(evaluate_word(c, tmap, 4)));
}
