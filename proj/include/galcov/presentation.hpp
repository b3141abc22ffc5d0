// Relator families contributed by each vertex type, and the assembly of the
// full presentation G_1 for a degeneration: vertex families, disjoint-pair
// commutators, and the projective relator, in a fixed deterministic order.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "galcov/degeneration.hpp"
#include "galcov/word.hpp"

namespace galcov {

struct Presentation {
    std::vector<Gen> alphabet;
    std::vector<Word> relators;
    bool involutive = true;

    bool in_alphabet(const Gen& g) const {
        for (const auto& a : alphabet)
            if (a == g) return true;
        return false;
    }
};

enum class AssemblyMode { raw, simplified };

namespace detail {

// Building blocks for relator words: g(l) is the generator of line l,
// gp(l) its primed twin, both as one-letter words.
inline Word g(int line) { return word_of(Gen{line, false}); }
inline Word gp(int line) { return word_of(Gen{line, true}); }
inline Word gi(int line) { return Word{tok(line, false, -1)}; }
inline Word gpi(int line) { return Word{tok(line, true, -1)}; }

}  // namespace detail

// The twelve relation families a four-line intersection contributes to the
// unquotiented group, chained equalities expanded one relator per link
// (20 relators total).  Exponents are kept; in involutive contexts they
// collapse onto the generators.
inline std::vector<Word> fourline_relators_raw(int a, int b, int c, int d) {
    using namespace detail;
    const bool inv = false;  // words carry explicit inverses
    auto braid = [&](const Word& x, const Word& y) { return braid_relator(x, y, inv); };
    auto comm = [&](const Word& x, const Word& y) { return commutator_relator(x, y, inv); };
    auto eq = [&](const Word& u, const Word& v) { return equality_relator(u, v, inv); };
    auto cat = [](std::initializer_list<Word> ws) { return concat(ws); };

    const Word bconj_ap = cat({gp(b), g(b), gp(a), gi(b), gpi(b)});   // b'b a' b^-1 b'^-1
    const Word bconj_a = cat({gp(b), g(b), g(a), gi(b), gpi(b)});     // b'b a b^-1 b'^-1
    const Word cc = cat({gi(c), gp(c), g(c)});                        // c^-1 c' c
    const Word dd = cat({gi(d), gp(d), g(d)});                        // d^-1 d' d

    std::vector<Word> rels;
    // (1.1)
    rels.push_back(braid(gp(a), g(b)));
    rels.push_back(braid(gp(a), gp(b)));
    rels.push_back(braid(gp(a), cat({gi(b), gp(b), g(b)})));
    // (1.2)
    rels.push_back(braid(g(c), g(d)));
    rels.push_back(braid(gp(c), g(d)));
    rels.push_back(braid(cc, g(d)));
    // (1.3)
    rels.push_back(comm(bconj_ap, g(d)));
    // (1.4)
    rels.push_back(comm(bconj_ap, cat({gi(c), gpi(c), gi(d), gp(d), g(d), gp(c), g(c)})));
    // (1.5)
    rels.push_back(braid(g(a), g(b)));
    rels.push_back(braid(g(a), gp(b)));
    rels.push_back(braid(g(a), cat({gi(b), gp(b), g(b)})));
    // (1.6)
    rels.push_back(braid(g(c), dd));
    rels.push_back(braid(gp(c), dd));
    rels.push_back(braid(cc, dd));
    // (1.7)
    rels.push_back(comm(bconj_a, dd));
    // (1.8)
    rels.push_back(comm(bconj_a, cat({gi(c), gpi(c), gi(d), gpi(d), g(d), gp(d), g(d), gp(c), g(c)})));
    // (1.9)  b'b a' b a'^-1 b^-1 b'^-1 = d c' d^-1
    rels.push_back(eq(cat({gp(b), g(b), gp(a), g(b), gpi(a), gi(b), gpi(b)}),
                      cat({g(d), gp(c), gi(d)})));
    // (1.10) b'b a' b' a'^-1 b^-1 b'^-1 = d c' c c'^-1 d^-1
    rels.push_back(eq(cat({gp(b), g(b), gp(a), gp(b), gpi(a), gi(b), gpi(b)}),
                      cat({g(d), gp(c), g(c), gpi(c), gi(d)})));
    // (1.11) b'b a b a^-1 b^-1 b'^-1 = d^-1 d' d c' d^-1 d'^-1 d
    rels.push_back(eq(cat({gp(b), g(b), g(a), g(b), gi(a), gi(b), gpi(b)}),
                      cat({gi(d), gp(d), g(d), gp(c), gi(d), gpi(d), g(d)})));
    // (1.12) b'b a b' a^-1 b^-1 b'^-1 = d^-1 d' d c' c c'^-1 d^-1 d'^-1 d
    rels.push_back(eq(cat({gp(b), g(b), g(a), gp(b), gi(a), gi(b), gpi(b)}),
                      cat({gi(d), gp(d), g(d), gp(c), g(c), gpi(c), gi(d), gpi(d), g(d)})));
    return rels;
}

// The b=b' reduced family: c=c', the braid square around the vertex, the two
// node commutators, and the conjugate expressions for a' and d'.
inline std::vector<Word> fourline_relators_simplified(int a, int b, int c, int d) {
    using namespace detail;
    const bool inv = true;
    std::vector<Word> rels;
    rels.push_back(equality_relator(g(c), gp(c), inv));
    rels.push_back(braid_relator(g(a), g(b), inv));
    rels.push_back(braid_relator(g(b), g(d), inv));
    rels.push_back(braid_relator(g(d), g(c), inv));
    rels.push_back(braid_relator(g(c), g(a), inv));
    rels.push_back(commutator_relator(g(b), g(c), inv));
    rels.push_back(commutator_relator(g(a), g(d), inv));
    rels.push_back(equality_relator(gp(a), concat({g(b), g(d), g(c), g(d), g(b)}), inv));
    rels.push_back(equality_relator(
        gp(d), concat({g(d), g(c), g(a), g(b), g(a), g(c), g(d)}), inv));
    return rels;
}

// Vertex family for a Zappatic point with k >= 3 lines in local order.
// Local labels 1..k are mapped onto the given global line ids.
inline std::vector<Word> zappatic_relators(const std::vector<int>& lines) {
    using namespace detail;
    const int k = static_cast<int>(lines.size());
    if (k < 3) throw std::invalid_argument("zappatic vertex needs at least 3 lines");
    const bool inv = true;
    auto L = [&](int i) { return g(lines[static_cast<std::size_t>(i) - 1]); };
    auto Lp = [&](int i) { return gp(lines[static_cast<std::size_t>(i) - 1]); };

    std::vector<Word> rels;
    // braid block
    rels.push_back(braid_relator(Lp(1), L(2), inv));
    rels.push_back(braid_relator(Lp(1), Lp(2), inv));
    rels.push_back(braid_relator(Lp(1), concat({L(2), Lp(2), L(2)}), inv));
    rels.push_back(braid_relator(Lp(2), L(3), inv));
    rels.push_back(braid_relator(
        L(3), concat({Lp(2), L(2), Lp(2), Lp(1), Lp(2), L(2), Lp(2)}), inv));
    rels.push_back(braid_relator(L(2), L(3), inv));
    for (int i = 3; i <= k - 1; ++i) {
        rels.push_back(braid_relator(L(i), L(i + 1), inv));
        rels.push_back(braid_relator(Lp(i), L(i + 1), inv));
    }
    // rewriting block
    rels.push_back(equality_relator(L(1), concat({Lp(2), L(2), Lp(1), L(2), Lp(2)}), inv));
    rels.push_back(equality_relator(concat({L(3), Lp(3), L(3)}),
                                    concat({Lp(2), L(2), L(3), L(2), Lp(2)}), inv));
    for (int i = 4; i <= k; ++i)
        rels.push_back(equality_relator(
            concat({L(i), Lp(i), L(i)}),
            concat({Lp(i - 1), L(i - 1), Lp(i), L(i - 1), Lp(i - 1)}), inv));
    // commutation block: the (1,3) pair carries all four primed variants,
    // every other pair (i,j), j >= i+2, the two listed in the lemma.
    rels.push_back(commutator_relator(L(1), L(3), inv));
    rels.push_back(commutator_relator(L(1), Lp(3), inv));
    rels.push_back(commutator_relator(Lp(1), L(3), inv));
    rels.push_back(commutator_relator(Lp(1), Lp(3), inv));
    for (int j = 4; j <= k; ++j) {
        rels.push_back(commutator_relator(L(1), L(j), inv));
        rels.push_back(commutator_relator(Lp(1), L(j), inv));
    }
    for (int i = 2; i <= k - 2; ++i)
        for (int j = i + 2; j <= k; ++j) {
            rels.push_back(commutator_relator(L(i), L(j), inv));
            rels.push_back(commutator_relator(Lp(i), L(j), inv));
        }
    return rels;
}

// Unsimplified local list for an R_4 point (three lines): relation groups
// (5.1)-(5.5), 12 relators.
inline std::vector<Word> zappatic_relators_raw_r4(const std::vector<int>& lines) {
    using namespace detail;
    if (lines.size() != 3) throw std::invalid_argument("raw R4 family needs exactly 3 lines");
    const bool inv = true;
    auto L = [&](int i) { return g(lines[static_cast<std::size_t>(i) - 1]); };
    auto Lp = [&](int i) { return gp(lines[static_cast<std::size_t>(i) - 1]); };

    const Word w22 = concat({Lp(2), L(2)});    // 2'2
    const Word w22r = concat({L(2), Lp(2)});   // 22'
    std::vector<Word> rels;
    // (5.1)
    rels.push_back(braid_relator(Lp(1), L(2), inv));
    rels.push_back(braid_relator(Lp(1), Lp(2), inv));
    rels.push_back(braid_relator(Lp(1), concat({L(2), Lp(2), L(2)}), inv));
    // (5.2) 1 = 2'2 1' 22'
    rels.push_back(equality_relator(L(1), concat({w22, Lp(1), w22r}), inv));
    // (5.3)
    rels.push_back(braid_relator(concat({w22, Lp(1), L(2), Lp(1), w22r}), L(3), inv));
    rels.push_back(braid_relator(concat({w22, Lp(1), Lp(2), Lp(1), w22r}), L(3), inv));
    rels.push_back(braid_relator(concat({w22, Lp(1), L(2), Lp(2), L(2), Lp(1), w22r}), L(3), inv));
    // (5.4) 3' = 3 2'2 1' 2'2 1' 22' 3 2'2 1' 22' 1' 22' 3
    rels.push_back(equality_relator(
        Lp(3), concat({L(3), w22, Lp(1), w22, Lp(1), w22r, L(3), w22, Lp(1), w22r, Lp(1),
                       w22r, L(3)}),
        inv));
    // (5.5)
    rels.push_back(commutator_relator(L(1), L(3), inv));
    rels.push_back(commutator_relator(L(1), Lp(3), inv));
    rels.push_back(commutator_relator(Lp(1), L(3), inv));
    rels.push_back(commutator_relator(Lp(1), Lp(3), inv));
    return rels;
}

// Unsimplified local list for an R_5 point (four lines): the R_4 list on the
// first three lines plus the fourth-line block.
inline std::vector<Word> zappatic_relators_raw_r5(const std::vector<int>& lines) {
    using namespace detail;
    if (lines.size() != 4) throw std::invalid_argument("raw R5 family needs exactly 4 lines");
    const bool inv = true;
    auto L = [&](int i) { return g(lines[static_cast<std::size_t>(i) - 1]); };
    auto Lp = [&](int i) { return gp(lines[static_cast<std::size_t>(i) - 1]); };

    std::vector<Word> rels =
        zappatic_relators_raw_r4({lines[0], lines[1], lines[2]});

    const Word w434 = concat({L(4), L(3), L(4)});
    const Word w434p = concat({L(4), Lp(3), L(4)});
    const Word w22 = concat({Lp(2), L(2)});
    const Word w22r = concat({L(2), Lp(2)});
    const Word w33 = concat({Lp(3), L(3)});
    const Word w33r = concat({L(3), Lp(3)});
    const Word w444 = concat({L(4), Lp(4), L(4)});

    rels.push_back(commutator_relator(L(1), w434, inv));
    rels.push_back(commutator_relator(L(1), w434p, inv));
    rels.push_back(commutator_relator(Lp(1), w434, inv));
    rels.push_back(commutator_relator(Lp(1), w434p, inv));

    rels.push_back(braid_relator(L(3), L(4), inv));
    rels.push_back(braid_relator(Lp(3), L(4), inv));
    rels.push_back(braid_relator(concat({L(3), Lp(3), L(3)}), L(4), inv));

    rels.push_back(commutator_relator(concat({w22, L(1), w22r}), L(4), inv));
    rels.push_back(commutator_relator(concat({w22, Lp(1), w22r}), L(4), inv));

    rels.push_back(commutator_relator(L(2), L(4), inv));
    rels.push_back(commutator_relator(Lp(2), L(4), inv));

    rels.push_back(commutator_relator(concat({w33, w22, L(1), w22r, w33r}), w444, inv));
    rels.push_back(commutator_relator(concat({w33, w22, Lp(1), w22r, w33r}), w444, inv));

    rels.push_back(commutator_relator(concat({w33, L(2), w33r}), w444, inv));
    rels.push_back(commutator_relator(concat({w33, Lp(2), w33r}), w444, inv));

    rels.push_back(equality_relator(w444, concat({w33, Lp(4), w33r}), inv));
    return rels;
}

// Assembles G_1 for the degeneration: alphabet {j, j'}, involutive, with the
// conic equalities, per-vertex families, the four commutators per disjoint
// line pair, and the projective relator (3n+1)'(3n+1)...2'2 1'1.
inline Presentation assemble_g1(const Degeneration& d, AssemblyMode mode) {
    using namespace detail;
    validate(d);
    if (mode == AssemblyMode::raw && d.n > 4)
        throw std::invalid_argument("raw mode only supports n in {3,4}");

    Presentation p;
    p.involutive = true;
    for (int j = 1; j <= d.line_count(); ++j) {
        p.alphabet.push_back(Gen{j, false});
        p.alphabet.push_back(Gen{j, true});
    }

    for (const auto& v : d.vertices) {
        std::vector<Word> family;
        switch (v.kind) {
            case VertexKind::zappatic:
                if (mode == AssemblyMode::raw)
                    family = (v.lines.size() == 3) ? zappatic_relators_raw_r4(v.lines)
                                                   : zappatic_relators_raw_r5(v.lines);
                else
                    family = zappatic_relators(v.lines);
                break;
            case VertexKind::conic_endpoint:
                family.push_back(equality_relator(g(v.lines[0]), gp(v.lines[0]), true));
                break;
            case VertexKind::four_line:
                if (mode == AssemblyMode::raw)
                    family = fourline_relators_raw(v.lines[0], v.lines[1], v.lines[2],
                                                   v.lines[3]);
                else
                    family = fourline_relators_simplified(v.lines[0], v.lines[1],
                                                          v.lines[2], v.lines[3]);
                break;
        }
        p.relators.insert(p.relators.end(), family.begin(), family.end());
    }

    for (const auto& [a, b] : disjoint_line_pairs(d)) {
        p.relators.push_back(commutator_relator(g(a), g(b), true));
        p.relators.push_back(commutator_relator(g(a), gp(b), true));
        p.relators.push_back(commutator_relator(gp(a), g(b), true));
        p.relators.push_back(commutator_relator(gp(a), gp(b), true));
    }

    Word projective;
    for (int j = d.line_count(); j >= 1; --j) {
        projective.push_back(tok(j, true));
        projective.push_back(tok(j, false));
    }
    p.relators.push_back(projective);
    return p;
}

// Classification of the line pairs each vertex family turns into braid
// (cusp) and commutator (node) relations; used by the monodromy check.
inline void vertex_relation_pairs(const VertexRecord& v,
                                  std::vector<std::pair<int, int>>& braids,
                                  std::vector<std::pair<int, int>>& comms) {
    braids.clear();
    comms.clear();
    if (v.kind == VertexKind::four_line) {
        int a = v.lines[0], b = v.lines[1], c = v.lines[2], dl = v.lines[3];
        braids = {{a, b}, {b, dl}, {dl, c}, {c, a}};
        comms = {{b, c}, {a, dl}};
    } else if (v.kind == VertexKind::zappatic) {
        const int k = static_cast<int>(v.lines.size());
        for (int i = 0; i + 1 < k; ++i) braids.emplace_back(v.lines[i], v.lines[i + 1]);
        for (int i = 0; i < k; ++i)
            for (int j = i + 2; j < k; ++j) comms.emplace_back(v.lines[i], v.lines[j]);
    }
}

struct ConsistencyReport {
    bool ok = true;
    int vertex_id = 0;  // 0 for disjoint-pair failures
    std::pair<int, int> pair{0, 0};
    std::string detail;
};

// Validates the derived transposition assignment against the relation types:
// braid partners must share exactly one plane, commutator partners none.
inline ConsistencyReport monodromy_consistency_check(const Degeneration& d) {
    auto tmap = transposition_map(d);
    auto shared = [&](int a, int b) {
        int cnt = 0;
        for (int x : tmap[static_cast<std::size_t>(a)])
            for (int y : tmap[static_cast<std::size_t>(b)])
                if (x == y) ++cnt;
        return cnt;
    };
    ConsistencyReport rep;
    std::vector<std::pair<int, int>> braids, comms;
    for (const auto& v : d.vertices) {
        vertex_relation_pairs(v, braids, comms);
        for (auto [a, b] : braids)
            if (shared(a, b) != 1) {
                rep.ok = false;
                rep.vertex_id = v.id;
                rep.pair = {a, b};
                rep.detail = "braid pair does not share exactly one plane";
                return rep;
            }
        for (auto [a, b] : comms)
            if (shared(a, b) != 0) {
                rep.ok = false;
                rep.vertex_id = v.id;
                rep.pair = {a, b};
                rep.detail = "commutator pair shares a plane";
                return rep;
            }
    }
    for (auto [a, b] : disjoint_line_pairs(d))
        if (shared(a, b) != 0) {
            rep.ok = false;
            rep.vertex_id = 0;
            rep.pair = {a, b};
            rep.detail = "disjoint pair shares a plane";
            return rep;
        }
    return rep;
}

}  // namespace galcov
