// Small permutation arithmetic on {1..N} for the symmetric-group image
// checks: words evaluate to products of the transpositions assigned to their
// lines (primed generators inherit the line's transposition).
#pragma once

#include <array>
#include <numeric>
#include <vector>

#include "galcov/word.hpp"

namespace galcov {

// Images are 1-based; perm[0] unused.
using Perm = std::vector<int>;

inline Perm perm_identity(int npoints) {
    Perm p(static_cast<std::size_t>(npoints) + 1);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm perm_transposition(int npoints, int a, int b) {
    Perm p = perm_identity(npoints);
    p[static_cast<std::size_t>(a)] = b;
    p[static_cast<std::size_t>(b)] = a;
    return p;
}

inline bool perm_is_identity(const Perm& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

// Right-to-left composition: (a*b)(x) = a(b(x)).
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    out[0] = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
        out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

// Evaluates a word under line -> transposition.  Transpositions are
// involutions, so exponents do not matter.
inline Perm evaluate_word(const Word& w, const std::vector<std::array<int, 2>>& tmap,
                          int npoints) {
    Perm acc = perm_identity(npoints);
    for (const Token& t : w) {
        const auto& pq = tmap[static_cast<std::size_t>(t.gen.line)];
        Perm tr = perm_transposition(npoints, pq[0], pq[1]);
        acc = perm_compose(acc, tr);
    }
    return acc;
}

// Transpositions along a connected graph generate the full symmetric group;
// connectivity of (planes, lines) is the surjectivity witness.
inline bool transposition_graph_connected(const std::vector<std::array<int, 2>>& tmap,
                                          int npoints) {
    std::vector<int> parent(static_cast<std::size_t>(npoints) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (std::size_t l = 1; l < tmap.size(); ++l) {
        auto [p, q] = tmap[l];
        if (p == 0) continue;
        parent[static_cast<std::size_t>(find(p))] = find(q);
    }
    int root = find(1);
    for (int x = 2; x <= npoints; ++x)
        if (find(x) != root) return false;
    return true;
}

}  // namespace galcov
