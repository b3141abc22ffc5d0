// End-to-end verdict: assemble the presentation for a family member, check
// the symmetric-group image, enumerate, and compare the order against
// (2n+2)!.  Equality of the order with the image size makes the surjection
// an isomorphism; that is exactly the simple-connectedness witness.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <optional>
#include <string>

#include "galcov/degeneration.hpp"
#include "galcov/enumerate.hpp"
#include "galcov/perm.hpp"
#include "galcov/presentation.hpp"
#include "galcov/tietze.hpp"
#include "galcov/word.hpp"

namespace galcov {

using bigint = boost::multiprecision::cpp_int;

inline bigint factorial(int n) {
    bigint f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Every relator must evaluate to the identity permutation under
// line -> transposition (primed generators inherit their line's image).
inline bool image_check(const Presentation& p,
                        const std::vector<std::array<int, 2>>& tmap, int npoints) {
    for (const Word& r : p.relators)
        if (!perm_is_identity(evaluate_word(r, tmap, npoints))) return false;
    return true;
}

struct Verdict {
    enum class Conclusion { verified, falsified, inconclusive };

    int n = 0;
    std::optional<bigint> group_order;  // empty = unknown (overflow)
    bool image_full_symmetric = false;
    Conclusion simply_connected = Conclusion::inconclusive;
    std::uint64_t cosets_defined_peak = 0;
    std::uint64_t wall_time_ms = 0;
    Strategy strategy = Strategy::felsch;
};

inline std::string to_string(Verdict::Conclusion c) {
    switch (c) {
        case Verdict::Conclusion::verified: return "verified";
        case Verdict::Conclusion::falsified: return "falsified";
        case Verdict::Conclusion::inconclusive: return "inconclusive";
    }
    throw std::logic_error("unreachable");
}

// The generator set the proofs reduce to: {1, 3, 4, ..., 2n+2}.
inline std::vector<Gen> paper_generator_target(int n) {
    std::vector<Gen> t;
    t.push_back(Gen{1, false});
    for (int j = 3; j <= 2 * n + 2; ++j) t.push_back(Gen{j, false});
    return t;
}

// Builds the family, assembles simplified G_1, checks the image, reduces the
// presentation, and enumerates.  The Tietze step is order-preserving, so the
// enumerated count is |G_1| regardless of how far the reduction got.
inline Verdict verify_simply_connected(int n, EnumerationConfig cfg,
                                       AssemblyMode mode = AssemblyMode::simplified) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    v.n = n;
    v.strategy = cfg.strategy;

    Degeneration d = build_family(n);
    Presentation g1 = assemble_g1(d, mode);
    auto tmap = transposition_map(d);
    const int npoints = 2 * n + 2;

    bool relators_die = image_check(g1, tmap, npoints);
    bool connected = transposition_graph_connected(tmap, npoints);
    v.image_full_symmetric = relators_die && connected;
    if (!relators_die) {
        // a relator with a nontrivial image falsifies the claimed surjection
        v.simply_connected = Verdict::Conclusion::falsified;
        return v;
    }

    Presentation reduced_p = tietze_simplify(g1, paper_generator_target(n)).presentation;

    if (cfg.max_cosets == 0) {
        bigint cap = 2 * factorial(npoints);
        std::uint64_t lim = std::numeric_limits<std::uint64_t>::max();
        cfg.max_cosets = cap > lim ? lim : static_cast<std::uint64_t>(cap);
    }
    CosetTable t = coset_enumerate(reduced_p, {}, cfg);
    v.cosets_defined_peak = t.peak_live;
    auto t1 = std::chrono::steady_clock::now();
    v.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());

    if (t.status != CosetTable::Status::complete) {
        v.simply_connected = Verdict::Conclusion::inconclusive;
        return v;
    }
    v.group_order = bigint(t.coset_count);
    v.simply_connected = (v.image_full_symmetric && *v.group_order == factorial(npoints))
                             ? Verdict::Conclusion::verified
                             : Verdict::Conclusion::falsified;
    return v;
}

}  // namespace galcov
