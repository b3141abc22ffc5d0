// Singularity census of the regenerated branch curve and the Chern/index
// arithmetic, all in exact integers.  A vertex of type R_k contributes
// 3(k-2) cusps and (k-3)(2k-4) nodes, a four-line vertex 12 cusps and 4
// nodes, and each disjoint line pair 4 nodes.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

#include "galcov/degeneration.hpp"

namespace galcov {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

struct SingularityCensus {
    int n = 0;
    std::int64_t m = 0;  // degree of the branch curve S
    std::int64_t N = 0;  // projection degree (number of planes)
    std::int64_t p = 0;  // nodes
    std::int64_t q = 0;  // cusps
};

inline SingularityCensus singularity_census(const Degeneration& d) {
    validate(d);
    SingularityCensus c;
    c.n = d.n;
    c.m = 2 * (3 * d.n + 1);  // each line regenerates to a conic or line pair
    c.N = 2 * d.n + 2;
    for (const auto& v : d.vertices) {
        if (v.kind == VertexKind::zappatic) {
            auto k = static_cast<std::int64_t>(v.lines.size()) + 1;  // R_k point
            c.q += 3 * (k - 2);
            c.p += (k - 3) * (2 * k - 4);
        } else if (v.kind == VertexKind::four_line) {
            c.q += 12;
            c.p += 4;
        }
    }
    c.p += 4 * static_cast<std::int64_t>(disjoint_line_pairs(d).size());
    return c;
}

// The closed forms the census must reproduce for the canonical family.
inline SingularityCensus census_closed_form(int n) {
    SingularityCensus c;
    c.n = n;
    c.m = 6 * static_cast<std::int64_t>(n) + 2;
    c.N = 2 * static_cast<std::int64_t>(n) + 2;
    c.q = 18 * static_cast<std::int64_t>(n) - 6;
    c.p = 18 * static_cast<std::int64_t>(n) * n - 22 * n + 8;
    return c;
}

struct ChernReport {
    bigint c1_sq;
    bigint c2;
    bigint tau;
    bool general_type = false;  // c1_sq > 0
};

inline bigint factorial_big(std::int64_t n) {
    bigint f = 1;
    for (std::int64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// C1^2 = N!/4 (m-6)^2,  C2 = N! (m^2/2 - 3m/2 + 3 - 3p/4 - 4q/3),
// tau = (C1^2 - 2 C2)/3.  Rational intermediates, exact integer results.
inline ChernReport chern(const SingularityCensus& c) {
    ChernReport r;
    const bigint nf = factorial_big(c.N);
    const bigrat m(c.m);

    bigrat c1 = bigrat(nf) / 4 * (m - 6) * (m - 6);
    bigrat c2 = bigrat(nf) *
                (m * m / 2 - 3 * m / 2 + 3 - bigrat(3 * c.p, 4) - bigrat(4 * c.q, 3));
    if (denominator(c1) != 1 || denominator(c2) != 1)
        throw std::domain_error("chern: non-integral Chern number, census inconsistent");
    r.c1_sq = numerator(c1);
    r.c2 = numerator(c2);
    bigint diff = r.c1_sq - 2 * r.c2;
    if (diff % 3 != 0)
        throw std::domain_error("chern: topological index not integral");
    r.tau = diff / 3;
    r.general_type = r.c1_sq > 0;
    return r;
}

// Closed forms for the family: C1^2 = (2n+2)!(9n^2-12n+4),
// C2 = (2n+2)!(9n^2-9n+8)/2, tau = (2n+2)!(-3n-4)/3.
inline ChernReport chern_closed_form(int n) {
    ChernReport r;
    const bigint nf = factorial_big(2 * static_cast<std::int64_t>(n) + 2);
    const bigint nn = n;
    r.c1_sq = nf * (9 * nn * nn - 12 * nn + 4);
    r.c2 = nf * (9 * nn * nn - 9 * nn + 8) / 2;
    r.tau = nf * (-3 * nn - 4) / 3;
    r.general_type = r.c1_sq > 0;
    return r;
}

}  // namespace galcov
