// Combinatorial model of the degenerated surface: two fans of n+1 planes
// glued along a chain, 3n+1 lines, and n+4 vertices carrying the local line
// orderings that drive the relator families.
#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace galcov {

enum class Side { top, bottom };

struct PlaneLabel {
    Side side = Side::top;
    int index = 0;  // 1..n+1 within its fan

    friend auto operator<=>(const PlaneLabel&, const PlaneLabel&) = default;
};

inline std::string to_string(const PlaneLabel& p) {
    return (p.side == Side::top ? "T" : "B") + std::to_string(p.index);
}

enum class VertexKind { zappatic, four_line, conic_endpoint };

inline std::string to_string(VertexKind k) {
    switch (k) {
        case VertexKind::zappatic: return "zappatic";
        case VertexKind::four_line: return "four_line";
        case VertexKind::conic_endpoint: return "conic_endpoint";
    }
    throw std::logic_error("unreachable");
}

inline VertexKind vertex_kind_from_string(const std::string& s) {
    if (s == "zappatic") return VertexKind::zappatic;
    if (s == "four_line") return VertexKind::four_line;
    if (s == "conic_endpoint") return VertexKind::conic_endpoint;
    throw std::invalid_argument("unknown vertex kind: " + s);
}

struct LineRecord {
    int id = 0;                          // 1..3n+1, the global ordering
    std::array<PlaneLabel, 2> planes{};  // the two incident planes
};

struct VertexRecord {
    int id = 0;                // 1..n+4
    VertexKind kind = VertexKind::four_line;
    std::vector<int> lines;    // local ordering of incident line ids
};

struct Degeneration {
    int n = 0;
    std::vector<PlaneLabel> planes;   // enumeration order: T1..T(n+1), B1..B(n+1)
    std::vector<LineRecord> lines;
    std::vector<VertexRecord> vertices;

    int line_count() const { return static_cast<int>(lines.size()); }
    int plane_count() const { return static_cast<int>(planes.size()); }

    const LineRecord& line(int id) const {
        if (id < 1 || id > line_count()) throw std::out_of_range("line id");
        return lines[static_cast<std::size_t>(id) - 1];
    }
};

// Plane number in the fixed enumeration: all T_i first, then all B_i.
inline int plane_number(const PlaneLabel& p, int n) {
    return p.side == Side::top ? p.index : n + 1 + p.index;
}

// The canonical family of Fig. 2.  Line incidences:
//   2i-1 -> (T_i, T_{i+1})       i = 1..n      (top-fan interior edges)
//   2i   -> (T_i, B_i)           i = 1..n+1    (glued horizontal edges)
//   2n+1 -> (B_1, B_2),  2n+2+i -> (B_{i+1}, B_{i+2})  i = 1..n-1
inline Degeneration build_family(int n) {
    if (n < 3) throw std::invalid_argument("build_family requires n >= 3");
    Degeneration d;
    d.n = n;
    for (int i = 1; i <= n + 1; ++i) d.planes.push_back({Side::top, i});
    for (int i = 1; i <= n + 1; ++i) d.planes.push_back({Side::bottom, i});

    d.lines.resize(static_cast<std::size_t>(3 * n + 1));
    auto set_line = [&](int id, PlaneLabel p, PlaneLabel q) {
        d.lines[static_cast<std::size_t>(id) - 1] = LineRecord{id, {p, q}};
    };
    for (int i = 1; i <= n; ++i)
        set_line(2 * i - 1, {Side::top, i}, {Side::top, i + 1});
    for (int i = 1; i <= n + 1; ++i)
        set_line(2 * i, {Side::top, i}, {Side::bottom, i});
    set_line(2 * n + 1, {Side::bottom, 1}, {Side::bottom, 2});
    for (int i = 1; i <= n - 1; ++i)
        set_line(2 * n + 2 + i, {Side::bottom, i + 1}, {Side::bottom, i + 2});

    VertexRecord v1{1, VertexKind::zappatic, {}};
    for (int i = 1; i <= n; ++i) v1.lines.push_back(2 * i - 1);
    VertexRecord v2{2, VertexKind::zappatic, {}};
    v2.lines.push_back(2 * n + 1);
    for (int i = 1; i <= n - 1; ++i) v2.lines.push_back(2 * n + 2 + i);
    d.vertices.push_back(v1);
    d.vertices.push_back(v2);
    d.vertices.push_back({3, VertexKind::conic_endpoint, {2}});
    d.vertices.push_back({4, VertexKind::conic_endpoint, {2 * n + 2}});
    for (int i = 0; i <= n - 1; ++i) {
        int dline = (i == 0) ? 2 * n + 1 : 2 * n + 2 + i;
        d.vertices.push_back(
            {5 + i, VertexKind::four_line, {2 * i + 1, 2 * i + 2, 2 * i + 4, dline}});
    }
    return d;
}

// Structural validation; used for hand-written JSON inputs as well.
inline void validate(const Degeneration& d) {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("degeneration: " + msg); };
    const int n = d.n;
    if (n < 3) fail("n must be >= 3");
    if (d.plane_count() != 2 * n + 2) fail("expected 2n+2 planes");
    if (d.line_count() != 3 * n + 1) fail("expected 3n+1 lines");
    if (static_cast<int>(d.vertices.size()) != n + 4) fail("expected n+4 vertices");

    std::set<PlaneLabel> planeset(d.planes.begin(), d.planes.end());
    if (static_cast<int>(planeset.size()) != 2 * n + 2) fail("duplicate plane labels");

    std::set<int> ids;
    for (const auto& l : d.lines) {
        if (l.id < 1 || l.id > 3 * n + 1) fail("line id out of range");
        if (!ids.insert(l.id).second) fail("duplicate line id");
        if (l.planes[0] == l.planes[1]) fail("line incident to a single plane");
        if (!planeset.count(l.planes[0]) || !planeset.count(l.planes[1]))
            fail("line references unknown plane");
    }

    int zappatic = 0, fourline = 0, conic = 0;
    std::vector<int> vertex_uses(static_cast<std::size_t>(3 * n + 1) + 1, 0);
    for (const auto& v : d.vertices) {
        for (int l : v.lines) {
            if (l < 1 || l > 3 * n + 1) fail("vertex references unknown line");
            ++vertex_uses[static_cast<std::size_t>(l)];
        }
        std::set<int> uniq(v.lines.begin(), v.lines.end());
        if (uniq.size() != v.lines.size()) fail("vertex lists a line twice");
        switch (v.kind) {
            case VertexKind::zappatic:
                ++zappatic;
                if (static_cast<int>(v.lines.size()) != n)
                    fail("zappatic vertex must carry n lines");
                break;
            case VertexKind::four_line: {
                ++fourline;
                if (v.lines.size() != 4) fail("four-line vertex must carry 4 lines");
                auto s = v.lines;
                std::sort(s.begin(), s.end());
                if (s != v.lines) fail("four-line vertex lines must be locally ordered a<b<c<d");
                break;
            }
            case VertexKind::conic_endpoint:
                ++conic;
                if (v.lines.size() != 1) fail("conic endpoint must carry 1 line");
                break;
        }
    }
    if (zappatic != 2) fail("expected exactly 2 zappatic vertices");
    if (conic != 2) fail("expected exactly 2 conic endpoints");
    if (fourline != n) fail("expected exactly n four-line vertices");
    for (int l = 1; l <= 3 * n + 1; ++l)
        if (vertex_uses[static_cast<std::size_t>(l)] == 0)
            fail("line " + std::to_string(l) + " lies on no vertex");

    // two lines share at most one vertex
    std::set<std::pair<int, int>> seen;
    for (const auto& v : d.vertices)
        for (std::size_t i = 0; i < v.lines.size(); ++i)
            for (std::size_t j = i + 1; j < v.lines.size(); ++j) {
                auto p = std::minmax(v.lines[i], v.lines[j]);
                if (!seen.insert({p.first, p.second}).second)
                    fail("lines " + std::to_string(p.first) + "," + std::to_string(p.second) +
                         " share two vertices");
            }
}

// All unordered pairs of lines sharing no vertex, in lexicographic order.
inline std::vector<std::pair<int, int>> disjoint_line_pairs(const Degeneration& d) {
    const int m = d.line_count();
    std::set<std::pair<int, int>> sharing;
    for (const auto& v : d.vertices)
        for (std::size_t i = 0; i < v.lines.size(); ++i)
            for (std::size_t j = i + 1; j < v.lines.size(); ++j) {
                auto p = std::minmax(v.lines[i], v.lines[j]);
                sharing.insert({p.first, p.second});
            }
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            if (!sharing.count({a, b})) out.emplace_back(a, b);
    return out;
}

// line id -> its incident plane pair as numbers 1..2n+2 (first < second).
inline std::vector<std::array<int, 2>> transposition_map(const Degeneration& d) {
    std::vector<std::array<int, 2>> tmap(static_cast<std::size_t>(d.line_count()) + 1, {0, 0});
    for (const auto& l : d.lines) {
        int p = plane_number(l.planes[0], d.n);
        int q = plane_number(l.planes[1], d.n);
        if (p > q) std::swap(p, q);
        tmap[static_cast<std::size_t>(l.id)] = {p, q};
    }
    return tmap;
}

}  // namespace galcov
