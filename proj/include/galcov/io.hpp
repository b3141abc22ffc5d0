// File formats: the presentation text format (gens/involutive header plus
// one relator per line), degeneration JSON, report JSON, coset-table JSON,
// and an exporter to a generic computational-algebra syntax.
#pragma once

#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "galcov/degeneration.hpp"
#include "galcov/enumerate.hpp"
#include "galcov/invariants.hpp"
#include "galcov/presentation.hpp"
#include "galcov/verify.hpp"
#include "galcov/word.hpp"

namespace galcov {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// presentation text format

inline std::string presentation_to_text(const Presentation& p) {
    std::string out = "gens:";
    for (const Gen& g : p.alphabet) out += " " + to_string(g);
    out += "\ninvolutive: ";
    out += p.involutive ? "true" : "false";
    out += '\n';
    for (const Word& r : p.relators) out += to_string(r) + '\n';
    return out;
}

inline Presentation presentation_from_text(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    bool have_gens = false, have_flag = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!have_gens) {
            if (line.rfind("gens:", 0) != 0)
                throw std::invalid_argument("presentation text must start with 'gens:'");
            for (const Token& t : parse_word(line.substr(5))) p.alphabet.push_back(t.gen);
            have_gens = true;
            continue;
        }
        if (!have_flag) {
            if (line.rfind("involutive:", 0) != 0)
                throw std::invalid_argument("expected 'involutive:' line");
            std::string v = line.substr(11);
            v.erase(0, v.find_first_not_of(" \t"));
            if (v == "true")
                p.involutive = true;
            else if (v == "false")
                p.involutive = false;
            else
                throw std::invalid_argument("involutive flag must be true or false");
            have_flag = true;
            continue;
        }
        Word w = parse_word(line);
        for (const Token& t : w) {
            if (p.involutive && t.exp != 1)
                throw std::invalid_argument("^-1 is only valid in raw (non-involutive) mode");
            if (!p.in_alphabet(t.gen))
                throw std::invalid_argument("relator uses undeclared generator " +
                                            to_string(t.gen));
        }
        p.relators.push_back(w);
    }
    if (!have_gens || !have_flag)
        throw std::invalid_argument("incomplete presentation text");
    return p;
}

// Exporter to a generic computational-algebra syntax (free group plus
// relator list), for cross-checking in third-party systems.
inline std::string presentation_to_algebra_script(const Presentation& p) {
    auto sym = [](const Gen& g) {
        return std::string(g.primed ? "yp" : "y") + std::to_string(g.line);
    };
    std::string out = "f := FreeGroup(";
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + sym(p.alphabet[i]) + "\"";
    }
    out += ");\n";
    for (std::size_t i = 0; i < p.alphabet.size(); ++i)
        out += sym(p.alphabet[i]) + " := f." + std::to_string(i + 1) + ";\n";
    out += "rels := [\n";
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        const Word& r = p.relators[ri];
        std::string w;
        if (r.empty()) w = "One(f)";
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) w += "*";
            w += sym(r[i].gen);
            if (r[i].exp < 0) w += "^-1";
        }
        out += "  " + w + (ri + 1 < p.relators.size() ? "," : "") + "\n";
    }
    out += "];\n";
    if (p.involutive) {
        out += "sq := Concatenation(List(GeneratorsOfGroup(f), x -> [x^2]));\n";
        out += "g := f / Concatenation(rels, sq);\n";
    } else {
        out += "g := f / rels;\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// degeneration JSON: {n, planes, lines:[{id, planes:[p,q]}],
//                     vertices:[{id, kind, lines:[...]}]}

inline ordered_json degeneration_to_json(const Degeneration& d) {
    ordered_json j;
    j["n"] = d.n;
    ordered_json planes = ordered_json::array();
    for (const auto& p : d.planes) planes.push_back(to_string(p));
    j["planes"] = planes;
    ordered_json lines = ordered_json::array();
    for (const auto& l : d.lines) {
        int p = plane_number(l.planes[0], d.n);
        int q = plane_number(l.planes[1], d.n);
        if (p > q) std::swap(p, q);
        lines.push_back(ordered_json{{"id", l.id}, {"planes", {p, q}}});
    }
    j["lines"] = lines;
    ordered_json verts = ordered_json::array();
    for (const auto& v : d.vertices)
        verts.push_back(ordered_json{
            {"id", v.id}, {"kind", to_string(v.kind)}, {"lines", v.lines}});
    j["vertices"] = verts;
    return j;
}

inline PlaneLabel plane_label_from_string(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'T' && s[0] != 'B'))
        throw std::invalid_argument("bad plane label: " + s);
    return PlaneLabel{s[0] == 'T' ? Side::top : Side::bottom, std::stoi(s.substr(1))};
}

inline Degeneration degeneration_from_json(const ordered_json& j) {
    Degeneration d;
    d.n = j.at("n").get<int>();
    for (const auto& p : j.at("planes")) d.planes.push_back(plane_label_from_string(p));
    // plane numbers in line records refer to the enumeration order
    auto label_of = [&](int num) -> PlaneLabel {
        if (num < 1 || num > d.plane_count())
            throw std::invalid_argument("plane number out of range");
        return d.planes[static_cast<std::size_t>(num) - 1];
    };
    for (const auto& l : j.at("lines")) {
        LineRecord rec;
        rec.id = l.at("id").get<int>();
        auto pq = l.at("planes");
        if (!pq.is_array() || pq.size() != 2)
            throw std::invalid_argument("line planes must be a pair");
        rec.planes = {label_of(pq[0].get<int>()), label_of(pq[1].get<int>())};
        d.lines.push_back(rec);
    }
    std::sort(d.lines.begin(), d.lines.end(),
              [](const LineRecord& a, const LineRecord& b) { return a.id < b.id; });
    for (const auto& v : j.at("vertices")) {
        VertexRecord rec;
        rec.id = v.at("id").get<int>();
        rec.kind = vertex_kind_from_string(v.at("kind").get<std::string>());
        for (const auto& l : v.at("lines")) rec.lines.push_back(l.get<int>());
        d.vertices.push_back(rec);
    }
    std::sort(d.vertices.begin(), d.vertices.end(),
              [](const VertexRecord& a, const VertexRecord& b) { return a.id < b.id; });
    validate(d);
    return d;
}

// ---------------------------------------------------------------------------
// report JSON

inline ordered_json verdict_to_json(const Verdict& v, bool with_timings = false) {
    ordered_json j;
    j["n"] = v.n;
    j["order"] = v.group_order ? v.group_order->str() : "unknown";
    j["image_full_symmetric"] = v.image_full_symmetric;
    j["verdict"] = to_string(v.simply_connected);
    j["cosets_defined_peak"] = v.cosets_defined_peak;
    j["wall_time_ms"] = with_timings ? v.wall_time_ms : 0;
    return j;
}

inline ordered_json invariants_to_json(const SingularityCensus& c, const ChernReport& r) {
    ordered_json j;
    j["n"] = c.n;
    j["m"] = std::to_string(c.m);
    j["N"] = std::to_string(c.N);
    j["p"] = std::to_string(c.p);
    j["q"] = std::to_string(c.q);
    j["c1_sq"] = r.c1_sq.str();
    j["c2"] = r.c2.str();
    j["tau"] = r.tau.str();
    j["general_type"] = r.general_type;
    j["tau_negative"] = r.tau < 0;
    return j;
}

// ---------------------------------------------------------------------------
// coset table JSON: header plus row-major action array

inline ordered_json coset_table_to_json(const CosetTable& t) {
    ordered_json j;
    ordered_json alpha = ordered_json::array();
    for (const Token& tk : t.column_labels) alpha.push_back(to_string(tk));
    j["alphabet"] = alpha;
    j["involutive"] = t.involutive;
    j["status"] = t.status == CosetTable::Status::complete ? "complete" : "overflow";
    j["coset_count"] = t.coset_count;
    j["peak_live"] = t.peak_live;
    j["total_defined"] = t.total_defined;
    if (t.status == CosetTable::Status::complete) {
        ordered_json rows = ordered_json::array();
        for (std::uint64_t c = 0; c < t.coset_count; ++c) {
            ordered_json row = ordered_json::array();
            for (std::uint32_t x = 0; x < t.ncols; ++x)
                row.push_back(t.action(static_cast<std::uint32_t>(c), x));
            rows.push_back(row);
        }
        j["table"] = rows;
    }
    return j;
}

inline CosetTable coset_table_from_json(const ordered_json& j) {
    CosetTable t;
    t.involutive = j.at("involutive").get<bool>();
    for (const auto& s : j.at("alphabet"))
        t.column_labels.push_back(parse_token(s.get<std::string>()));
    t.ncols = static_cast<std::uint32_t>(t.column_labels.size());
    if (t.involutive) {
        for (std::uint32_t c = 0; c < t.ncols; ++c) t.inv.push_back(c);
    } else {
        // raw tables pair +1/-1 columns for each generator
        for (std::uint32_t c = 0; c < t.ncols; ++c)
            t.inv.push_back(c % 2 == 0 ? c + 1 : c - 1);
    }
    t.status = j.at("status").get<std::string>() == "complete"
                   ? CosetTable::Status::complete
                   : CosetTable::Status::overflow;
    t.coset_count = j.at("coset_count").get<std::uint64_t>();
    t.peak_live = j.at("peak_live").get<std::uint64_t>();
    t.total_defined = j.at("total_defined").get<std::uint64_t>();
    if (t.status == CosetTable::Status::complete) {
        for (const auto& row : j.at("table"))
            for (const auto& v : row)
                t.table.push_back(v.get<std::uint32_t>());
        if (t.table.size() != t.coset_count * t.ncols)
            throw std::invalid_argument("coset table shape mismatch");
    }
    return t;
}

}  // namespace galcov
