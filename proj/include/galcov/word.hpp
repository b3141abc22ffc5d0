// Free-group word calculus over line generators (optionally primed), with
// the involutive reduction used throughout: in involutive mode every
// generator squares to the identity, so inverses are reversals and adjacent
// equal letters cancel.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace galcov {

// A single generator: line id plus primed flag (the paper's j vs j').
struct Gen {
    int line = 0;
    bool primed = false;

    friend auto operator<=>(const Gen&, const Gen&) = default;
};

// One letter of a word. exp is +1 or -1; involutive words keep exp == +1.
struct Token {
    Gen gen;
    int exp = +1;

    friend auto operator<=>(const Token&, const Token&) = default;
};

using Word = std::vector<Token>;

inline Token tok(int line, bool primed = false, int exp = +1) {
    return Token{Gen{line, primed}, exp};
}

inline Word word_of(Gen g) { return Word{Token{g, +1}}; }

inline Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Inverse of a word: reversal with flipped exponents. In involutive mode the
// exponents stay +1 (every letter is its own inverse).
inline Word inverse(const Word& w, bool involutive) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(Token{it->gen, involutive ? +1 : -it->exp});
    return out;
}

inline bool cancels(const Token& a, const Token& b, bool involutive) {
    if (a.gen != b.gen) return false;
    return involutive ? true : a.exp == -b.exp;
}

// Free reduction; idempotent and length-nonincreasing.
inline Word reduced(const Word& w, bool involutive) {
    Word out;
    out.reserve(w.size());
    for (const Token& t : w) {
        if (!out.empty() && cancels(out.back(), t, involutive))
            out.pop_back();
        else
            out.push_back(t);
    }
    return out;
}

// Cyclic reduction: strip cancelling first/last letters. Valid for relators.
inline Word cyclically_reduced(const Word& w, bool involutive) {
    Word out = reduced(w, involutive);
    while (out.size() >= 2 && cancels(out.front(), out.back(), involutive)) {
        out.erase(out.begin());
        out.pop_back();
    }
    return out;
}

// x y x y^-1 x^-1 y^-1, i.e. the triple relation x y x = y x y.  For
// involutive single-letter arguments this is (xy)^3; braid(x, x) reduces to
// the empty word (degenerate).
inline Word braid_relator(const Word& x, const Word& y, bool involutive) {
    return reduced(concat({x, y, x, inverse(y, involutive), inverse(x, involutive),
                           inverse(y, involutive)}),
                   involutive);
}

// x y x^-1 y^-1; involutive single-letter case is (xy)^2, comm(x, x) is empty.
inline Word commutator_relator(const Word& x, const Word& y, bool involutive) {
    return reduced(concat({x, y, inverse(x, involutive), inverse(y, involutive)}),
                   involutive);
}

// Equality u = v normalized to the relator u v^-1.
inline Word equality_relator(const Word& u, const Word& v, bool involutive) {
    return reduced(concat({u, inverse(v, involutive)}), involutive);
}

inline std::string to_string(const Gen& g) {
    std::string s = std::to_string(g.line);
    if (g.primed) s += '\'';
    return s;
}

inline std::string to_string(const Token& t) {
    std::string s = to_string(t.gen);
    if (t.exp < 0) s += "^-1";
    return s;
}

inline std::string to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += to_string(w[i]);
    }
    return s;
}

// Parses a token of the form "7", "7'", "7^-1", "7'^-1".
inline Token parse_token(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos]))))
        ++pos;
    if (pos == 0) throw std::invalid_argument("bad generator token: " + text);
    Token t;
    t.gen.line = std::stoi(text.substr(0, pos));
    if (pos < text.size() && text[pos] == '\'') {
        t.gen.primed = true;
        ++pos;
    }
    if (pos < text.size()) {
        if (text.substr(pos) != "^-1")
            throw std::invalid_argument("bad generator token: " + text);
        t.exp = -1;
        pos = text.size();
    }
    return t;
}

inline Word parse_word(const std::string& line) {
    Word w;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        w.push_back(parse_token(line.substr(i, j - i)));
        i = j;
    }
    return w;
}

}  // namespace galcov
