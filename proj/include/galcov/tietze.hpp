// Tietze simplification for involutive presentations: propagate defining
// relators (a generator occurring exactly once), rewrite relators against
// each other to shorten them, drop duplicates.  With a target set, exactly
// the complement generators are eliminated; the moves never change the
// presented group.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "galcov/presentation.hpp"
#include "galcov/word.hpp"

namespace galcov {

namespace detail {

// Canonical form of a cyclic involutive relator: the least rotation of the
// word or its reversal.  Used for duplicate detection.
inline Word cyclic_canonical(const Word& w) {
    if (w.empty()) return w;
    Word best;
    auto consider = [&](const Word& v) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            Word rot;
            rot.reserve(v.size());
            rot.insert(rot.end(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
            rot.insert(rot.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
            if (best.empty() || rot < best) best = rot;
        }
    };
    consider(w);
    Word rev(w.rbegin(), w.rend());
    consider(rev);
    return best;
}

}  // namespace detail

struct TietzeResult {
    Presentation presentation;
    bool reached_target = true;       // false iff a requested elimination is stuck
    std::vector<Gen> not_eliminated;  // requested eliminations with no defining relator
};

namespace detail {

class TietzeEngine {
public:
    TietzeEngine(const Presentation& p, const std::optional<std::vector<Gen>>& target)
        : alphabet_(p.alphabet) {
        if (!p.involutive)
            throw std::invalid_argument("tietze_simplify requires an involutive presentation");
        if (target) {
            keep_given_ = true;
            keep_.assign(target->begin(), target->end());
        }
        for (const Word& r : p.relators) relators_.push_back(cyclically_reduced(r, true));
        dedup();
    }

    TietzeResult run() {
        while (true) {
            rewrite_to_fixpoint();
            if (!eliminate_one()) break;
        }
        TietzeResult res;
        res.presentation.involutive = true;
        res.presentation.alphabet = alphabet_;
        std::sort(relators_.begin(), relators_.end(), [](const Word& a, const Word& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        res.presentation.relators = relators_;
        if (keep_given_) {
            for (const Gen& g : alphabet_)
                if (!kept(g)) res.not_eliminated.push_back(g);
            res.reached_target = res.not_eliminated.empty();
        }
        return res;
    }

private:
    std::vector<Gen> alphabet_;
    std::vector<Word> relators_;
    bool keep_given_ = false;
    std::vector<Gen> keep_;

    bool kept(const Gen& g) const {
        if (!keep_given_) return false;
        return std::find(keep_.begin(), keep_.end(), g) != keep_.end();
    }

    void dedup() {
        std::vector<Word> out;
        std::vector<Word> canon;
        for (const Word& r : relators_) {
            if (r.empty()) continue;
            Word c = cyclic_canonical(r);
            if (std::find(canon.begin(), canon.end(), c) == canon.end()) {
                canon.push_back(c);
                out.push_back(r);
            }
        }
        relators_ = std::move(out);
    }

    // One shortening attempt of s by the (cyclically read) relator r: any
    // majority segment of r or its reversal found inside cyclic s gets
    // replaced by the reversed minority remainder.
    static bool shorten_with(const Word& r, Word& s) {
        const std::size_t len = r.size();
        if (len < 2 || s.size() < len / 2 + 1) return false;
        const std::size_t h = len / 2 + 1;
        Word variants[2] = {r, Word(r.rbegin(), r.rend())};
        for (const Word& v : variants) {
            for (std::size_t k = 0; k < len; ++k) {
                // u = v[k..k+h), z = v[k+h..k) cyclically; u = reverse(z)
                auto tokat = [&](std::size_t i) { return v[(k + i) % len]; };
                // search u in cyclic s
                const std::size_t m = s.size();
                for (std::size_t p = 0; p < m; ++p) {
                    bool match = true;
                    for (std::size_t i = 0; i < h; ++i)
                        if (s[(p + i) % m] != tokat(i)) {
                            match = false;
                            break;
                        }
                    if (!match) continue;
                    Word replacement;
                    replacement.reserve(len - h);
                    for (std::size_t i = len; i > h; --i) replacement.push_back(tokat(i - 1));
                    Word rebuilt;
                    rebuilt.reserve(m - h + replacement.size());
                    rebuilt.insert(rebuilt.end(), replacement.begin(), replacement.end());
                    for (std::size_t i = h; i < m; ++i) rebuilt.push_back(s[(p + i) % m]);
                    s = cyclically_reduced(rebuilt, true);
                    return true;
                }
            }
        }
        return false;
    }

    void rewrite_to_fixpoint() {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::size_t> order(relators_.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return relators_[a].size() < relators_[b].size();
            });
            for (std::size_t oi : order) {
                const Word r = relators_[oi];
                if (r.empty()) continue;
                for (std::size_t sj = 0; sj < relators_.size(); ++sj) {
                    if (sj == oi) continue;
                    if (relators_[sj].size() < r.size()) continue;
                    while (shorten_with(r, relators_[sj])) changed = true;
                }
            }
            if (changed) dedup();
        }
    }

    // Picks the cheapest available elimination and applies it.  Returns
    // false when no eliminable generator has a defining relator.
    bool eliminate_one() {
        int best_ri = -1;
        std::size_t best_len = 0, best_occ = 0;
        Gen best_gen{};
        std::map<Gen, std::size_t> occ_total;
        for (const Word& r : relators_)
            for (const Token& t : r) ++occ_total[t.gen];

        for (const Gen& g : alphabet_) {
            if (kept(g)) continue;
            for (std::size_t ri = 0; ri < relators_.size(); ++ri) {
                std::size_t cnt = 0;
                for (const Token& t : relators_[ri])
                    if (t.gen == g) ++cnt;
                if (cnt != 1) continue;
                std::size_t len = relators_[ri].size();
                std::size_t occ = occ_total[g];
                bool better = best_ri < 0 || len < best_len ||
                              (len == best_len && occ < best_occ) ||
                              (len == best_len && occ == best_occ && g < best_gen);
                if (better) {
                    best_ri = static_cast<int>(ri);
                    best_len = len;
                    best_occ = occ;
                    best_gen = g;
                }
            }
        }
        if (best_ri < 0) return false;

        // solve the relator for the generator: rotate it to the front, the
        // rest reversed is the defining word
        Word rel = relators_[static_cast<std::size_t>(best_ri)];
        std::size_t pos = 0;
        while (rel[pos].gen != best_gen) ++pos;
        Word def;
        def.reserve(rel.size() - 1);
        for (std::size_t i = rel.size() + pos; i > pos + 1; --i)
            def.push_back(rel[(i - 1) % rel.size()]);

        relators_.erase(relators_.begin() + best_ri);
        for (Word& s : relators_) {
            Word out;
            out.reserve(s.size());
            for (const Token& t : s) {
                if (t.gen == best_gen)
                    out.insert(out.end(), def.begin(), def.end());
                else
                    out.push_back(t);
            }
            s = cyclically_reduced(out, true);
        }
        alphabet_.erase(std::remove(alphabet_.begin(), alphabet_.end(), best_gen),
                        alphabet_.end());
        dedup();
        return true;
    }
};

}  // namespace detail

inline TietzeResult tietze_simplify(const Presentation& p,
                                    const std::optional<std::vector<Gen>>& target) {
    detail::TietzeEngine eng(p, target);
    return eng.run();
}

}  // namespace galcov
