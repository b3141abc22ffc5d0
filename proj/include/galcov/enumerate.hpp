// Todd-Coxeter coset enumeration.  Involutive presentations get one action
// column per generator (each its own inverse); raw presentations get a
// column pair per generator.  Fully deterministic: no randomized choices.
//
// Table layout, scans, and coincidence handling follow the standard
// deduction-stack formulation (Holt, Handbook of Computational Group Theory,
// ch. 5): cosets are 1-based, 0 marks an undefined entry, dead cosets are
// tracked through a union-find map whose survivor is the minimum id.
// Invariant between operations: the coincidence queue is empty and every
// defined entry points at a live coset.  Compaction renumbers ids and may
// only happen at the points in the driver loops that re-resolve their ids.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "galcov/presentation.hpp"
#include "galcov/word.hpp"

namespace galcov {

enum class Strategy { felsch, hlt_with_lookahead };

inline std::string to_string(Strategy s) {
    return s == Strategy::felsch ? "felsch" : "hlt_with_lookahead";
}

struct EnumerationConfig {
    std::uint64_t max_cosets = 0;  // peak live cosets; 0 = memory budget only
    Strategy strategy = Strategy::felsch;
    std::uint64_t memory_budget_bytes = 2ull << 30;
};

struct CosetTable {
    enum class Status { complete, overflow };

    Status status = Status::overflow;
    bool involutive = true;
    std::uint32_t ncols = 0;
    std::vector<Token> column_labels;   // generator (and sign, in raw mode) per column
    std::vector<std::uint32_t> inv;     // inverse column map
    std::uint64_t coset_count = 0;      // live cosets at completion / abort
    std::uint64_t peak_live = 0;
    std::uint64_t total_defined = 0;
    std::vector<std::uint32_t> table;   // row-major coset_count x ncols, 0-based; complete only

    std::uint32_t action(std::uint32_t coset, std::uint32_t col) const {
        return table[static_cast<std::size_t>(coset) * ncols + col];
    }

    std::uint32_t column_of(const Token& t) const {
        for (std::uint32_t c = 0; c < ncols; ++c) {
            const Token& l = column_labels[c];
            if (l.gen == t.gen && (involutive || l.exp == t.exp)) return c;
        }
        throw std::invalid_argument("generator not in table alphabet: " + to_string(t));
    }

    std::uint32_t trace(std::uint32_t coset, const Word& w) const {
        for (const Token& t : w) coset = action(coset, column_of(t));
        return coset;
    }

    // True iff w acts as the identity on every coset; over the trivial
    // subgroup this says w is a consequence of the relators.
    bool is_consequence(const Word& w) const {
        if (status != Status::complete) throw std::logic_error("table not complete");
        std::vector<std::uint32_t> cols;
        cols.reserve(w.size());
        for (const Token& t : w) cols.push_back(column_of(t));
        for (std::uint64_t c = 0; c < coset_count; ++c) {
            std::uint32_t x = static_cast<std::uint32_t>(c);
            for (std::uint32_t col : cols) x = action(x, col);
            if (x != c) return false;
        }
        return true;
    }

    // Permutation action of a word on the cosets (0-based images).
    std::vector<std::uint32_t> word_action(const Word& w) const {
        if (status != Status::complete) throw std::logic_error("table not complete");
        std::vector<std::uint32_t> out(coset_count);
        for (std::uint64_t c = 0; c < coset_count; ++c)
            out[c] = trace(static_cast<std::uint32_t>(c), w);
        return out;
    }

    // Post-completion check: every column is a permutation consistent with
    // its inverse column, and every relator fixes every coset.
    bool self_check(const std::vector<Word>& relators) const {
        if (status != Status::complete) return false;
        for (std::uint64_t c = 0; c < coset_count; ++c)
            for (std::uint32_t x = 0; x < ncols; ++x) {
                std::uint32_t d = action(static_cast<std::uint32_t>(c), x);
                if (d >= coset_count) return false;
                if (action(d, inv[x]) != c) return false;
            }
        for (const Word& r : relators)
            if (!is_consequence(r)) return false;
        return true;
    }
};

namespace detail {

struct CompiledPresentation {
    std::uint32_t ncols = 0;
    std::vector<Token> column_labels;
    std::vector<std::uint32_t> inv;
    std::vector<std::vector<std::uint32_t>> relators;  // cyclically reduced, nonempty
    bool involutive = true;

    std::uint32_t column_of(const Token& t) const {
        for (std::uint32_t c = 0; c < ncols; ++c) {
            const Token& l = column_labels[c];
            if (l.gen == t.gen && (involutive || l.exp == t.exp)) return c;
        }
        throw std::invalid_argument("word uses generator outside the alphabet: " +
                                    to_string(t));
    }

    std::vector<std::uint32_t> compile_word(const Word& w) const {
        std::vector<std::uint32_t> out;
        out.reserve(w.size());
        for (const Token& t : w) out.push_back(column_of(t));
        return out;
    }
};

inline CompiledPresentation compile(const Presentation& p) {
    CompiledPresentation cp;
    cp.involutive = p.involutive;
    if (p.involutive) {
        for (const Gen& g : p.alphabet) {
            cp.column_labels.push_back(Token{g, +1});
            cp.inv.push_back(static_cast<std::uint32_t>(cp.inv.size()));
        }
    } else {
        for (const Gen& g : p.alphabet) {
            auto base = static_cast<std::uint32_t>(cp.column_labels.size());
            cp.column_labels.push_back(Token{g, +1});
            cp.column_labels.push_back(Token{g, -1});
            cp.inv.push_back(base + 1);
            cp.inv.push_back(base);
        }
    }
    cp.ncols = static_cast<std::uint32_t>(cp.column_labels.size());
    for (const Word& r : p.relators) {
        Word cr = cyclically_reduced(r, p.involutive);
        if (cr.empty()) continue;
        cp.relators.push_back(cp.compile_word(cr));
    }
    return cp;
}

class Enumerator {
    enum class Flow { ok, need_space, overflow };

public:
    Enumerator(const CompiledPresentation& cp, const EnumerationConfig& cfg)
        : ncols_(cp.ncols), inv_(cp.inv), relators_(cp.relators) {
        felsch_ = cfg.strategy == Strategy::felsch;
        const std::uint64_t per_row = 4ull * (ncols_ + 1);
        std::uint64_t budget_rows = cfg.memory_budget_bytes / per_row;
        if (budget_rows < 64) budget_rows = 64;
        if (budget_rows > std::numeric_limits<std::uint32_t>::max() - 2)
            budget_rows = std::numeric_limits<std::uint32_t>::max() - 2;
        hard_rows_ = budget_rows;
        max_live_ = hard_rows_ - 1;
        if (cfg.max_cosets && cfg.max_cosets < max_live_) max_live_ = cfg.max_cosets;
        if (felsch_) build_scan_store();
    }

    // Runs the enumeration; returns true on completion, false on overflow.
    bool run(const std::vector<std::vector<std::uint32_t>>& subgroup_gens) {
        reserve_rows(std::min<std::uint64_t>(1024, hard_rows_ + 1));
        next_ = 2;  // coset 1 = the subgroup
        rep_[1] = 1;
        std::memset(tab_.data() + ncols_, 0, 4ull * ncols_);
        live_ = peak_live_ = total_defined_ = 1;

        // coset 1 is the minimum id, so it survives every merge; no
        // remapping concerns in this phase beyond retrying after compaction
        for (const auto& w : subgroup_gens) {
            while (true) {
                Flow f = scan_and_fill(1, w);
                drain();
                if (f == Flow::ok) break;
                if (f == Flow::overflow || !make_space()) return false;
            }
        }

        return felsch_ ? run_felsch() : run_hlt();
    }

    // Moves the (completed) table out, renumbered in breadth-first order.
    void extract(CosetTable& out) {
        standardize();
        out.coset_count = live_;
        out.table.assign(static_cast<std::size_t>(live_) * ncols_, 0);
        for (std::uint64_t c = 0; c < live_; ++c)
            for (std::uint32_t x = 0; x < ncols_; ++x)
                out.table[c * ncols_ + x] = at(static_cast<std::uint32_t>(c + 1), x) - 1;
    }

    std::uint64_t live() const { return live_; }
    std::uint64_t peak_live() const { return peak_live_; }
    std::uint64_t total_defined() const { return total_defined_; }

private:
    std::uint32_t ncols_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::vector<std::uint32_t>> relators_;
    bool felsch_ = true;

    std::uint64_t hard_rows_ = 0, max_live_ = 0;
    std::uint64_t rows_ = 0;  // allocated rows; usable ids are 1..rows_-1
    std::vector<std::uint32_t> tab_;
    std::vector<std::uint32_t> rep_;
    std::uint32_t next_ = 1;
    std::uint64_t live_ = 0, peak_live_ = 0, total_defined_ = 0;
    std::vector<std::uint64_t> deductions_;
    std::vector<std::uint32_t> coincq_;
    std::uint32_t cursor_ = 1;           // felsch: rows below are fully defined
    std::vector<std::uint32_t> remap_;   // old id -> new id of the last compaction

    // All cyclically distinct rotations of the relators bucketed by first
    // column: a new edge (a, x) -> b triggers scans of store_[x] at a and of
    // store_[inv x] at b.  Only built for the deduction-driven strategy.
    std::vector<std::vector<std::vector<std::uint32_t>>> store_;

    void build_scan_store() {
        store_.assign(ncols_, {});
        for (const auto& r : relators_) {
            std::vector<std::vector<std::uint32_t>> seen;
            for (std::size_t i = 0; i < r.size(); ++i) {
                std::vector<std::uint32_t> rot;
                rot.reserve(r.size());
                rot.insert(rot.end(), r.begin() + static_cast<std::ptrdiff_t>(i), r.end());
                rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(i));
                if (std::find(seen.begin(), seen.end(), rot) == seen.end()) {
                    seen.push_back(rot);
                    store_[rot[0]].push_back(rot);
                }
            }
        }
    }

    std::uint32_t& at(std::uint32_t coset, std::uint32_t col) {
        return tab_[static_cast<std::size_t>(coset) * ncols_ + col];
    }

    void reserve_rows(std::uint64_t rows) {
        if (rows > hard_rows_ + 1) rows = hard_rows_ + 1;
        if (rows <= rows_) return;
        tab_.resize(static_cast<std::size_t>(rows) * ncols_, 0);
        rep_.resize(static_cast<std::size_t>(rows), 0);
        rows_ = rows;
    }

    std::uint32_t rep(std::uint32_t x) {
        while (rep_[x] != x) {
            rep_[x] = rep_[rep_[x]];
            x = rep_[x];
        }
        return x;
    }

    bool live_coset(std::uint32_t x) const { return rep_[x] == x; }

    void push_deduction(std::uint32_t c, std::uint32_t x) {
        if (felsch_) deductions_.push_back((static_cast<std::uint64_t>(c) << 16) | x);
    }

    Flow space_for_definition() {
        if (live_ >= max_live_) return felsch_ ? Flow::overflow : Flow::need_space;
        if (next_ < rows_) return Flow::ok;
        if (rows_ < hard_rows_ + 1) {
            reserve_rows(std::min(rows_ * 2, hard_rows_ + 1));
            if (next_ < rows_) return Flow::ok;
        }
        return next_ - 1 > live_ ? Flow::need_space : Flow::overflow;
    }

    // Reclaims room between top-level steps.  In HLT a lookahead pass runs
    // first so coincidences can shrink the live set.  Returns false if no
    // room could be made (overflow).
    bool make_space() {
        if (!felsch_) lookahead();
        if (next_ - 1 > live_) compact();
        return live_ < max_live_ && next_ < rows_;
    }

    // Allocates a fresh coset as the image of (c, x).  The caller has
    // ensured space, so this cannot fail and never moves ids.
    std::uint32_t define(std::uint32_t c, std::uint32_t x) {
        std::uint32_t b = next_++;
        std::memset(&tab_[static_cast<std::size_t>(b) * ncols_], 0, 4ull * ncols_);
        rep_[b] = b;
        ++live_;
        ++total_defined_;
        if (live_ > peak_live_) peak_live_ = live_;
        at(c, x) = b;
        at(b, inv_[x]) = c;
        push_deduction(c, x);
        return b;
    }

    void merge(std::uint32_t a, std::uint32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        rep_[b] = a;
        --live_;
        coincq_.push_back(b);
    }

    void process_coincidences() {
        for (std::size_t qi = 0; qi < coincq_.size(); ++qi) {
            std::uint32_t g = coincq_[qi];
            for (std::uint32_t x = 0; x < ncols_; ++x) {
                std::uint32_t d = at(g, x);
                if (!d) continue;
                at(g, x) = 0;
                if (at(d, inv_[x]) == g) at(d, inv_[x]) = 0;
                std::uint32_t u = rep(g);
                std::uint32_t v = rep(d);
                if (std::uint32_t w = at(u, x)) {
                    merge(v, w);
                } else if (std::uint32_t w2 = at(v, inv_[x])) {
                    merge(u, w2);
                } else {
                    at(u, x) = v;
                    at(v, inv_[x]) = u;
                    push_deduction(u, x);
                }
            }
        }
        coincq_.clear();
    }

    // Scan-only pass of a relator rotation at a live coset: deduces on a gap
    // of one, merges on mismatch, otherwise leaves the table untouched.
    void scan(std::uint32_t a, const std::vector<std::uint32_t>& w) {
        const std::size_t n = w.size();
        std::uint32_t f = a;
        std::size_t i = 0;
        while (i < n) {
            std::uint32_t d = at(f, w[i]);
            if (!d) break;
            f = d;
            ++i;
        }
        if (i == n) {
            if (f != a) merge(f, a);
            return;
        }
        std::uint32_t b = a;
        std::size_t j = n;
        while (j > i) {
            std::uint32_t d = at(b, inv_[w[j - 1]]);
            if (!d) break;
            b = d;
            --j;
        }
        if (j == i) {
            merge(f, b);
        } else if (j == i + 1) {
            at(f, w[i]) = b;
            at(b, inv_[w[i]]) = f;
            push_deduction(f, w[i]);
        }
    }

    // HLT scan: fills gaps with fresh cosets until the relator closes.
    // Returns need_space when the table must be compacted first (the caller
    // re-resolves its ids and retries; partial fills are sound).
    Flow scan_and_fill(std::uint32_t a, const std::vector<std::uint32_t>& w) {
        const std::size_t n = w.size();
        std::uint32_t f = a;
        std::size_t i = 0;
        std::uint32_t b = a;
        std::size_t j = n;
        while (true) {
            while (i < n) {
                std::uint32_t d = at(f, w[i]);
                if (!d) break;
                f = d;
                ++i;
            }
            if (i == n) {
                if (f != a) merge(f, a);
                return Flow::ok;
            }
            while (j > i) {
                std::uint32_t d = at(b, inv_[w[j - 1]]);
                if (!d) break;
                b = d;
                --j;
            }
            if (j == i) {
                merge(f, b);
                return Flow::ok;
            }
            if (j == i + 1) {
                at(f, w[i]) = b;
                at(b, inv_[w[i]]) = f;
                push_deduction(f, w[i]);
                return Flow::ok;
            }
            Flow s = space_for_definition();
            if (s != Flow::ok) return s;
            f = define(f, w[i]);
            ++i;
        }
    }

    void drain() {
        while (true) {
            if (!coincq_.empty()) {
                process_coincidences();
                continue;
            }
            if (deductions_.empty()) break;
            std::uint64_t packed = deductions_.back();
            deductions_.pop_back();
            auto c = static_cast<std::uint32_t>(packed >> 16);
            auto x = static_cast<std::uint32_t>(packed & 0xffff);
            if (!live_coset(c)) continue;
            std::uint32_t d = at(c, x);
            if (!d) continue;
            for (const auto& rot : store_[x]) {
                scan(rep(c), rot);
                if (!coincq_.empty()) process_coincidences();
            }
            for (const auto& rot : store_[inv_[x]]) {
                scan(rep(d), rot);
                if (!coincq_.empty()) process_coincidences();
            }
        }
    }

    // Relator scan over all live cosets without definitions; the HLT
    // space-recovery pass.
    void lookahead() {
        for (std::uint32_t c = 1; c < next_; ++c) {
            if (!live_coset(c)) continue;
            for (const auto& r : relators_) {
                scan(c, r);
                if (!coincq_.empty()) process_coincidences();
                if (!live_coset(c)) break;
            }
        }
    }

    // Renumbers live cosets 1..live_ preserving order; queues must be empty.
    // remap_ afterwards maps every old id (dead ones through their class
    // survivor) to its new id.
    void compact() {
        if (next_ - 1 == live_) return;
        remap_.assign(next_, 0);
        std::uint32_t nid = 0;
        for (std::uint32_t c = 1; c < next_; ++c)
            if (live_coset(c)) remap_[c] = ++nid;
        for (std::uint32_t c = 1; c < next_; ++c)
            if (!live_coset(c)) remap_[c] = remap_[rep(c)];
        std::uint32_t cursor_old = cursor_;
        while (cursor_old < next_ && !live_coset(cursor_old)) ++cursor_old;
        for (std::uint32_t c = 1; c < next_; ++c) {
            if (!live_coset(c)) continue;
            std::uint32_t nc = remap_[c];
            for (std::uint32_t x = 0; x < ncols_; ++x) {
                std::uint32_t d = at(c, x);
                tab_[static_cast<std::size_t>(nc) * ncols_ + x] = d ? remap_[d] : 0;
            }
        }
        next_ = nid + 1;
        for (std::uint32_t c = 1; c < next_; ++c) rep_[c] = c;
        cursor_ = cursor_old < remap_.size() ? remap_[cursor_old] : next_;
        if (cursor_ == 0) cursor_ = next_;
        ++compactions_;
    }

    std::uint64_t compactions_ = 0;

    bool run_felsch() {
        drain();
        while (true) {
            // first live coset with an undefined column, lowest column first
            std::uint32_t c = 0, x = 0;
            for (; cursor_ < next_; ++cursor_) {
                if (!live_coset(cursor_)) continue;
                bool found = false;
                for (std::uint32_t col = 0; col < ncols_; ++col)
                    if (!at(cursor_, col)) {
                        c = cursor_;
                        x = col;
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (cursor_ >= next_) return true;  // table closed
            Flow s = space_for_definition();
            if (s == Flow::overflow) return false;
            if (s == Flow::need_space) {
                if (!make_space()) return false;
                continue;  // ids moved; re-locate via cursor_
            }
            define(c, x);
            drain();
        }
    }

    bool run_hlt() {
        std::uint32_t alpha = 1;
        while (alpha < next_) {
            if (!live_coset(alpha)) {
                ++alpha;
                continue;
            }
            bool dead = false;
            for (std::size_t ri = 0; ri < relators_.size();) {
                Flow f = scan_and_fill(alpha, relators_[ri]);
                if (!coincq_.empty()) process_coincidences();
                if (f == Flow::overflow) return false;
                if (f == Flow::need_space) {
                    std::uint64_t cc = compactions_;
                    if (!make_space()) return false;
                    alpha = compactions_ != cc ? remap_[alpha] : rep(alpha);
                    ri = 0;  // rescan this coset from the top (idempotent)
                    continue;
                }
                if (!live_coset(alpha)) {
                    dead = true;
                    break;
                }
                ++ri;
            }
            if (dead || !live_coset(alpha)) {
                ++alpha;
                continue;
            }
            for (std::uint32_t x = 0; x < ncols_ && live_coset(alpha); ++x) {
                if (at(alpha, x)) continue;
                Flow s = space_for_definition();
                if (s == Flow::overflow) return false;
                if (s == Flow::need_space) {
                    std::uint64_t cc = compactions_;
                    if (!make_space()) return false;
                    alpha = compactions_ != cc ? remap_[alpha] : rep(alpha);
                    x = static_cast<std::uint32_t>(-1);  // restart the row
                    continue;
                }
                define(alpha, x);
                if (!coincq_.empty()) process_coincidences();
            }
            ++alpha;
        }
        compact();
        return true;
    }

    // Breadth-first renumbering from coset 1; canonical for a completed
    // table, so both strategies produce identical standardized tables.
    void standardize() {
        compact();
        std::vector<std::uint32_t> order(next_, 0);  // new id (1-based) per old id
        std::vector<std::uint32_t> bfs;
        bfs.reserve(live_);
        bfs.push_back(1);
        order[1] = 1;
        std::uint32_t assigned = 1;
        for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
            std::uint32_t c = bfs[qi];
            for (std::uint32_t x = 0; x < ncols_; ++x) {
                std::uint32_t d = at(c, x);
                if (d && !order[d]) {
                    order[d] = ++assigned;
                    bfs.push_back(d);
                }
            }
        }
        std::vector<std::uint32_t> nt(static_cast<std::size_t>(next_) * ncols_, 0);
        for (std::uint32_t c = 1; c < next_; ++c)
            for (std::uint32_t x = 0; x < ncols_; ++x) {
                std::uint32_t d = at(c, x);
                nt[static_cast<std::size_t>(order[c]) * ncols_ + x] = d ? order[d] : 0;
            }
        std::copy(nt.begin(), nt.end(), tab_.begin());
    }
};

}  // namespace detail

// Enumerates the cosets of the subgroup generated by subgroup_gens.  On
// completion coset_count is the subgroup's index; overflow is a reported
// status, not an error.
inline CosetTable coset_enumerate(const Presentation& p,
                                  const std::vector<Word>& subgroup_gens,
                                  const EnumerationConfig& cfg) {
    if (p.relators.empty()) throw std::invalid_argument("presentation has no relators");
    detail::CompiledPresentation cp = detail::compile(p);
    if (cp.ncols > 0xffff) throw std::invalid_argument("alphabet too large");

    detail::Enumerator en(cp, cfg);
    std::vector<std::vector<std::uint32_t>> sg;
    sg.reserve(subgroup_gens.size());
    for (const Word& w : subgroup_gens)
        sg.push_back(cp.compile_word(reduced(w, p.involutive)));

    CosetTable out;
    out.involutive = cp.involutive;
    out.ncols = cp.ncols;
    out.column_labels = cp.column_labels;
    out.inv = cp.inv;
    bool done = en.run(sg);
    out.peak_live = en.peak_live();
    out.total_defined = en.total_defined();
    out.coset_count = en.live();
    if (done) {
        out.status = CosetTable::Status::complete;
        en.extract(out);
    } else {
        out.status = CosetTable::Status::overflow;
    }
    return out;
}

// Order of the group presented by p: coset count over the trivial subgroup,
// or no value if the enumeration overflows.
inline std::optional<std::uint64_t> group_order(const Presentation& p,
                                                const EnumerationConfig& cfg) {
    CosetTable t = coset_enumerate(p, {}, cfg);
    if (t.status != CosetTable::Status::complete) return std::nullopt;
    return t.coset_count;
}

}  // namespace galcov
