#include "radixlex/minimal_words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace radixlex {

namespace {

Word subword(const Word& w, std::size_t begin, std::size_t end) {
    Word r;
    r.letters.assign(w.letters.begin() + begin, w.letters.begin() + end);
    return r;
}

}  // namespace

SwapCase swap_trichotomy(const Word& x, const Word& u, const Word& y, const Word& v,
                         const Word& z) {
    (void)x;
    (void)z;
    if (u.size() != v.size())
        throw std::invalid_argument("swap_trichotomy requires |u| = |v|");
    auto cmp = radix_compare(concat(u, y), concat(y, v));
    if (cmp == std::strong_ordering::less) return SwapCase::FirstSmaller;
    if (cmp == std::strong_ordering::greater) return SwapCase::ThirdSmaller;
    return SwapCase::AllEqual;
}

Word Factorization::reassemble() const {
    Word w;
    for (const auto& b : blocks) {
        w.letters.insert(w.letters.end(), b.path.letters.begin(), b.path.letters.end());
        for (std::uint64_t i = 0; i < b.exponent; ++i)
            w.letters.insert(w.letters.end(), b.cycle.letters.begin(), b.cycle.letters.end());
    }
    return w;
}

Factorization factorize(const Dfa& a, const Word& w) {
    require_word(a.alphabet, w);
    Factorization f;
    State q = a.initial;
    std::size_t pos = 0;
    while (pos < w.size()) {
        // Shortest prefix of the rest whose trace from q revisits a state.
        std::unordered_map<State, std::size_t> first_at;
        first_at[q] = 0;
        State cur = q;
        std::size_t repeat_first = static_cast<std::size_t>(-1);
        std::size_t prefix_len = 0;
        for (std::size_t i = pos; i < w.size(); ++i) {
            cur = a.step(cur, w[i]);
            auto it = first_at.find(cur);
            if (it != first_at.end()) {
                repeat_first = it->second;
                prefix_len = i - pos + 1;
                break;
            }
            first_at[cur] = i - pos + 1;
        }
        if (repeat_first == static_cast<std::size_t>(-1)) {
            // All states distinct: final simple-path block.
            f.blocks.push_back({subword(w, pos, w.size()), Word{}, 1});
            break;
        }
        Word u = subword(w, pos, pos + repeat_first);
        Word v = subword(w, pos + repeat_first, pos + prefix_len);
        pos += prefix_len;
        q = cur;
        if (!f.blocks.empty() && u.empty() && !v.empty() && f.blocks.back().cycle == v)
            f.blocks.back().exponent++;
        else
            f.blocks.push_back({std::move(u), std::move(v), 1});
    }
    return f;
}

std::optional<Word> lasso_word_of_length(const LassoTriple& l, std::size_t len) {
    const std::size_t base = l.x.size() + l.z.size();
    if (l.y.empty()) {
        if (len != base) return std::nullopt;
        return concat(l.x, l.z);
    }
    if (len < base || (len - base) % l.y.size() != 0) return std::nullopt;
    return concat(l.x, repeated(l.y, (len - base) / l.y.size()), l.z);
}

bool lasso_contains(const LassoTriple& l, const Word& w) {
    auto lw = lasso_word_of_length(l, w.size());
    return lw && *lw == w;
}

PumpDecomposition extract_pump(const Dfa& a0, const Word& w) {
    Dfa a = pad_states(a0, 3);
    const std::uint64_t n = a.num_states;
    Factorization f = factorize(a, w);

    std::set<std::size_t> cycle_lengths;
    for (const auto& b : f.blocks)
        if (!b.cycle.empty() && !cycle_lengths.insert(b.cycle.size()).second)
            throw std::invalid_argument(
                "duplicate cycle lengths in factorization: not a smallest word");
    std::vector<std::size_t> big;
    for (std::size_t j = 0; j < f.blocks.size(); ++j)
        if (f.blocks[j].exponent > n) big.push_back(j);
    if (big.size() > 1)
        throw std::invalid_argument(
            "two oversized exponents in factorization: not a smallest word");

    if (big.empty()) return {{w, Word{}, Word{}}, 0};

    const std::size_t j = big[0];
    Word x, z;
    for (std::size_t i = 0; i < j; ++i) {
        x = concat(x, f.blocks[i].path);
        for (std::uint64_t e = 0; e < f.blocks[i].exponent; ++e) x = concat(x, f.blocks[i].cycle);
    }
    x = concat(x, f.blocks[j].path);
    for (std::size_t i = j + 1; i < f.blocks.size(); ++i) {
        z = concat(z, f.blocks[i].path);
        for (std::uint64_t e = 0; e < f.blocks[i].exponent; ++e) z = concat(z, f.blocks[i].cycle);
    }
    return {{std::move(x), f.blocks[j].cycle, std::move(z)}, f.blocks[j].exponent};
}

namespace {

std::vector<State> cycle_state_set(const Dfa& a, const LassoTriple& l) {
    State p = a.run(a.initial, l.x);
    if (a.run(p, l.y) != p)
        throw std::invalid_argument("lasso cycle condition violated");
    std::vector<State> states = trace(a, p, l.y);
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return states;
}

bool sets_equal_or_disjoint(const std::vector<State>& u, const std::vector<State>& v) {
    if (u == v) return true;
    std::vector<State> inter;
    std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(inter));
    return inter.empty();
}

}  // namespace

bool are_cycle_disjoint(const Dfa& a, const LassoTriple& s, const LassoTriple& t) {
    return sets_equal_or_disjoint(cycle_state_set(a, s), cycle_state_set(a, t));
}

OverlapResolution resolve_overlap(const Dfa& a, const LassoTriple& s, const LassoTriple& t) {
    if (s.y.empty() || t.y.empty())
        throw std::invalid_argument("resolve_overlap requires nonempty cycles");
    std::vector<State> set_s = cycle_state_set(a, s);
    std::vector<State> set_t = cycle_state_set(a, t);
    if (sets_equal_or_disjoint(set_s, set_t))
        throw std::invalid_argument("triples are cycle-disjoint");

    std::vector<State> shared;
    std::set_intersection(set_s.begin(), set_s.end(), set_t.begin(), set_t.end(),
                          std::back_inserter(shared));
    const State meet = shared.front();

    auto rotation_at = [&](const LassoTriple& l) {
        State p = a.run(a.initial, l.x);
        std::vector<State> tr = trace(a, p, l.y);
        std::size_t i = 0;
        while (tr[i] != meet) ++i;
        return concat(subword(l.y, i, l.y.size()), subword(l.y, 0, i));
    };
    Word pow_s = repeated(rotation_at(s), t.y.size());
    Word pow_t = repeated(rotation_at(t), s.y.size());
    auto cmp = radix_compare(pow_s, pow_t);
    if (cmp == std::strong_ordering::equal)
        throw std::logic_error("equal cycle powers for overlapping lassos");

    // The side whose rotated power is larger contributes only bounded words.
    const int loser = cmp == std::strong_ordering::less ? 1 : 0;
    const LassoTriple& l = loser == 0 ? s : t;
    const std::uint64_t n = a.num_states;
    const std::uint64_t bound = n * n * n + n * n;

    OverlapResolution res;
    res.truncated = loser;
    for (std::uint64_t len = l.x.size() + l.z.size(); len <= bound; len += l.y.size())
        res.replacements.push_back({*lasso_word_of_length(l, len), Word{}, Word{}});
    return res;
}

namespace {

struct CycleGroup {
    Word word;                   // cycle label
    std::vector<State> states;   // sorted state set
    std::vector<State> anchors;  // start states of this cycle
    bool dead = false;
};

// All simple cycles (distinct interior states) of length <= n reachable from
// the initial state, grouped by (label, state set).
std::vector<CycleGroup> enumerate_cycle_groups(const Dfa& a, const std::vector<bool>& useful) {
    const std::size_t k = a.alphabet.size();
    std::map<std::pair<Word, std::vector<State>>, std::vector<State>> groups;

    std::vector<bool> on_path(a.num_states, false);
    Word label;
    std::vector<State> path;

    for (State p = 0; p < a.num_states; ++p) {
        if (!useful[p]) continue;
        // DFS over simple paths from p; closing edges back to p yield cycles.
        struct Frame {
            State state;
            Letter next;
        };
        std::vector<Frame> stack{{p, 0}};
        on_path[p] = true;
        path = {p};
        label.letters.clear();
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next == k) {
                on_path[f.state] = false;
                stack.pop_back();
                path.pop_back();
                if (!label.letters.empty()) label.letters.pop_back();
                continue;
            }
            Letter c = f.next++;
            State t = a.step(f.state, c);
            if (t == p) {
                label.push_back(c);
                std::vector<State> set = path;
                std::sort(set.begin(), set.end());
                groups[{label, set}].push_back(p);
                label.letters.pop_back();
            } else if (!on_path[t] && useful[t] && path.size() < a.num_states) {
                label.push_back(c);
                on_path[t] = true;
                path.push_back(t);
                stack.push_back({t, 0});
            }
        }
        on_path[p] = false;
    }

    std::vector<CycleGroup> out;
    out.reserve(groups.size());
    for (auto& [key, anchors] : groups) {
        std::sort(anchors.begin(), anchors.end());
        anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
        out.push_back({key.first, key.second, std::move(anchors), false});
    }
    return out;
}

// Rotation of the group's cycle label starting at `meet`.
Word group_rotation(const Dfa& a, const CycleGroup& g, State meet) {
    State p = g.anchors.front();
    std::vector<State> tr = trace(a, p, g.word);
    std::size_t i = 0;
    while (tr[i] != meet) ++i;
    return concat(subword(g.word, i, g.word.size()), subword(g.word, 0, i));
}

}  // namespace

TupleCover simplify_tuples(const Dfa& input, std::size_t max_tuples) {
    Dfa a = pad_states(input, 3);
    const std::uint64_t n = a.num_states;
    const std::size_t seed_bound = static_cast<std::size_t>(n * n * n + n * n);
    const std::size_t xz_bound = static_cast<std::size_t>(n * n * n);
    const std::size_t k = a.alphabet.size();

    TupleCover cover;
    cover.alphabet = a.alphabet;
    cover.source_n = a.num_states;

    // Completion-table columns, iterated until their eventual cycle is known:
    // the per-length minima inherit that period, which bounds the harvest
    // window at the end of this function.
    std::vector<std::vector<bool>> alive;
    std::size_t col_entry = 0, col_period = 1;
    {
        std::map<std::vector<bool>, std::size_t> seen;
        std::vector<bool> col(a.num_states, false);
        for (State q = 0; q < a.num_states; ++q) col[q] = a.accepting[q];
        while (true) {
            auto it = seen.find(col);
            if (it != seen.end()) {
                col_entry = it->second;
                col_period = alive.size() - it->second;
                break;
            }
            seen.emplace(col, alive.size());
            alive.push_back(col);
            std::vector<bool> next(a.num_states, false);
            for (State q = 0; q < a.num_states; ++q)
                for (std::size_t c = 0; c < k && !next[q]; ++c)
                    if (col[a.step(q, static_cast<Letter>(c))]) next[q] = true;
            col = std::move(next);
            if (alive.size() > 300000)
                throw std::runtime_error("completion table period too large");
        }
    }
    const std::size_t harvest_end =
        seed_bound + col_entry + (3 * a.num_states + 1) * col_period + 1;
    while (alive.size() <= harvest_end) {
        const auto& prev = alive.back();
        std::vector<bool> next(a.num_states, false);
        for (State q = 0; q < a.num_states; ++q)
            for (std::size_t c = 0; c < k && !next[q]; ++c)
                if (prev[a.step(q, static_cast<Letter>(c))]) next[q] = true;
        alive.push_back(std::move(next));
    }
    auto least_word_of_length = [&](std::size_t len) -> std::optional<Word> {
        if (!alive[len][a.initial]) return std::nullopt;
        Word w;
        State q = a.initial;
        for (std::size_t r = len; r > 0; --r)
            for (Letter c = 0; c < k; ++c)
                if (alive[r - 1][a.step(q, c)]) {
                    w.push_back(c);
                    q = a.step(q, c);
                    break;
                }
        return w;
    };

    // Word triples: the least accepted word of every length up to n^3+n^2.
    // These absorb all bounded-length replacements the eliminations would
    // otherwise add (each replacement word is accepted, so the per-length
    // minimum is radix-smaller or equal).
    for (std::size_t len = 0; len <= seed_bound; ++len)
        if (auto w = least_word_of_length(len))
            cover.triples.push_back({std::move(*w), Word{}, Word{}});

    // Candidate cycles; a state is useful when it can appear on an accepting
    // path at all.
    std::vector<bool> reach(a.num_states, false);
    {
        std::vector<State> queue{a.initial};
        reach[a.initial] = true;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (std::size_t c = 0; c < k; ++c) {
                State t = a.step(queue[i], static_cast<Letter>(c));
                if (!reach[t]) {
                    reach[t] = true;
                    queue.push_back(t);
                }
            }
    }
    std::vector<bool> coreach(a.num_states, false);
    for (State q = 0; q < a.num_states; ++q) {
        bool yes = false;
        for (std::size_t r = 0; r < alive.size() && !yes; ++r) yes = alive[r][q];
        coreach[q] = yes;
    }
    std::vector<bool> useful(a.num_states, false);
    for (State q = 0; q < a.num_states; ++q) useful[q] = reach[q] && coreach[q];

    std::vector<CycleGroup> groups = enumerate_cycle_groups(a, useful);

    // Overlap elimination: for every pair of cycles whose state sets are
    // neither equal nor disjoint, the side with the radix-larger rotated
    // power only contributes bounded smallest words (already covered by the
    // per-length minima above) and is dropped.
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
            if (sets_equal_or_disjoint(groups[i].states, groups[j].states)) continue;
            std::vector<State> shared;
            std::set_intersection(groups[i].states.begin(), groups[i].states.end(),
                                  groups[j].states.begin(), groups[j].states.end(),
                                  std::back_inserter(shared));
            State meet = shared.front();
            Word pow_i = repeated(group_rotation(a, groups[i], meet), groups[j].word.size());
            Word pow_j = repeated(group_rotation(a, groups[j], meet), groups[i].word.size());
            auto cmp = radix_compare(pow_i, pow_j);
            if (cmp == std::strong_ordering::equal)
                throw std::logic_error("equal cycle powers for overlapping cycles");
            (cmp == std::strong_ordering::less ? groups[j] : groups[i]).dead = true;
        }

    // Anchors per surviving cycle label.
    std::map<Word, std::vector<State>> anchors_by_label;
    for (const auto& g : groups) {
        if (g.dead) continue;
        auto& v = anchors_by_label[g.word];
        v.insert(v.end(), g.anchors.begin(), g.anchors.end());
    }

    // Per (|xz|, label) class: the radix-least accepted word of length m whose
    // run visits an anchor. Classes that share (|xz|, |label|) collapse to the
    // tuple with the least x.y.
    std::map<std::pair<std::size_t, std::size_t>, std::pair<Word, LassoTriple>> classes;
    for (auto& [label, anchors0] : anchors_by_label) {
        std::vector<State> anchors = anchors0;
        std::sort(anchors.begin(), anchors.end());
        anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
        std::vector<bool> is_anchor(a.num_states, false);
        for (State p : anchors) is_anchor[p] = true;

        // Flag-product automaton: (state, anchor seen on the prefix).
        const std::size_t m2 = a.num_states * 2;
        auto idx = [&](State q, bool flag) { return q * 2 + (flag ? 1 : 0); };
        std::vector<std::vector<bool>> fl(xz_bound + 1, std::vector<bool>(m2, false));
        for (State q = 0; q < a.num_states; ++q) fl[0][idx(q, true)] = a.accepting[q];
        for (std::size_t r = 1; r <= xz_bound; ++r)
            for (State q = 0; q < a.num_states; ++q)
                for (int f = 0; f < 2; ++f) {
                    bool v = false;
                    for (std::size_t c = 0; c < k && !v; ++c) {
                        State t = a.step(q, static_cast<Letter>(c));
                        bool nf = f == 1 || is_anchor[t];
                        v = fl[r - 1][idx(t, nf)];
                    }
                    fl[r][idx(q, f != 0)] = v;
                }

        const bool init_flag = is_anchor[a.initial];
        for (std::size_t m = 0; m <= xz_bound; ++m) {
            if (!fl[m][idx(a.initial, init_flag)]) continue;
            Word w;
            State q = a.initial;
            bool flag = init_flag;
            for (std::size_t r = m; r > 0; --r)
                for (Letter c = 0; c < k; ++c) {
                    State t = a.step(q, c);
                    bool nf = flag || is_anchor[t];
                    if (fl[r - 1][idx(t, nf)]) {
                        w.push_back(c);
                        q = t;
                        flag = nf;
                        break;
                    }
                }
            // Split choice: least x.y.z at one repetition, ties to the
            // shortest x.
            std::optional<std::size_t> best_split;
            Word best_word;
            State s = a.initial;
            for (std::size_t split = 0; split <= m; ++split) {
                if (split > 0) s = a.step(s, w[split - 1]);
                if (!is_anchor[s]) continue;
                Word cand = concat(subword(w, 0, split), label, subword(w, split, m));
                if (!best_split || radix_compare(cand, best_word) == std::strong_ordering::less) {
                    best_split = split;
                    best_word = std::move(cand);
                }
            }
            LassoTriple triple{subword(w, 0, *best_split), label, subword(w, *best_split, m)};
            auto key = std::make_pair(m, label.size());
            Word xy = concat(triple.x, triple.y);
            auto it = classes.find(key);
            if (it == classes.end() ||
                radix_compare(xy, it->second.first) == std::strong_ordering::less)
                classes[key] = {std::move(xy), std::move(triple)};
        }
    }

    for (auto& [key, entry] : classes) cover.triples.push_back(std::move(entry.second));

    // Repair pass: the class representatives above follow the elimination
    // rules' own comparisons, which can prefer a lasso whose pumped words are
    // not the per-length minima (the comparisons are not aligned across
    // repetitions). Harvest the pump decomposition of every per-length
    // minimum across one full stabilized window; beyond it the minima repeat
    // their pump structure, so the harvested triples cover all longer lengths.
    {
        std::set<LassoTriple> present(cover.triples.begin(), cover.triples.end());
        for (std::size_t len = seed_bound + 1; len <= harvest_end; ++len) {
            auto v = least_word_of_length(len);
            if (!v) continue;
            bool covered = false;
            for (const auto& t : cover.triples)
                if (lasso_contains(t, *v)) {
                    covered = true;
                    break;
                }
            if (covered) continue;
            PumpDecomposition pump = extract_pump(a, *v);
            if (pump.triple.y.empty())
                throw std::logic_error("unpumpable minimum beyond the plain-word range");
            if (present.insert(pump.triple).second) cover.triples.push_back(pump.triple);
        }
    }

    if (cover.triples.size() > max_tuples)
        throw std::runtime_error("tuple cover exceeds the configured cap");
    return cover;
}

namespace {

// Per-lasso activity. Given the input length (exact below the counter
// bound, modulo the cycle period above it), the set of pattern positions
// compatible with the input prefix collapses to a single descriptor:
//   word      the prefix matches the single word x z (empty-cycle lassos),
//   x-prefix  the prefix is a proper prefix of x,
//   periodic  the prefix equals x followed by the cycle stream; this covers
//             the anchor, the in-cycle positions and the periodic prefix of z,
//   z-tail t  the prefix equals x y^e z[0..t) for the unique viable t beyond
//             the periodic prefix of z.
// Dead lassos are dropped from the state. Two descriptors cannot be live at
// once: matching both would force z to extend its periodic prefix.
constexpr std::uint32_t kWordCode = 0;
constexpr std::uint32_t kXPrefixCode = 1;
constexpr std::uint32_t kPeriodicCode = 2;
constexpr std::uint32_t kZTailBase = 3;  // kZTailBase + t

struct CounterView {
    std::uint64_t exact_bound, period;
    bool exact(std::uint32_t c) const { return c <= exact_bound; }
    // (len - off) mod m for the length encoded by c; m must divide period.
    std::uint64_t shifted_mod(std::uint32_t c, std::uint64_t off, std::uint64_t m) const {
        std::uint64_t rm = exact(c) ? c % m : (c - (exact_bound + 1)) % m;
        return (rm + m - off % m) % m;
    }
};

struct LassoShape {
    const LassoTriple* l;
    std::uint32_t xlen, ylen, zlen;
    std::uint32_t zy_match;  // longest prefix of z matching the cycle stream

    explicit LassoShape(const LassoTriple& t)
        : l(&t),
          xlen(static_cast<std::uint32_t>(t.x.size())),
          ylen(static_cast<std::uint32_t>(t.y.size())),
          zlen(static_cast<std::uint32_t>(t.z.size())),
          zy_match(0) {
        if (ylen)
            while (zy_match < zlen && t.z[zy_match] == t.y[zy_match % ylen]) ++zy_match;
    }

    std::uint32_t initial_code() const {
        if (ylen == 0) return kWordCode;
        return xlen ? kXPrefixCode : kPeriodicCode;
    }

    Letter word_only_letter(std::uint64_t pos) const {
        return pos < xlen ? l->x[pos] : l->z[pos - xlen];
    }

    // Successor descriptors when reading `a` at the length encoded by c.
    int advance(std::uint32_t code, std::uint32_t c, Letter a, const CounterView& cv,
                std::uint32_t out[2]) const {
        int cnt = 0;
        if (ylen == 0) {
            if (cv.exact(c) && c < xlen + zlen && word_only_letter(c) == a)
                out[cnt++] = kWordCode;
            return cnt;
        }
        if (code == kXPrefixCode) {
            if (l->x[c] == a) out[cnt++] = (c + 1 == xlen) ? kPeriodicCode : kXPrefixCode;
            return cnt;
        }
        if (code == kPeriodicCode) {
            if (l->y[cv.shifted_mod(c, xlen, ylen)] == a) out[cnt++] = kPeriodicCode;
            if (zy_match < zlen && l->z[zy_match] == a) {
                bool aligned = cv.exact(c)
                                   ? c >= xlen + zy_match && (c - xlen - zy_match) % ylen == 0
                                   : cv.shifted_mod(c, xlen + zy_match, ylen) == 0;
                if (aligned) out[cnt++] = kZTailBase + zy_match + 1;
            }
            return cnt;
        }
        std::uint32_t t = code - kZTailBase;
        if (t < zlen && l->z[t] == a) out[cnt++] = kZTailBase + t + 1;
        return cnt;
    }

    // Does the live descriptor put a word of exactly this length in the lasso?
    bool member_at(std::uint32_t code, std::uint64_t len) const {
        if (ylen == 0) return code == kWordCode && len == xlen + zlen;
        if (code == kPeriodicCode)
            return zy_match == zlen && len >= xlen + zlen && (len - xlen - zlen) % ylen == 0;
        if (code >= kZTailBase) return code - kZTailBase == zlen;
        return false;
    }

    // Letter at `pos` of the unique word of length `len` (which must exist).
    Letter word_letter(std::size_t len, std::size_t pos) const {
        if (pos < xlen) return l->x[pos];
        std::size_t reps = ylen == 0 ? 0 : (len - xlen - zlen) / ylen;
        if (pos < xlen + reps * ylen) return l->y[(pos - xlen) % ylen];
        return l->z[pos - xlen - reps * ylen];
    }

    bool has_word_of_length(std::size_t len) const {
        std::size_t base = xlen + zlen;
        if (ylen == 0) return len == base;
        return len >= base && (len - base) % ylen == 0;
    }
};

std::uint64_t lcm2(std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = a;
    std::uint64_t h = b;
    while (h) {
        std::uint64_t t = g % h;
        g = h;
        h = t;
    }
    return a / g * b;
}

}  // namespace

Dfa build_cover_dfa(const TupleCover& cover) {
    const std::size_t k = cover.alphabet.size();
    const std::uint64_t n = cover.source_n;
    const std::uint64_t exact_bound = n * n * n + n * n;

    std::vector<LassoShape> shapes;
    shapes.reserve(cover.triples.size());
    std::uint64_t period = 1;
    for (const auto& t : cover.triples) {
        shapes.emplace_back(t);
        if (!t.y.empty()) period = lcm2(period, t.y.size());
    }
    const CounterView cv{exact_bound, period};

    // Counter: exact length 0..exact_bound, then residue mod period.
    auto counter_next = [&](std::uint32_t c) -> std::uint32_t {
        if (c < exact_bound) return c + 1;
        std::uint64_t r = c == exact_bound ? (exact_bound + 1) % period
                                           : (c - (exact_bound + 1) + 1) % period;
        return static_cast<std::uint32_t>(exact_bound + 1 + r);
    };

    // State = counter followed by (lasso index, descriptor) pairs; the
    // all-dead state is a canonical sink.
    using Key = std::vector<std::uint32_t>;
    const Key sink_key{0xFFFFFFFFu};
    std::map<Key, State> ids;
    std::vector<Key> keys;
    std::vector<std::pair<State, Letter>> parent;  // BFS witness edges
    auto intern = [&](Key key, State from, Letter via) {
        auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<State>(keys.size()));
        if (fresh) {
            keys.push_back(it->first);
            parent.emplace_back(from, via);
        }
        return it->second;
    };

    Key init{0};
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        init.push_back(static_cast<std::uint32_t>(i));
        init.push_back(shapes[i].initial_code());
    }
    State initial = intern(shapes.empty() ? sink_key : std::move(init), 0, 0);

    std::vector<State> delta;
    for (std::size_t s = 0; s < keys.size(); ++s) {
        const Key key = keys[s];
        for (Letter c = 0; c < k; ++c) {
            Key next;
            if (key != sink_key) {
                next.push_back(counter_next(key[0]));
                std::uint32_t outs[2];
                for (std::size_t i = 1; i < key.size(); i += 2) {
                    int cnt = shapes[key[i]].advance(key[i + 1], key[0], c, cv, outs);
                    for (int o = 0; o < cnt; ++o) {
                        next.push_back(key[i]);
                        next.push_back(outs[o]);
                    }
                }
                if (next.size() == 1) next = sink_key;
            } else {
                next = sink_key;
            }
            delta.push_back(intern(std::move(next), static_cast<State>(s), c));
        }
    }

    Dfa result;
    result.alphabet = cover.alphabet;
    result.num_states = static_cast<std::uint32_t>(keys.size());
    result.initial = initial;
    result.delta = std::move(delta);
    result.accepting.assign(result.num_states, false);

    // Finality: reconstruct the BFS witness word of each state and accept iff
    // it lies in some lasso and no lasso holds a smaller word of equal length.
    for (State s = 0; s < result.num_states; ++s) {
        const Key& key = keys[s];
        if (key == sink_key) continue;

        // witness word
        Word w;
        for (State cur = s; cur != initial;) {
            auto [p, via] = parent[cur];
            w.push_back(via);
            cur = p;
        }
        std::reverse(w.letters.begin(), w.letters.end());
        const std::size_t len = w.size();

        bool in_union = false;
        for (std::size_t i = 1; i < key.size() && !in_union; i += 2)
            in_union = shapes[key[i]].member_at(key[i + 1], len);
        if (!in_union) continue;

        bool minimal = true;
        for (const auto& shape : shapes) {
            if (!shape.has_word_of_length(len)) continue;
            // compare the lasso's unique word of this length against w
            std::strong_ordering cmp = std::strong_ordering::equal;
            for (std::size_t pos = 0; pos < len; ++pos) {
                Letter cl = shape.word_letter(len, pos);
                if (cl != w[pos]) {
                    cmp = cl <=> w[pos];
                    break;
                }
            }
            if (cmp == std::strong_ordering::less) {
                minimal = false;
                break;
            }
        }
        result.accepting[s] = minimal;
    }
    return result;
}

Dfa smallest_words_dfa_naive(const Dfa& a) {
    const std::size_t k = a.alphabet.size();
    const std::size_t nblocks = (a.num_states + 63) / 64;

    // succ_all[q] = bitmask of successors of q under every letter
    std::vector<std::vector<std::uint64_t>> succ_all(a.num_states,
                                                     std::vector<std::uint64_t>(nblocks, 0));
    for (State q = 0; q < a.num_states; ++q)
        for (std::size_t c = 0; c < k; ++c) {
            State t = a.step(q, static_cast<Letter>(c));
            succ_all[q][t / 64] |= std::uint64_t(1) << (t % 64);
        }
    std::vector<std::uint64_t> accept_mask(nblocks, 0);
    for (State q = 0; q < a.num_states; ++q)
        if (a.accepting[q]) accept_mask[q / 64] |= std::uint64_t(1) << (q % 64);

    using Key = std::vector<std::uint64_t>;  // [state, mask blocks...]
    std::map<Key, State> ids;
    std::vector<Key> keys;
    auto intern = [&](Key key) {
        auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<State>(keys.size()));
        if (fresh) keys.push_back(it->first);
        return it->second;
    };

    Key init(nblocks + 1, 0);
    init[0] = a.initial;
    State initial = intern(std::move(init));

    std::vector<State> delta;
    for (std::size_t s = 0; s < keys.size(); ++s) {
        const Key key = keys[s];
        State q = static_cast<State>(key[0]);
        for (Letter c = 0; c < k; ++c) {
            Key next(nblocks + 1, 0);
            next[0] = a.step(q, c);
            for (std::size_t b = 0; b < nblocks; ++b) {
                std::uint64_t bits = key[b + 1];
                while (bits) {
                    int bit = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    State t = static_cast<State>(b * 64 + bit);
                    for (std::size_t x = 0; x < nblocks; ++x) next[x + 1] |= succ_all[t][x];
                }
            }
            for (Letter b = 0; b < c; ++b) {
                State t = a.step(q, b);
                next[t / 64 + 1] |= std::uint64_t(1) << (t % 64);
            }
            delta.push_back(intern(std::move(next)));
        }
    }

    Dfa r;
    r.alphabet = a.alphabet;
    r.num_states = static_cast<std::uint32_t>(keys.size());
    r.initial = initial;
    r.delta = std::move(delta);
    r.accepting.assign(r.num_states, false);
    for (State s = 0; s < r.num_states; ++s) {
        State q = static_cast<State>(keys[s][0]);
        if (!a.accepting[q]) continue;
        bool blocked = false;
        for (std::size_t b = 0; b < nblocks && !blocked; ++b)
            if (keys[s][b + 1] & accept_mask[b]) blocked = true;
        r.accepting[s] = !blocked;
    }
    return r;
}

Dfa smallest_words_dfa(const Dfa& a) {
    return minimize(build_cover_dfa(simplify_tuples(a)));
}

Dfa largest_words_dfa(const Dfa& a) {
    return reverse_alphabet_order(smallest_words_dfa(reverse_alphabet_order(a)));
}

Dfa largest_words_dfa_naive(const Dfa& a) {
    return reverse_alphabet_order(smallest_words_dfa_naive(reverse_alphabet_order(a)));
}

}  // namespace radixlex
