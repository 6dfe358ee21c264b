#include "radixlex/successor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

#include "radixlex/minimal_words.hpp"
#include "radixlex/nfa.hpp"
#include "radixlex/oracles.hpp"
#include "radixlex/thin.hpp"

namespace radixlex {

PaddedDfa pad_automaton(const Dfa& a) {
    if (a.alphabet.contains(kPadSymbol))
        throw std::invalid_argument("padding symbol already occurs in the alphabet");
    std::vector<std::string> syms;
    syms.push_back(kPadSymbol);
    for (const auto& s : a.alphabet.symbols()) syms.push_back(s);
    Alphabet ext(std::move(syms));

    const std::uint32_t n = a.num_states;
    const std::size_t k = a.alphabet.size();
    const State fresh_initial = n;
    const State sink = n + 1;
    Dfa d = make_dfa(ext, n + 2, fresh_initial);
    for (State q = 0; q < n; ++q) {
        d.accepting[q] = a.accepting[q];
        d.delta[q * (k + 1)] = sink;
        for (std::size_t c = 0; c < k; ++c)
            d.delta[q * (k + 1) + c + 1] = a.step(q, static_cast<Letter>(c));
    }
    d.accepting[fresh_initial] = a.accepting[a.initial];
    d.delta[fresh_initial * (k + 1)] = fresh_initial;
    for (std::size_t c = 0; c < k; ++c)
        d.delta[fresh_initial * (k + 1) + c + 1] = a.step(a.initial, static_cast<Letter>(c));
    for (std::size_t c = 0; c <= k; ++c) d.delta[sink * (k + 1) + c] = sink;
    return {std::move(d), n};
}

namespace {

std::vector<bool> dfa_coreachable(const Dfa& d) {
    const std::size_t k = d.alphabet.size();
    std::vector<std::vector<State>> radj(d.num_states);
    for (State q = 0; q < d.num_states; ++q)
        for (std::size_t c = 0; c < k; ++c) radj[d.delta[q * k + c]].push_back(q);
    std::vector<bool> seen(d.num_states, false);
    std::deque<State> queue;
    for (State q = 0; q < d.num_states; ++q)
        if (d.accepting[q]) {
            seen[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State p : radj[q])
            if (!seen[p]) {
                seen[p] = true;
                queue.push_back(p);
            }
    }
    return seen;
}

// Component machine plus its co-reachable set for dead-branch pruning.
struct Component {
    Dfa dfa;
    std::vector<bool> live;
    bool empty;
};

Component make_component(Dfa d) {
    Component c;
    c.dfa = std::move(d);
    c.live = dfa_coreachable(c.dfa);
    c.empty = !c.live[c.dfa.initial];
    return c;
}

struct ComponentCache {
    const Dfa* a;
    std::map<State, Component> s_map, b_map, x_map;

    const Component& smallest_at(State q) {
        auto it = s_map.find(q);
        if (it == s_map.end())
            it = s_map.emplace(q, make_component(minimize(smallest_words_dfa_naive(reroot(*a, q)))))
                     .first;
        return it->second;
    }
    const Component& bgeq_at(State q) {
        auto it = b_map.find(q);
        if (it == b_map.end())
            it = b_map.emplace(q, make_component(minimize(determinize(bgeq_ufa(reroot(*a, q))))))
                     .first;
        return it->second;
    }
    const Component& excluded_lengths_at(State q) {
        auto it = x_map.find(q);
        if (it == x_map.end())
            it = x_map.emplace(q, make_component(minimize(x_dfa(reroot(*a, q))))).first;
        return it->second;
    }
};

struct BranchContext {
    State branch_state;
    Letter in_letter, out_letter;
    const Component* larger_guard;            // over the input suffix
    const Component* least_completion;        // over the output suffix
    std::vector<const Component*> gap_guards;  // one per letter strictly between
    bool viable;
};

// Core machine: copy phase, branch, verification phase; `filter` runs on the
// input through all phases and must accept for the machine to accept.
Transducer build_length_preserving(const Dfa& a, const Dfa& filter) {
    const std::size_t k = a.alphabet.size();
    ComponentCache cache{&a, {}, {}, {}};
    std::vector<bool> filter_live = dfa_coreachable(filter);

    std::map<std::tuple<State, Letter, Letter>, int> ctx_ids;
    std::vector<BranchContext> ctxs;
    auto context = [&](State q, Letter in, Letter out) -> int {
        auto key = std::make_tuple(q, in, out);
        auto it = ctx_ids.find(key);
        if (it != ctx_ids.end()) return it->second;
        BranchContext ctx;
        ctx.branch_state = q;
        ctx.in_letter = in;
        ctx.out_letter = out;
        ctx.larger_guard = &cache.bgeq_at(a.step(q, in));
        ctx.least_completion = &cache.smallest_at(a.step(q, out));
        ctx.viable = !ctx.larger_guard->empty && !ctx.least_completion->empty;
        for (Letter c = in + 1; c < out; ++c) {
            ctx.gap_guards.push_back(&cache.excluded_lengths_at(a.step(q, c)));
            if (ctx.gap_guards.back()->empty) ctx.viable = false;
        }
        int id = static_cast<int>(ctxs.size());
        ctxs.push_back(std::move(ctx));
        ctx_ids.emplace(key, id);
        return id;
    };

    // Composite states: [0, q, d] for the copy phase, [1, ctx, qb, qs, xs..., d]
    // for the verification phase.
    using Key = std::vector<std::uint32_t>;
    std::map<Key, State> ids;
    std::vector<Key> keys;
    auto intern = [&](Key key) {
        auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<State>(keys.size()));
        if (fresh) keys.push_back(it->first);
        return it->second;
    };

    Transducer t = make_transducer(a.alphabet, a.alphabet, 0, 0);
    t.initial = intern({0, a.initial, filter.initial});

    for (std::size_t s = 0; s < keys.size(); ++s) {
        const Key key = keys[s];
        const State from = static_cast<State>(s);
        if (key[0] == 0) {
            const State q = key[1];
            const State d = key[2];
            for (Letter c = 0; c < k; ++c) {
                State dn = filter.step(d, c);
                if (!filter_live[dn]) continue;
                t.transitions.push_back({from, c, c, intern({0, a.step(q, c), dn})});
                for (Letter b = c + 1; b < k; ++b) {
                    int cid = context(q, c, b);
                    const BranchContext& ctx = ctxs[cid];
                    if (!ctx.viable) continue;
                    Key post{1, static_cast<std::uint32_t>(cid),
                             ctx.larger_guard->dfa.initial, ctx.least_completion->dfa.initial};
                    for (const Component* g : ctx.gap_guards) post.push_back(g->dfa.initial);
                    post.push_back(dn);
                    t.transitions.push_back({from, c, b, intern(std::move(post))});
                }
            }
        } else {
            const BranchContext& ctx = ctxs[key[1]];
            const State qb = key[2];
            const State qs = key[3];
            const std::size_t gaps = ctx.gap_guards.size();
            const State d = key[4 + gaps];
            for (Letter in = 0; in < k; ++in) {
                State dn = filter.step(d, in);
                if (!filter_live[dn]) continue;
                State qbn = ctx.larger_guard->dfa.step(qb, in);
                if (!ctx.larger_guard->live[qbn]) continue;
                bool gap_ok = true;
                Key base{1, key[1], qbn, 0};
                for (std::size_t g = 0; g < gaps; ++g) {
                    State xn = ctx.gap_guards[g]->dfa.step(key[4 + g], in);
                    if (!ctx.gap_guards[g]->live[xn]) {
                        gap_ok = false;
                        break;
                    }
                    base.push_back(xn);
                }
                if (!gap_ok) continue;
                base.push_back(dn);
                for (Letter out = 0; out < k; ++out) {
                    State qsn = ctx.least_completion->dfa.step(qs, out);
                    if (!ctx.least_completion->live[qsn]) continue;
                    Key post = base;
                    post[3] = qsn;
                    t.transitions.push_back({from, in, out, intern(std::move(post))});
                }
            }
        }
    }

    t.num_states = static_cast<std::uint32_t>(keys.size());
    t.accepting.assign(t.num_states, false);
    for (std::size_t s = 0; s < keys.size(); ++s) {
        const Key& key = keys[s];
        if (key[0] == 0) continue;
        const BranchContext& ctx = ctxs[key[1]];
        const std::size_t gaps = ctx.gap_guards.size();
        bool acc = ctx.larger_guard->dfa.accepting[key[2]] &&
                   ctx.least_completion->dfa.accepting[key[3]] &&
                   filter.accepting[key[4 + gaps]];
        for (std::size_t g = 0; g < gaps && acc; ++g)
            acc = ctx.gap_guards[g]->dfa.accepting[key[4 + g]];
        t.accepting[s] = acc;
    }
    return prune_useless(t);
}

Dfa trivial_filter(const Alphabet& alphabet) {
    Dfa d = make_dfa(alphabet, 1, 0);
    d.accepting[0] = true;
    return d;
}

}  // namespace

Transducer length_preserving_successor_transducer(const Dfa& a) {
    Transducer t = build_length_preserving(a, trivial_filter(a.alphabet));
    t.validate();
    return t;
}

Transducer successor_transducer(const Dfa& a) {
    PaddedDfa padded = pad_automaton(a);
    const std::uint32_t pads = padded.dfa.num_states;
    const std::size_t kx = padded.dfa.alphabet.size();

    // Input filter: exactly `pads` pad letters, then real letters only.
    Dfa filter = make_dfa(padded.dfa.alphabet, pads + 2, 0);
    const State accept_state = pads;
    const State dead = pads + 1;
    for (State i = 0; i < pads; ++i)
        for (std::size_t c = 0; c < kx; ++c)
            filter.delta[i * kx + c] = c == 0 ? i + 1 : dead;
    for (std::size_t c = 0; c < kx; ++c) {
        filter.delta[accept_state * kx + c] = c == 0 ? dead : accept_state;
        filter.delta[dead * kx + c] = dead;
    }
    filter.accepting[accept_state] = true;

    Transducer core = build_length_preserving(padded.dfa, filter);

    // Pad inputs become epsilon inputs, then pad outputs epsilon outputs.
    for (auto& tr : core.transitions)
        if (tr.in && *tr.in == 0) tr.in.reset();
    for (auto& tr : core.transitions)
        if (tr.out && *tr.out == 0) tr.out.reset();

    Transducer out = make_transducer(a.alphabet, a.alphabet, core.num_states, core.initial);
    out.accepting = core.accepting;
    out.transitions.reserve(core.transitions.size());
    for (const auto& tr : core.transitions) {
        std::optional<Letter> in = tr.in ? std::optional<Letter>(*tr.in - 1) : std::nullopt;
        std::optional<Letter> o = tr.out ? std::optional<Letter>(*tr.out - 1) : std::nullopt;
        out.transitions.push_back({tr.from, in, o, tr.to});
    }
    out = prune_useless(out);
    out.validate();
    return out;
}

std::optional<Word> minimal_word(const Dfa& a) {
    const std::size_t k = a.alphabet.size();
    const std::uint32_t inf = 0xFFFFFFFFu;
    std::vector<std::uint32_t> dist(a.num_states, inf);
    std::vector<std::vector<State>> radj(a.num_states);
    for (State q = 0; q < a.num_states; ++q)
        for (std::size_t c = 0; c < k; ++c) radj[a.delta[q * k + c]].push_back(q);
    std::deque<State> queue;
    for (State q = 0; q < a.num_states; ++q)
        if (a.accepting[q]) {
            dist[q] = 0;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State p : radj[q])
            if (dist[p] == inf) {
                dist[p] = dist[q] + 1;
                queue.push_back(p);
            }
    }
    if (dist[a.initial] == inf) return std::nullopt;
    Word w;
    State q = a.initial;
    for (std::uint32_t remaining = dist[a.initial]; remaining > 0; --remaining)
        for (Letter c = 0; c < k; ++c)
            if (dist[a.step(q, c)] == remaining - 1) {
                w.push_back(c);
                q = a.step(q, c);
                break;
            }
    return w;
}

std::vector<Word> enumerate_words(const Dfa& a, std::size_t count) {
    std::vector<Word> out;
    if (count == 0) return out;
    auto first = minimal_word(a);
    if (!first) return out;
    out.push_back(std::move(*first));
    if (out.size() == count) return out;
    Transducer t = successor_transducer(a);
    TransducerRunner runner(t);
    while (out.size() < count) {
        auto next = runner.apply(out.back());
        if (!next) break;
        out.push_back(std::move(*next));
    }
    return out;
}

PaddedGapCheck padded_length_gap(const PaddedDfa& p, const Word& u) {
    const std::size_t kx = p.dfa.alphabet.size();
    for (Letter c : u.letters)
        if (c == 0 || c >= kx)
            throw std::invalid_argument("u must use real (non-pad) letters of the padded alphabet");

    // K = padded language restricted to real letters.
    std::vector<std::string> gamma(p.dfa.alphabet.symbols().begin() + 1,
                                   p.dfa.alphabet.symbols().end());
    Dfa kdfa = make_dfa(Alphabet(std::move(gamma)), p.dfa.num_states, p.dfa.initial);
    kdfa.accepting = p.dfa.accepting;
    for (State q = 0; q < p.dfa.num_states; ++q)
        for (std::size_t c = 0; c + 1 < kx; ++c)
            kdfa.delta[q * (kx - 1) + c] = p.dfa.delta[q * kx + c + 1];

    Word u_gamma;
    for (Letter c : u.letters) u_gamma.push_back(c - 1);
    auto v_gamma = oracle_successor(kdfa, u_gamma);
    if (!v_gamma) throw std::invalid_argument("u is maximal in the unpadded language");

    PaddedGapCheck res;
    for (Letter c : v_gamma->letters) res.k_successor.push_back(c + 1);
    const std::size_t n = p.dfa.num_states;
    res.length_in_range = u.size() <= res.k_successor.size() &&
                          res.k_successor.size() <= u.size() + n;

    Word padded_u(std::vector<Letter>(n, 0));
    padded_u.letters.insert(padded_u.letters.end(), u.letters.begin(), u.letters.end());
    Word expected(std::vector<Letter>(n + u.size() - res.k_successor.size(), 0));
    expected.letters.insert(expected.letters.end(), res.k_successor.letters.begin(),
                            res.k_successor.letters.end());
    auto succ = oracle_successor(p.dfa, padded_u);
    res.padded_successor_matches = succ.has_value() && *succ == expected;
    return res;
}

}  // namespace radixlex
