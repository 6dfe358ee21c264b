#include "radixlex/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "radixlex/errors.hpp"

namespace radixlex {

namespace {

constexpr std::uint64_t kRunCountCap = std::uint64_t(1) << 62;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return (s < a || s > kRunCountCap) ? kRunCountCap : s;
}

}  // namespace

void Nfa::add_transition(State from, Letter a, State to) {
    auto& v = delta[from][a];
    auto it = std::lower_bound(v.begin(), v.end(), to);
    if (it == v.end() || *it != to) v.insert(it, to);
}

void Nfa::validate() const {
    if (num_states == 0) throw ValidationError("nfa must have at least one state");
    if (initial >= num_states) throw ValidationError("nfa initial state out of range");
    if (accepting.size() != num_states || delta.size() != num_states)
        throw ValidationError("nfa table sizes mismatch");
    for (const auto& row : delta) {
        if (row.size() != alphabet.size()) throw ValidationError("nfa row size mismatch");
        for (const auto& succs : row)
            for (State t : succs)
                if (t >= num_states) throw ValidationError("nfa transition target out of range");
    }
}

Nfa make_nfa(Alphabet alphabet, std::uint32_t num_states, State initial) {
    Nfa n;
    n.alphabet = std::move(alphabet);
    n.num_states = num_states;
    n.initial = initial;
    n.accepting.assign(num_states, false);
    n.delta.assign(num_states, std::vector<std::vector<State>>(n.alphabet.size()));
    return n;
}

Nfa nfa_from_dfa(const Dfa& a) {
    Nfa n = make_nfa(a.alphabet, a.num_states, a.initial);
    n.accepting = a.accepting;
    for (State q = 0; q < a.num_states; ++q)
        for (Letter c = 0; c < a.alphabet.size(); ++c) n.delta[q][c] = {a.step(q, c)};
    return n;
}

bool nfa_accepts(const Nfa& n, const Word& w) {
    std::vector<bool> cur(n.num_states, false), next;
    cur[n.initial] = true;
    for (Letter a : w.letters) {
        next.assign(n.num_states, false);
        for (State q = 0; q < n.num_states; ++q)
            if (cur[q])
                for (State t : n.delta[q][a]) next[t] = true;
        cur.swap(next);
    }
    for (State q = 0; q < n.num_states; ++q)
        if (cur[q] && n.accepting[q]) return true;
    return false;
}

std::uint64_t nfa_accepting_run_count(const Nfa& n, const Word& w) {
    std::vector<std::uint64_t> cur(n.num_states, 0), next;
    cur[n.initial] = 1;
    for (Letter a : w.letters) {
        next.assign(n.num_states, 0);
        for (State q = 0; q < n.num_states; ++q)
            if (cur[q])
                for (State t : n.delta[q][a]) next[t] = sat_add(next[t], cur[q]);
        cur.swap(next);
    }
    std::uint64_t total = 0;
    for (State q = 0; q < n.num_states; ++q)
        if (n.accepting[q]) total = sat_add(total, cur[q]);
    return total;
}

std::vector<std::uint64_t> nfa_run_counts_by_length(const Nfa& n, std::size_t max_len) {
    std::vector<std::uint64_t> out;
    out.reserve(max_len + 1);
    std::vector<std::uint64_t> cur(n.num_states, 0), next;
    cur[n.initial] = 1;
    for (std::size_t len = 0;; ++len) {
        std::uint64_t total = 0;
        for (State q = 0; q < n.num_states; ++q)
            if (n.accepting[q]) total = sat_add(total, cur[q]);
        out.push_back(total);
        if (len == max_len) break;
        next.assign(n.num_states, 0);
        for (State q = 0; q < n.num_states; ++q)
            if (cur[q])
                for (Letter a = 0; a < n.alphabet.size(); ++a)
                    for (State t : n.delta[q][a]) next[t] = sat_add(next[t], cur[q]);
        cur.swap(next);
    }
    return out;
}

bool is_unambiguous(const Nfa& n) {
    const std::size_t m = n.num_states;
    // Pair states (p, q) with p <= q; diagonal pairs exist in two flavours:
    // reached by identical run prefixes (undiverged) or by distinct ones.
    std::vector<bool> seen_diag(m, false);                // undiverged (p, p)
    std::vector<bool> seen_pair(m * m, false);            // diverged, p <= q
    std::deque<std::pair<State, State>> diverged_queue;   // diverged pairs
    std::deque<State> diag_queue;

    auto push_diverged = [&](State s, State t) {
        if (s > t) std::swap(s, t);
        if (!seen_pair[s * m + t]) {
            seen_pair[s * m + t] = true;
            diverged_queue.emplace_back(s, t);
        }
    };

    seen_diag[n.initial] = true;
    diag_queue.push_back(n.initial);

    while (!diag_queue.empty() || !diverged_queue.empty()) {
        if (!diag_queue.empty()) {
            State p = diag_queue.front();
            diag_queue.pop_front();
            for (Letter a = 0; a < n.alphabet.size(); ++a) {
                const auto& succs = n.delta[p][a];
                for (std::size_t i = 0; i < succs.size(); ++i) {
                    if (!seen_diag[succs[i]]) {
                        seen_diag[succs[i]] = true;
                        diag_queue.push_back(succs[i]);
                    }
                    for (std::size_t j = i + 1; j < succs.size(); ++j)
                        push_diverged(succs[i], succs[j]);
                }
            }
        } else {
            auto [p, q] = diverged_queue.front();
            diverged_queue.pop_front();
            if (n.accepting[p] && n.accepting[q]) return false;
            for (Letter a = 0; a < n.alphabet.size(); ++a)
                for (State s : n.delta[p][a])
                    for (State t : n.delta[q][a]) push_diverged(s, t);
        }
    }
    return true;
}

Dfa determinize(const Nfa& n) {
    const std::size_t k = n.alphabet.size();
    std::map<std::vector<State>, State> id;
    std::vector<std::vector<State>> subsets;
    auto intern = [&](std::vector<State> subset) {
        auto [it, fresh] = id.try_emplace(subset, static_cast<State>(subsets.size()));
        if (fresh) subsets.push_back(std::move(subset));
        return it->second;
    };

    Dfa d;
    d.alphabet = n.alphabet;
    d.initial = intern({n.initial});
    std::vector<std::vector<State>> table;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        table.emplace_back();
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<bool> mark(n.num_states, false);
            for (State q : subsets[i])
                for (State t : n.delta[q][static_cast<Letter>(c)]) mark[t] = true;
            std::vector<State> nxt;
            for (State q = 0; q < n.num_states; ++q)
                if (mark[q]) nxt.push_back(q);
            table[i].push_back(intern(std::move(nxt)));
        }
    }
    d.num_states = static_cast<std::uint32_t>(subsets.size());
    d.accepting.assign(d.num_states, false);
    d.delta.assign(static_cast<std::size_t>(d.num_states) * k, 0);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (State q : subsets[i])
            if (n.accepting[q]) d.accepting[i] = true;
        for (std::size_t c = 0; c < k; ++c) d.delta[i * k + c] = table[i][c];
    }
    return d;
}

}  // namespace radixlex
