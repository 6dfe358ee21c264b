#include "radixlex/thin.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "radixlex/minimal_words.hpp"

namespace radixlex {

bool is_thin(const Dfa& a) {
    const std::size_t m = a.num_states;
    const std::size_t k = a.alphabet.size();
    // Pair states (p, q, differed) reached by two words of equal length;
    // differed records whether the words differ somewhere. Not thin iff a
    // differed pair of accepting states is reachable.
    std::vector<bool> seen(m * m * 2, false);
    std::deque<std::uint32_t> queue;
    auto encode = [&](State p, State q, bool d) {
        if (p > q) std::swap(p, q);
        return static_cast<std::uint32_t>((p * m + q) * 2 + (d ? 1 : 0));
    };
    auto push = [&](State p, State q, bool d) {
        std::uint32_t id = encode(p, q, d);
        if (!seen[id]) {
            seen[id] = true;
            queue.push_back(id);
        }
    };
    push(a.initial, a.initial, false);
    while (!queue.empty()) {
        std::uint32_t id = queue.front();
        queue.pop_front();
        bool d = id & 1;
        State p = static_cast<State>((id >> 1) / m);
        State q = static_cast<State>((id >> 1) % m);
        if (d && a.accepting[p] && a.accepting[q]) return false;
        for (Letter x = 0; x < k; ++x)
            for (Letter y = 0; y < k; ++y) push(a.step(p, x), a.step(q, y), d || x != y);
    }
    return true;
}

ThinWitness::ThinWitness(Dfa a) : a_(std::move(a)) {}

std::optional<Word> ThinWitness::word_at(std::size_t len) {
    if (alive_.size() <= len) {
        const std::size_t k = a_.alphabet.size();
        std::size_t max_len = std::max<std::size_t>(2 * len, 16);
        alive_.assign(max_len + 1, std::vector<bool>(a_.num_states, false));
        for (State q = 0; q < a_.num_states; ++q) alive_[0][q] = a_.accepting[q];
        for (std::size_t r = 1; r <= max_len; ++r)
            for (State q = 0; q < a_.num_states; ++q)
                for (std::size_t c = 0; c < k && !alive_[r][q]; ++c)
                    if (alive_[r - 1][a_.delta[q * k + c]]) alive_[r][q] = true;
    }
    if (!alive_[len][a_.initial]) return std::nullopt;
    Word w;
    State q = a_.initial;
    for (std::size_t r = len; r > 0; --r)
        for (Letter c = 0; c < a_.alphabet.size(); ++c)
            if (alive_[r - 1][a_.step(q, c)]) {
                w.push_back(c);
                q = a_.step(q, c);
                break;
            }
    return w;
}

namespace {

enum class Side { Leq, Geq };

Nfa thin_comparison_ufa(const Dfa& a, Side side) {
    if (!is_thin(a))
        throw std::invalid_argument("comparison UFA requires a thin language");
    const std::size_t k = a.alphabet.size();
    // States (q, flag): flag 0 tracks the unique same-length L-word exactly,
    // flag 1 means the word is already strictly on the chosen side.
    Nfa n = make_nfa(a.alphabet, 2 * a.num_states, 2 * a.initial);
    for (State q = 0; q < a.num_states; ++q) {
        n.accepting[2 * q] = a.accepting[q];
        n.accepting[2 * q + 1] = a.accepting[q];
        for (Letter c = 0; c < k; ++c) {
            n.add_transition(2 * q, c, 2 * a.step(q, c));
            for (Letter b = 0; b < k; ++b) {
                bool strict = side == Side::Leq ? c < b : c > b;
                if (strict) n.add_transition(2 * q, c, 2 * a.step(q, b) + 1);
                n.add_transition(2 * q + 1, c, 2 * a.step(q, b) + 1);
            }
        }
    }
    return n;
}

}  // namespace

Nfa thin_leq_ufa(const Dfa& a) { return thin_comparison_ufa(a, Side::Leq); }

Nfa thin_geq_ufa(const Dfa& a) { return thin_comparison_ufa(a, Side::Geq); }

Dfa x_dfa(const Dfa& a) {
    const std::size_t k = a.alphabet.size();
    // Subset sequence of the label-erased automaton.
    std::map<std::vector<bool>, std::size_t> seen;
    std::vector<std::vector<bool>> sequence;
    std::vector<bool> cur(a.num_states, false);
    cur[a.initial] = true;
    std::size_t entry;
    while (true) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            entry = it->second;
            break;
        }
        seen.emplace(cur, sequence.size());
        sequence.push_back(cur);
        std::vector<bool> next(a.num_states, false);
        for (State q = 0; q < a.num_states; ++q)
            if (cur[q])
                for (std::size_t c = 0; c < k; ++c) next[a.delta[q * k + c]] = true;
        cur = std::move(next);
    }
    const std::size_t total = sequence.size();  // entry + period states

    Dfa d = make_dfa(a.alphabet, static_cast<std::uint32_t>(total), 0);
    for (std::size_t t = 0; t < total; ++t) {
        State next = static_cast<State>(t + 1 == total ? entry : t + 1);
        for (std::size_t c = 0; c < k; ++c) d.delta[t * k + c] = next;
        bool some_word = false;
        for (State q = 0; q < a.num_states && !some_word; ++q)
            if (sequence[t][q] && a.accepting[q]) some_word = true;
        d.accepting[t] = !some_word;
    }
    return d;
}

Nfa bgeq_ufa(const Dfa& a) {
    Dfa big = minimize(largest_words_dfa_naive(a));
    Nfa geq = thin_geq_ufa(big);
    Dfa x = x_dfa(a);

    // Disjoint union behind a fresh initial state. The two parts accept at
    // disjoint length sets, so unambiguity is preserved.
    const std::uint32_t total = 1 + geq.num_states + x.num_states;
    const State geq_base = 1;
    const State x_base = 1 + geq.num_states;
    Nfa u = make_nfa(a.alphabet, total, 0);
    u.accepting[0] = geq.accepting[geq.initial] || x.accepting[x.initial];
    for (State q = 0; q < geq.num_states; ++q) {
        u.accepting[geq_base + q] = geq.accepting[q];
        for (Letter c = 0; c < a.alphabet.size(); ++c)
            for (State t : geq.delta[q][c]) u.add_transition(geq_base + q, c, geq_base + t);
    }
    for (State q = 0; q < x.num_states; ++q) {
        u.accepting[x_base + q] = x.accepting[q];
        for (Letter c = 0; c < a.alphabet.size(); ++c)
            u.add_transition(x_base + q, c, x_base + x.step(q, c));
    }
    for (Letter c = 0; c < a.alphabet.size(); ++c) {
        for (State t : geq.delta[geq.initial][c]) u.add_transition(0, c, geq_base + t);
        u.add_transition(0, c, x_base + x.step(x.initial, c));
    }
    if (!is_unambiguous(u)) throw std::logic_error("bgeq union is ambiguous");
    return u;
}

}  // namespace radixlex
