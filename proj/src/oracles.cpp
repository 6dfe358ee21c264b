#include "radixlex/oracles.hpp"

#include <algorithm>

namespace radixlex {

namespace {

// alive[r][q]: some word of exactly r letters leads from q to acceptance.
std::vector<std::vector<bool>> alive_table(const Dfa& a, std::size_t max_len) {
    const std::size_t k = a.alphabet.size();
    std::vector<std::vector<bool>> alive(max_len + 1, std::vector<bool>(a.num_states, false));
    for (State q = 0; q < a.num_states; ++q) alive[0][q] = a.accepting[q];
    for (std::size_t r = 1; r <= max_len; ++r)
        for (State q = 0; q < a.num_states; ++q)
            for (std::size_t c = 0; c < k && !alive[r][q]; ++c)
                if (alive[r - 1][a.delta[q * k + c]]) alive[r][q] = true;
    return alive;
}

Word greedy_extreme(const Dfa& a, const std::vector<std::vector<bool>>& alive, State q,
                    std::size_t len, bool smallest) {
    Word w;
    const std::size_t k = a.alphabet.size();
    for (std::size_t r = len; r > 0; --r) {
        if (smallest) {
            for (Letter c = 0; c < k; ++c)
                if (alive[r - 1][a.step(q, c)]) {
                    w.push_back(c);
                    q = a.step(q, c);
                    break;
                }
        } else {
            for (Letter c = static_cast<Letter>(k); c-- > 0;)
                if (alive[r - 1][a.step(q, c)]) {
                    w.push_back(c);
                    q = a.step(q, c);
                    break;
                }
        }
    }
    return w;
}

}  // namespace

std::vector<std::optional<Word>> oracle_smallest(const Dfa& a, std::size_t max_len) {
    auto alive = alive_table(a, max_len);
    std::vector<std::optional<Word>> out(max_len + 1);
    for (std::size_t len = 0; len <= max_len; ++len)
        if (alive[len][a.initial]) out[len] = greedy_extreme(a, alive, a.initial, len, true);
    return out;
}

std::vector<std::optional<Word>> oracle_largest(const Dfa& a, std::size_t max_len) {
    auto alive = alive_table(a, max_len);
    std::vector<std::optional<Word>> out(max_len + 1);
    for (std::size_t len = 0; len <= max_len; ++len)
        if (alive[len][a.initial]) out[len] = greedy_extreme(a, alive, a.initial, len, false);
    return out;
}

std::optional<Word> oracle_successor(const Dfa& a, const Word& w) {
    require_word(a.alphabet, w);
    const std::size_t k = a.alphabet.size();
    const std::size_t horizon = w.size() + a.num_states + 1;
    auto alive = alive_table(a, horizon);

    // Same length: among words sharing the prefix w[0..t) and exceeding w at
    // position t, longer shared prefixes give smaller words, so scan t from
    // the right.
    std::vector<State> prefix_states(w.size() + 1);
    prefix_states[0] = a.initial;
    for (std::size_t i = 0; i < w.size(); ++i)
        prefix_states[i + 1] = a.step(prefix_states[i], w[i]);
    for (std::size_t t = w.size(); t-- > 0;) {
        for (Letter b = w[t] + 1; b < k; ++b) {
            State q = a.step(prefix_states[t], b);
            std::size_t rest = w.size() - t - 1;
            if (alive[rest][q]) {
                Word result;
                result.letters.assign(w.letters.begin(), w.letters.begin() + t);
                result.push_back(b);
                Word tail = greedy_extreme(a, alive, q, rest, true);
                result.letters.insert(result.letters.end(), tail.letters.begin(),
                                      tail.letters.end());
                return result;
            }
        }
    }
    for (std::size_t len = w.size() + 1; len <= horizon; ++len)
        if (alive[len][a.initial]) return greedy_extreme(a, alive, a.initial, len, true);
    return std::nullopt;
}

std::vector<bool> oracle_x(const Dfa& a, std::size_t max_len) {
    auto alive = alive_table(a, max_len);
    std::vector<bool> out(max_len + 1);
    for (std::size_t len = 0; len <= max_len; ++len) out[len] = !alive[len][a.initial];
    return out;
}

BgeqTable oracle_bgeq(const Dfa& a, std::size_t max_len) {
    return BgeqTable{oracle_largest(a, max_len)};
}

std::vector<Word> oracle_enumerate(const Dfa& a, std::size_t count) {
    std::vector<Word> out;
    if (count == 0) return out;
    const std::size_t k = a.alphabet.size();
    std::size_t len = 0;
    std::size_t empty_run = 0;
    std::vector<std::vector<bool>> alive = alive_table(a, a.num_states + 1);
    while (out.size() < count && empty_run <= a.num_states) {
        if (alive.size() <= len) alive = alive_table(a, len + a.num_states + 1);
        if (!alive[len][a.initial]) {
            ++empty_run;
            ++len;
            continue;
        }
        empty_run = 0;
        // lexicographic DFS over accepted words of this length
        Word w;
        std::vector<State> states{a.initial};
        std::vector<Letter> next{0};
        while (!next.empty() && out.size() < count) {
            if (w.size() == len) {
                out.push_back(w);
                // backtrack
                next.pop_back();
                states.pop_back();
                if (!w.letters.empty()) w.letters.pop_back();
                continue;
            }
            Letter c = next.back();
            bool advanced = false;
            for (; c < k; ++c) {
                State t = a.step(states.back(), c);
                if (alive[len - w.size() - 1][t]) {
                    next.back() = c + 1;
                    w.push_back(c);
                    states.push_back(t);
                    next.push_back(0);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                next.pop_back();
                states.pop_back();
                if (!w.letters.empty()) w.letters.pop_back();
            }
        }
        ++len;
    }
    return out;
}

bool oracle_is_thin_up_to(const Dfa& a, std::size_t bound) {
    const std::size_t k = a.alphabet.size();
    std::vector<std::uint64_t> cur(a.num_states, 0), next;
    cur[a.initial] = 1;
    for (std::size_t len = 0;; ++len) {
        std::uint64_t words = 0;
        for (State q = 0; q < a.num_states; ++q)
            if (a.accepting[q]) words += cur[q];
        if (words > 1) return false;
        if (len == bound) break;
        next.assign(a.num_states, 0);
        for (State q = 0; q < a.num_states; ++q)
            if (cur[q])
                for (std::size_t c = 0; c < k; ++c) {
                    State t = a.delta[q * k + c];
                    if (next[t] < (std::uint64_t(1) << 62)) next[t] += cur[q];
                }
        cur.swap(next);
    }
    return true;
}

}  // namespace radixlex
