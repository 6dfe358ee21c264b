#include "radixlex/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

#include "radixlex/errors.hpp"

namespace radixlex {

void Dfa::validate() const {
    if (num_states == 0) throw ValidationError("dfa must have at least one state");
    if (initial >= num_states) throw ValidationError("dfa initial state out of range");
    if (accepting.size() != num_states) throw ValidationError("dfa accepting vector size mismatch");
    if (delta.size() != static_cast<std::size_t>(num_states) * alphabet.size())
        throw ValidationError("dfa transition table is not total");
    for (State t : delta)
        if (t >= num_states) throw ValidationError("dfa transition target out of range");
}

Dfa make_dfa(Alphabet alphabet, std::uint32_t num_states, State initial) {
    Dfa a;
    a.alphabet = std::move(alphabet);
    a.num_states = num_states;
    a.initial = initial;
    a.accepting.assign(num_states, false);
    a.delta.assign(static_cast<std::size_t>(num_states) * a.alphabet.size(), 0);
    return a;
}

std::vector<State> trace(const Dfa& a, State q, const Word& w) {
    std::vector<State> seq;
    seq.reserve(w.size() + 1);
    seq.push_back(q);
    for (Letter c : w.letters) {
        q = a.step(q, c);
        seq.push_back(q);
    }
    return seq;
}

Dfa product(const Dfa& a, const Dfa& b, ProductMode mode) {
    if (a.alphabet != b.alphabet)
        throw std::invalid_argument("product requires automata over the same alphabet");
    const std::size_t k = a.alphabet.size();

    std::map<std::pair<State, State>, State> id;
    std::vector<std::pair<State, State>> pairs;
    auto intern = [&](State p, State q) {
        auto [it, fresh] = id.try_emplace({p, q}, static_cast<State>(pairs.size()));
        if (fresh) pairs.emplace_back(p, q);
        return it->second;
    };

    Dfa r;
    r.alphabet = a.alphabet;
    r.initial = intern(a.initial, b.initial);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        for (std::size_t c = 0; c < k; ++c)
            intern(a.step(p, static_cast<Letter>(c)), b.step(q, static_cast<Letter>(c)));
    }
    r.num_states = static_cast<std::uint32_t>(pairs.size());
    r.accepting.assign(r.num_states, false);
    r.delta.assign(static_cast<std::size_t>(r.num_states) * k, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        r.accepting[i] = mode == ProductMode::Intersection ? (a.accepting[p] && b.accepting[q])
                                                           : (a.accepting[p] || b.accepting[q]);
        for (std::size_t c = 0; c < k; ++c)
            r.delta[i * k + c] =
                id.at({a.step(p, static_cast<Letter>(c)), b.step(q, static_cast<Letter>(c))});
    }
    return r;
}

Dfa complement(Dfa a) {
    for (std::size_t i = 0; i < a.accepting.size(); ++i) a.accepting[i] = !a.accepting[i];
    return a;
}

Dfa reachable_part(const Dfa& a) {
    const std::size_t k = a.alphabet.size();
    std::vector<State> order;
    std::vector<State> newid(a.num_states, static_cast<State>(-1));
    order.push_back(a.initial);
    newid[a.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t c = 0; c < k; ++c) {
            State t = a.step(order[i], static_cast<Letter>(c));
            if (newid[t] == static_cast<State>(-1)) {
                newid[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    Dfa r;
    r.alphabet = a.alphabet;
    r.num_states = static_cast<std::uint32_t>(order.size());
    r.initial = 0;
    r.accepting.assign(r.num_states, false);
    r.delta.assign(static_cast<std::size_t>(r.num_states) * k, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        r.accepting[i] = a.accepting[order[i]];
        for (std::size_t c = 0; c < k; ++c)
            r.delta[i * k + c] = newid[a.step(order[i], static_cast<Letter>(c))];
    }
    return r;
}

Dfa minimize(const Dfa& a) {
    Dfa r = reachable_part(a);
    const std::size_t m = r.num_states;
    const std::size_t k = r.alphabet.size();

    // Inverse transition lists per letter.
    std::vector<std::vector<std::vector<State>>> inv(k, std::vector<std::vector<State>>(m));
    for (std::size_t q = 0; q < m; ++q)
        for (std::size_t c = 0; c < k; ++c) inv[c][r.delta[q * k + c]].push_back(static_cast<State>(q));

    std::vector<int> block_of(m, 0);
    std::vector<std::vector<State>> blocks;
    {
        std::vector<State> acc, rej;
        for (std::size_t q = 0; q < m; ++q) (r.accepting[q] ? acc : rej).push_back(static_cast<State>(q));
        if (!acc.empty()) {
            for (State q : acc) block_of[q] = static_cast<int>(blocks.size());
            blocks.push_back(std::move(acc));
        }
        if (!rej.empty()) {
            for (State q : rej) block_of[q] = static_cast<int>(blocks.size());
            blocks.push_back(std::move(rej));
        }
    }

    std::deque<int> work;
    std::vector<bool> in_work;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        work.push_back(static_cast<int>(b));
        in_work.push_back(true);
    }

    std::vector<std::vector<State>> hit;  // per touched block: states in the splitter preimage
    std::vector<int> touched;
    hit.resize(blocks.size());

    while (!work.empty()) {
        int splitter = work.front();
        work.pop_front();
        in_work[splitter] = false;
        std::vector<State> splitter_states = blocks[splitter];

        for (std::size_t c = 0; c < k; ++c) {
            touched.clear();
            for (State q : splitter_states)
                for (State p : inv[c][q]) {
                    int b = block_of[p];
                    if (hit[b].empty()) touched.push_back(b);
                    hit[b].push_back(p);
                }
            for (int b : touched) {
                std::vector<State>& inside = hit[b];
                if (inside.size() < blocks[b].size()) {
                    int fresh = static_cast<int>(blocks.size());
                    for (State p : inside) block_of[p] = fresh;
                    std::vector<State>& old = blocks[b];
                    old.erase(std::remove_if(old.begin(), old.end(),
                                             [&](State p) { return block_of[p] == fresh; }),
                              old.end());
                    blocks.push_back(std::move(inside));
                    in_work.push_back(false);
                    hit.emplace_back();
                    if (in_work[b]) {
                        work.push_back(fresh);
                        in_work[fresh] = true;
                    } else {
                        int smaller = blocks[fresh].size() < blocks[b].size() ? fresh : b;
                        work.push_back(smaller);
                        in_work[smaller] = true;
                    }
                }
                hit[b].clear();
            }
        }
    }

    // Quotient automaton, then canonical renumbering.
    Dfa q;
    q.alphabet = r.alphabet;
    q.num_states = static_cast<std::uint32_t>(blocks.size());
    q.initial = static_cast<State>(block_of[r.initial]);
    q.accepting.assign(q.num_states, false);
    q.delta.assign(static_cast<std::size_t>(q.num_states) * k, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        State rep = blocks[b][0];
        q.accepting[b] = r.accepting[rep];
        for (std::size_t c = 0; c < k; ++c)
            q.delta[b * k + c] = static_cast<State>(block_of[r.delta[rep * k + c]]);
    }
    return reachable_part(q);
}

bool language_empty(const Dfa& a) {
    Dfa r = reachable_part(a);
    return std::none_of(r.accepting.begin(), r.accepting.end(), [](bool b) { return b; });
}

bool language_equal(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet) return false;
    return minimize(a) == minimize(b);
}

std::vector<std::vector<bool>> acceptance_by_length(const Dfa& a, std::size_t max_len) {
    const std::size_t k = a.alphabet.size();
    std::vector<std::vector<bool>> alive(max_len + 1, std::vector<bool>(a.num_states, false));
    for (std::size_t q = 0; q < a.num_states; ++q) alive[0][q] = a.accepting[q];
    for (std::size_t r = 1; r <= max_len; ++r)
        for (std::size_t q = 0; q < a.num_states; ++q)
            for (std::size_t c = 0; c < k && !alive[r][q]; ++c)
                if (alive[r - 1][a.delta[q * k + c]]) alive[r][q] = true;
    return alive;
}

Dfa reverse_alphabet_order(const Dfa& a) {
    const std::size_t k = a.alphabet.size();
    std::vector<std::string> symbols(a.alphabet.symbols().rbegin(), a.alphabet.symbols().rend());
    Dfa r = a;
    r.alphabet = Alphabet(std::move(symbols));
    for (std::size_t q = 0; q < a.num_states; ++q)
        for (std::size_t c = 0; c < k; ++c) r.delta[q * k + (k - 1 - c)] = a.delta[q * k + c];
    return r;
}

Dfa pad_states(Dfa a, std::uint32_t min_states) {
    const std::size_t k = a.alphabet.size();
    while (a.num_states < min_states) {
        State fresh = a.num_states++;
        a.accepting.push_back(false);
        for (std::size_t c = 0; c < k; ++c) a.delta.push_back(fresh);
    }
    return a;
}

Dfa reroot(Dfa a, State new_initial) {
    if (new_initial >= a.num_states) throw std::invalid_argument("reroot: state out of range");
    a.initial = new_initial;
    return a;
}

}  // namespace radixlex
