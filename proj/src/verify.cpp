#include "radixlex/verify.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <random>
#include <sstream>

#include "radixlex/errors.hpp"
#include "radixlex/minimal_words.hpp"
#include "radixlex/nfa.hpp"
#include "radixlex/oracles.hpp"
#include "radixlex/successor.hpp"
#include "radixlex/thin.hpp"

namespace radixlex {

namespace {

std::string show(const Alphabet& ab, const Word& w) {
    return w.empty() ? std::string("<eps>") : format_word(ab, w);
}

}  // namespace

std::vector<std::uint64_t> dfa_word_counts(const Dfa& d, std::size_t max_len) {
    const std::size_t k = d.alphabet.size();
    std::vector<std::uint64_t> out;
    std::vector<std::uint64_t> cur(d.num_states, 0), next;
    cur[d.initial] = 1;
    for (std::size_t len = 0;; ++len) {
        std::uint64_t total = 0;
        for (State q = 0; q < d.num_states; ++q)
            if (d.accepting[q]) total += cur[q];
        out.push_back(total);
        if (len == max_len) break;
        next.assign(d.num_states, 0);
        for (State q = 0; q < d.num_states; ++q)
            if (cur[q])
                for (std::size_t c = 0; c < k; ++c) next[d.delta[q * k + c]] += cur[q];
        cur.swap(next);
    }
    return out;
}

bool dfa_matches_singleton_table(const Dfa& d, const std::vector<std::optional<Word>>& table,
                                 std::size_t max_len, std::string* detail) {
    auto counts = dfa_word_counts(d, max_len);
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::uint64_t expected = table[len] ? 1 : 0;
        if (counts[len] != expected) {
            if (detail) {
                std::ostringstream os;
                os << "length " << len << ": " << counts[len] << " words accepted, expected "
                   << expected;
                *detail = os.str();
            }
            return false;
        }
        if (table[len] && !d.accepts(*table[len])) {
            if (detail)
                *detail = "length " + std::to_string(len) + ": reference word " +
                          show(d.alphabet, *table[len]) + " rejected";
            return false;
        }
    }
    return true;
}

bool dfa_matches_threshold(const Dfa& machine, const std::vector<std::optional<Word>>& table,
                           std::size_t max_len, ThresholdMode mode, std::string* detail) {
    const std::size_t k = machine.alphabet.size();
    // DFS over all words, tracking the machine state and the word itself.
    Word w;
    std::vector<State> states{machine.initial};
    bool ok = true;

    auto member = [&](const Word& word) {
        const auto& t = table[word.size()];
        if (!t) return mode == ThresholdMode::GeqOrEmpty;
        auto cmp = radix_compare(word, *t);
        if (mode == ThresholdMode::Leq) return cmp != std::strong_ordering::greater;
        return cmp != std::strong_ordering::less;
    };

    auto fail = [&](const Word& word, bool accepted) {
        if (detail)
            *detail = "word " + show(machine.alphabet, word) +
                      (accepted ? " accepted but not a member" : " rejected but a member");
        ok = false;
    };

    // iterative DFS
    std::vector<Letter> next{0};
    if (machine.accepting[states.back()] != member(w)) {
        fail(w, machine.accepting[states.back()]);
        return false;
    }
    while (!next.empty() && ok) {
        if (w.size() == max_len || next.back() == k) {
            next.pop_back();
            states.pop_back();
            if (!w.letters.empty()) w.letters.pop_back();
            continue;
        }
        Letter c = next.back()++;
        w.push_back(c);
        states.push_back(machine.step(states.back(), c));
        next.push_back(0);
        if (machine.accepting[states.back()] != member(w)) fail(w, machine.accepting[states.back()]);
    }
    return ok;
}

std::vector<std::vector<Word>> accepted_words_by_length(const Dfa& a, std::size_t max_len) {
    const std::size_t k = a.alphabet.size();
    std::vector<std::vector<Word>> out(max_len + 1);
    Word w;
    std::vector<State> states{a.initial};
    std::vector<Letter> next{0};
    if (a.accepting[a.initial]) out[0].push_back(w);
    while (!next.empty()) {
        if (w.size() == max_len || next.back() == k) {
            next.pop_back();
            states.pop_back();
            if (!w.letters.empty()) w.letters.pop_back();
            continue;
        }
        Letter c = next.back()++;
        w.push_back(c);
        states.push_back(a.step(states.back(), c));
        next.push_back(0);
        if (a.accepting[states.back()]) out[w.size()].push_back(w);
    }
    return out;  // DFS in letter order, so each bucket is already sorted
}

std::optional<Word> SuccessorTables::successor(const Word& w) const {
    if (w.size() < by_length.size()) {
        const auto& bucket = by_length[w.size()];
        auto it = std::upper_bound(bucket.begin(), bucket.end(), w);
        if (it != bucket.end()) return *it;
    }
    for (std::size_t len = w.size() + 1; len < min_by_length.size(); ++len)
        if (min_by_length[len]) return min_by_length[len];
    return std::nullopt;
}

SuccessorTables make_successor_tables(const Dfa& a, std::size_t max_len) {
    SuccessorTables t;
    t.by_length = accepted_words_by_length(a, max_len);
    t.min_by_length = oracle_smallest(a, max_len + a.num_states + 2);
    return t;
}

namespace {

// Batched transducer evaluation over the whole input trie, sharing frontier
// work across words with a common prefix.
struct BatchWalker {
    const Transducer& t;
    const Dfa& a;
    const std::size_t max_len;
    const bool lp_only;
    std::string* detail;

    SuccessorTables tables;
    std::vector<std::optional<Word>> largest;

    std::vector<std::vector<std::vector<int>>> consume;  // [state][letter] -> transitions
    std::vector<std::vector<int>> eps_out;
    std::vector<int> comp;       // eps SCC component, topological
    std::vector<bool> on_cycle;  // state on an eps cycle
    std::vector<std::vector<bool>> can_within;  // [r][q]: accept within <= r letters

    // Output chains: arena of (previous, letter); -1 is the empty chain.
    std::vector<std::pair<int, Letter>> chains;

    struct Entry {
        State state;
        std::uint8_t count;
        int chain;
    };

    bool ok = true;

    BatchWalker(const Transducer& t_, const Dfa& a_, std::size_t max_len_, bool lp_only_,
                std::string* detail_)
        : t(t_), a(a_), max_len(max_len_), lp_only(lp_only_), detail(detail_) {
        tables = make_successor_tables(a, max_len);
        if (lp_only) largest = oracle_largest(a, max_len);
        index_machine();
    }

    void index_machine() {
        const std::size_t m = t.num_states;
        const std::size_t k = t.input_alphabet.size();
        consume.assign(m, std::vector<std::vector<int>>(k));
        eps_out.assign(m, {});
        for (std::size_t i = 0; i < t.transitions.size(); ++i) {
            const auto& tr = t.transitions[i];
            if (tr.in)
                consume[tr.from][*tr.in].push_back(static_cast<int>(i));
            else
                eps_out[tr.from].push_back(static_cast<int>(i));
        }
        // SCC of the eps graph (Kosaraju; component ids topological).
        std::vector<std::vector<State>> adj(m), radj(m);
        for (const auto& tr : t.transitions)
            if (!tr.in) {
                adj[tr.from].push_back(tr.to);
                radj[tr.to].push_back(tr.from);
            }
        std::vector<int> order;
        std::vector<bool> vis(m, false);
        for (State s = 0; s < m; ++s) {
            if (vis[s]) continue;
            std::vector<std::pair<State, std::size_t>> stack{{s, 0}};
            vis[s] = true;
            while (!stack.empty()) {
                auto& [q, i] = stack.back();
                if (i < adj[q].size()) {
                    State nx = adj[q][i++];
                    if (!vis[nx]) {
                        vis[nx] = true;
                        stack.emplace_back(nx, 0);
                    }
                } else {
                    order.push_back(static_cast<int>(q));
                    stack.pop_back();
                }
            }
        }
        comp.assign(m, -1);
        int ncomp = 0;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            State s = static_cast<State>(*it);
            if (comp[s] != -1) continue;
            std::deque<State> queue{s};
            comp[s] = ncomp;
            while (!queue.empty()) {
                State q = queue.front();
                queue.pop_front();
                for (State p : radj[q])
                    if (comp[p] == -1) {
                        comp[p] = ncomp;
                        queue.push_back(p);
                    }
            }
            ++ncomp;
        }
        std::vector<bool> comp_edge(ncomp, false);
        for (const auto& tr : t.transitions)
            if (!tr.in && comp[tr.from] == comp[tr.to]) comp_edge[comp[tr.from]] = true;
        on_cycle.assign(m, false);
        for (State q = 0; q < m; ++q) on_cycle[q] = comp_edge[comp[q]];

        // can_within[r][q]: acceptance reachable with at most r consuming
        // steps (letters unconstrained; epsilon moves free).
        auto eps_back_close = [&](std::vector<bool>& set) {
            std::deque<State> queue;
            for (State q = 0; q < m; ++q)
                if (set[q]) queue.push_back(q);
            while (!queue.empty()) {
                State q = queue.front();
                queue.pop_front();
                for (State p : radj[q])
                    if (!set[p]) {
                        set[p] = true;
                        queue.push_back(p);
                    }
            }
        };
        std::vector<bool> exact(m, false);
        for (State q = 0; q < m; ++q) exact[q] = t.accepting[q];
        eps_back_close(exact);
        can_within.assign(max_len + 1, exact);
        for (std::size_t r = 1; r <= max_len; ++r) {
            std::vector<bool> nxt(m, false);
            for (const auto& tr : t.transitions)
                if (tr.in && exact[tr.to]) nxt[tr.from] = true;
            eps_back_close(nxt);
            exact = nxt;
            for (State q = 0; q < m; ++q)
                can_within[r][q] = can_within[r - 1][q] || exact[q];
        }
    }

    Word materialize(int chain) const {
        std::vector<Letter> rev;
        for (int c = chain; c != -1; c = chains[c].first) rev.push_back(chains[c].second);
        std::reverse(rev.begin(), rev.end());
        return Word(std::move(rev));
    }

    void fail(const Word& w, const std::string& msg) {
        if (ok && detail) *detail = "input " + show(t.input_alphabet, w) + ": " + msg;
        ok = false;
    }

    // Epsilon closure of entries (sorted by eps component); detects usable
    // silent cycles. Entries are merged per state.
    void close(std::vector<Entry>& entries, std::size_t remaining, const Word& w) {
        auto by_comp = [&](const Entry& x, const Entry& y) {
            return comp[x.state] < comp[y.state];
        };
        std::sort(entries.begin(), entries.end(), by_comp);
        // map from state to entry index
        for (std::size_t i = 0; i < entries.size() && ok; ++i) {
            Entry e = entries[i];
            if (on_cycle[e.state] && can_within[remaining][e.state]) {
                fail(w, "silent epsilon cycle reachable on an accepting run");
                return;
            }
            for (int ti : eps_out[e.state]) {
                const auto& tr = t.transitions[ti];
                if (!can_within[remaining][tr.to]) continue;
                int chain = e.chain;
                if (tr.out) {
                    chain = static_cast<int>(chains.size());
                    chains.emplace_back(e.chain, *tr.out);
                }
                bool merged = false;
                for (std::size_t j = 0; j < entries.size(); ++j)
                    if (entries[j].state == tr.to) {
                        entries[j].count = static_cast<std::uint8_t>(
                            std::min(2, entries[j].count + e.count));
                        merged = true;
                        break;
                    }
                if (!merged) {
                    // components increase along eps edges, so appending keeps
                    // unprocessed entries ahead of the scan position
                    entries.push_back({tr.to, e.count, chain});
                    std::sort(entries.begin() + static_cast<long>(i) + 1, entries.end(), by_comp);
                }
            }
        }
    }

    void check_node(const std::vector<Entry>& entries, const Word& w) {
        std::uint32_t total = 0;
        int chain = -1;
        for (const auto& e : entries)
            if (t.accepting[e.state]) {
                total += e.count;
                chain = e.chain;
            }
        auto succ = tables.successor(w);
        std::optional<Word> expected;
        if (succ && (!lp_only || succ->size() == w.size())) expected = succ;

        if (total >= 2) {
            fail(w, "two accepting runs");
        } else if (total == 1) {
            if (!expected)
                fail(w, "mapped but the reference has no answer here");
            else {
                Word out = materialize(chain);
                if (out != *expected)
                    fail(w, "output " + show(t.output_alphabet, out) + ", expected " +
                                show(t.output_alphabet, *expected));
            }
        } else if (expected) {
            fail(w, "rejected, expected " + show(t.output_alphabet, *expected));
        }
    }

    // All words in the subtree rooted at w must be rejected; verify the
    // reference agrees. The smallest extension per length is w followed by
    // zeros, and membership of the relevant kind is monotone above it.
    void check_dead_subtree(const Word& w) {
        Word wmin = w;
        for (std::size_t len = w.size(); len <= max_len && ok; ++len) {
            if (lp_only) {
                const auto& big = largest[len];
                if (big && radix_compare(wmin, *big) == std::strong_ordering::less)
                    fail(wmin, "rejected, but a same-length larger member exists");
            } else {
                if (tables.successor(wmin))
                    fail(wmin, "rejected, but the reference maps it");
            }
            wmin.push_back(0);
        }
    }

    bool run() {
        const std::size_t k = t.input_alphabet.size();
        struct NodeFrame {
            std::vector<Entry> entries;  // already closed
            Letter next = 0;
            std::size_t chain_mark = 0;
        };
        Word w;
        std::vector<NodeFrame> stack;
        {
            NodeFrame root;
            root.chain_mark = 0;
            root.entries.push_back({t.initial, 1, -1});
            if (!can_within[max_len][t.initial]) root.entries.clear();
            close(root.entries, max_len, w);
            if (!ok) return false;
            if (root.entries.empty()) {
                check_dead_subtree(w);
                return ok;
            }
            check_node(root.entries, w);
            stack.push_back(std::move(root));
        }
        while (!stack.empty() && ok) {
            NodeFrame& frame = stack.back();
            if (w.size() == max_len || frame.next == k) {
                chains.resize(frame.chain_mark);
                stack.pop_back();
                if (!w.letters.empty()) w.letters.pop_back();
                continue;
            }
            Letter c = frame.next++;
            w.push_back(c);
            const std::size_t remaining = max_len - w.size();
            NodeFrame child;
            child.chain_mark = chains.size();
            for (const auto& e : frame.entries)
                for (int ti : consume[e.state][c]) {
                    const auto& tr = t.transitions[ti];
                    if (!can_within[remaining][tr.to]) continue;
                    int chain = e.chain;
                    if (tr.out) {
                        chain = static_cast<int>(chains.size());
                        chains.emplace_back(e.chain, *tr.out);
                    }
                    bool merged = false;
                    for (auto& ce : child.entries)
                        if (ce.state == tr.to) {
                            ce.count = static_cast<std::uint8_t>(std::min(2, ce.count + e.count));
                            merged = true;
                            break;
                        }
                    if (!merged) child.entries.push_back({tr.to, e.count, chain});
                }
            close(child.entries, remaining, w);
            if (!ok) break;
            if (child.entries.empty()) {
                check_dead_subtree(w);
                chains.resize(child.chain_mark);
                w.letters.pop_back();
                continue;
            }
            check_node(child.entries, w);
            stack.push_back(std::move(child));
        }
        return ok;
    }
};

}  // namespace

bool check_successor_transducer(const Transducer& t, const Dfa& a, std::size_t max_len,
                                bool length_preserving_only, std::string* detail) {
    BatchWalker walker(t, a, max_len, length_preserving_only, detail);
    return walker.run();
}

std::vector<CheckResult> oracle_equivalence_suite(const Dfa& a, std::size_t max_len,
                                                  std::uint64_t seed) {
    std::vector<CheckResult> out;
    auto add = [&](std::string name, bool ok, std::string detail) {
        out.push_back({std::move(name), ok, std::move(detail)});
    };
    std::string detail;

    auto smallest_table = oracle_smallest(a, max_len);
    Dfa s_naive = minimize(smallest_words_dfa_naive(a));
    detail.clear();
    add("smallest words (pair construction) vs reference",
        dfa_matches_singleton_table(s_naive, smallest_table, max_len, &detail), detail);

    Dfa s_cover = smallest_words_dfa(a);
    detail.clear();
    add("smallest words (cover pipeline) vs reference",
        dfa_matches_singleton_table(s_cover, smallest_table, max_len, &detail), detail);

    detail.clear();
    add("cover and pair constructions agree", language_equal(s_naive, s_cover), "");

    auto largest_table = oracle_largest(a, max_len);
    Dfa b_dfa = largest_words_dfa(a);
    detail.clear();
    add("largest words vs reference",
        dfa_matches_singleton_table(b_dfa, largest_table, max_len, &detail), detail);

    {
        Dfa x = x_dfa(a);
        auto counts = dfa_word_counts(x, max_len);
        auto expected = oracle_x(a, max_len);
        bool ok = true;
        std::string d;
        std::uint64_t pw = 1;
        for (std::size_t len = 0; len <= max_len && ok; ++len) {
            std::uint64_t want = expected[len] ? pw : 0;
            if (counts[len] != want) {
                ok = false;
                d = "length " + std::to_string(len);
            }
            pw *= a.alphabet.size();
        }
        add("excluded lengths vs reference", ok, d);
    }

    {
        Nfa bg = bgeq_ufa(a);
        detail.clear();
        bool ok = dfa_matches_threshold(determinize(bg), largest_table, max_len,
                                        ThresholdMode::GeqOrEmpty, &detail);
        add("no-larger-same-length machine vs reference", ok, detail);
        add("no-larger-same-length machine unambiguous", is_unambiguous(bg), "");
    }

    {
        // Comparison machines on the (thin) smallest-words language.
        auto thin_table = oracle_smallest(s_cover, max_len);
        Nfa leq = thin_leq_ufa(s_cover);
        Nfa geq = thin_geq_ufa(s_cover);
        detail.clear();
        bool ok_leq = dfa_matches_threshold(determinize(leq), thin_table, max_len,
                                            ThresholdMode::Leq, &detail);
        add("at-most machine vs reference", ok_leq, detail);
        detail.clear();
        bool ok_geq = dfa_matches_threshold(determinize(geq), thin_table, max_len,
                                            ThresholdMode::Geq, &detail);
        add("at-least machine vs reference", ok_geq, detail);
        add("comparison machines unambiguous", is_unambiguous(leq) && is_unambiguous(geq), "");
    }

    {
        Transducer lp = length_preserving_successor_transducer(a);
        detail.clear();
        bool ok = check_successor_transducer(lp, a, std::min<std::size_t>(max_len, 10), true,
                                             &detail);
        add("length-preserving successor vs reference", ok, detail);
    }

    Transducer full = successor_transducer(a);
    {
        detail.clear();
        bool ok = check_successor_transducer(full, a, std::min<std::size_t>(max_len, 10), false,
                                             &detail);
        add("successor transducer vs reference", ok, detail);
        add("successor transducer unambiguous", transducer_is_unambiguous(full), "");
    }

    {
        auto mine = enumerate_words(a, 30);
        auto expected = oracle_enumerate(a, 30);
        bool ok = mine == expected;
        add("enumeration vs reference", ok,
            ok ? "" : "first difference at index " +
                          std::to_string(std::mismatch(mine.begin(), mine.end(), expected.begin(),
                                                        expected.end())
                                             .first -
                                         mine.begin()));
    }

    {
        // Seeded spot checks of single applications against oracle_successor.
        std::mt19937_64 rng(seed);
        TransducerRunner runner(full);
        bool ok = true;
        std::string d;
        for (int i = 0; i < 50 && ok; ++i) {
            std::size_t len = rng() % (max_len + 1);
            Word w;
            for (std::size_t j = 0; j < len; ++j)
                w.push_back(static_cast<Letter>(rng() % a.alphabet.size()));
            std::optional<Word> got;
            bool ambiguous = false;
            try {
                got = runner.apply(w);
            } catch (const AmbiguityError&) {
                ambiguous = true;
            }
            auto expected = oracle_successor(a, w);
            if (ambiguous || got != expected) {
                ok = false;
                d = "input " + show(a.alphabet, w);
            }
        }
        add("successor spot samples", ok, d);
    }

    return out;
}

}  // namespace radixlex
