#include "radixlex/transducer.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "radixlex/errors.hpp"

namespace radixlex {

namespace {

std::vector<bool> reachable_states(const Transducer& t) {
    std::vector<std::vector<State>> adj(t.num_states);
    for (const auto& tr : t.transitions) adj[tr.from].push_back(tr.to);
    std::vector<bool> seen(t.num_states, false);
    std::deque<State> queue{t.initial};
    seen[t.initial] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State s : adj[q])
            if (!seen[s]) {
                seen[s] = true;
                queue.push_back(s);
            }
    }
    return seen;
}

std::vector<bool> coreachable_states(const Transducer& t) {
    std::vector<std::vector<State>> radj(t.num_states);
    for (const auto& tr : t.transitions) radj[tr.to].push_back(tr.from);
    std::vector<bool> seen(t.num_states, false);
    std::deque<State> queue;
    for (State q = 0; q < t.num_states; ++q)
        if (t.accepting[q]) {
            seen[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State s : radj[q])
            if (!seen[s]) {
                seen[s] = true;
                queue.push_back(s);
            }
    }
    return seen;
}

// Kosaraju SCC of the epsilon-input subgraph restricted to `keep`. Component
// ids increase along condensation edges, so sorting states by component id is
// a topological order of the acyclic part.
struct EpsScc {
    std::vector<int> comp;
    std::vector<bool> has_edge;  // component contains an internal eps edge
};

EpsScc eps_scc(const Transducer& t, const std::vector<bool>& keep) {
    const std::size_t m = t.num_states;
    std::vector<std::vector<State>> adj(m), radj(m);
    for (const auto& tr : t.transitions)
        if (!tr.in && keep[tr.from] && keep[tr.to]) {
            adj[tr.from].push_back(tr.to);
            radj[tr.to].push_back(tr.from);
        }
    std::vector<int> order;
    order.reserve(m);
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
    EpsScc res;
    res.comp.assign(m, -1);
    int ncomp = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        State s = static_cast<State>(*it);
        if (res.comp[s] != -1) continue;
        std::deque<State> queue{s};
        res.comp[s] = ncomp;
        while (!queue.empty()) {
            State q = queue.front();
            queue.pop_front();
            for (State p : radj[q])
                if (res.comp[p] == -1) {
                    res.comp[p] = ncomp;
                    queue.push_back(p);
                }
        }
        ++ncomp;
    }
    res.has_edge.assign(ncomp, false);
    for (const auto& tr : t.transitions)
        if (!tr.in && keep[tr.from] && keep[tr.to] && res.comp[tr.from] == res.comp[tr.to])
            res.has_edge[res.comp[tr.from]] = true;
    return res;
}

}  // namespace

void Transducer::validate() const {
    if (num_states == 0) throw ValidationError("transducer must have at least one state");
    if (initial >= num_states) throw ValidationError("transducer initial state out of range");
    if (accepting.size() != num_states)
        throw ValidationError("transducer accepting vector size mismatch");
    for (const auto& tr : transitions) {
        if (tr.from >= num_states || tr.to >= num_states)
            throw ValidationError("transducer transition state out of range");
        if (tr.in && *tr.in >= input_alphabet.size())
            throw ValidationError("transducer input letter out of range");
        if (tr.out && *tr.out >= output_alphabet.size())
            throw ValidationError("transducer output letter out of range");
    }
    // Output-producing epsilon-input cycles among useful states make the
    // output of some input infinite; reject them.
    std::vector<bool> reach = reachable_states(*this);
    std::vector<bool> coreach = coreachable_states(*this);
    std::vector<bool> useful(num_states, false);
    for (State q = 0; q < num_states; ++q) useful[q] = reach[q] && coreach[q];
    EpsScc scc = eps_scc(*this, useful);
    for (const auto& tr : transitions)
        if (!tr.in && tr.out && useful[tr.from] && useful[tr.to] &&
            scc.comp[tr.from] == scc.comp[tr.to])
            throw ValidationError("output-producing epsilon cycle in transducer");
}

Transducer make_transducer(Alphabet input, Alphabet output, std::uint32_t num_states,
                           State initial) {
    Transducer t;
    t.input_alphabet = std::move(input);
    t.output_alphabet = std::move(output);
    t.num_states = num_states;
    t.initial = initial;
    t.accepting.assign(num_states, false);
    return t;
}

Transducer prune_useless(const Transducer& t) {
    std::vector<bool> reach = reachable_states(t);
    std::vector<bool> coreach = coreachable_states(t);
    std::vector<State> newid(t.num_states, static_cast<State>(-1));
    std::uint32_t next = 0;
    for (State q = 0; q < t.num_states; ++q)
        if ((reach[q] && coreach[q]) || q == t.initial) newid[q] = next++;
    Transducer r = make_transducer(t.input_alphabet, t.output_alphabet, next, newid[t.initial]);
    for (State q = 0; q < t.num_states; ++q)
        if (newid[q] != static_cast<State>(-1)) r.accepting[newid[q]] = t.accepting[q];
    for (const auto& tr : t.transitions)
        if (newid[tr.from] != static_cast<State>(-1) && newid[tr.to] != static_cast<State>(-1) &&
            reach[tr.from] && coreach[tr.to])
            r.transitions.push_back({newid[tr.from], tr.in, tr.out, newid[tr.to]});
    std::sort(r.transitions.begin(), r.transitions.end());
    r.transitions.erase(std::unique(r.transitions.begin(), r.transitions.end()),
                        r.transitions.end());
    return r;
}

TransducerRunner::TransducerRunner(const Transducer& t) : t_(&t) {
    const std::size_t m = t.num_states;
    consume_.assign(m, std::vector<std::vector<int>>(t.input_alphabet.size()));
    eps_out_.assign(m, {});
    eps_in_.assign(m, {});
    consume_in_.assign(m, {});
    for (std::size_t i = 0; i < t.transitions.size(); ++i) {
        const auto& tr = t.transitions[i];
        if (tr.in) {
            consume_[tr.from][*tr.in].push_back(static_cast<int>(i));
            consume_in_[tr.to].push_back(static_cast<int>(i));
        } else {
            eps_out_[tr.from].push_back(static_cast<int>(i));
            eps_in_[tr.to].push_back(static_cast<int>(i));
        }
    }
    std::vector<bool> all(m, true);
    EpsScc scc = eps_scc(t, all);
    eps_on_cycle_.assign(m, false);
    for (State q = 0; q < m; ++q) eps_on_cycle_[q] = scc.has_edge[scc.comp[q]];
    // Component ids are topologically sorted, so this order is safe for
    // epsilon propagation through the acyclic part.
    eps_topo_.resize(m);
    for (State q = 0; q < m; ++q) eps_topo_[q] = q;
    std::stable_sort(eps_topo_.begin(), eps_topo_.end(),
                     [&](State a, State b) { return scc.comp[a] < scc.comp[b]; });
}

std::optional<Word> TransducerRunner::apply(const Word& input) const {
    const Transducer& t = *t_;
    const std::size_t m = t.num_states;
    const std::size_t len = input.size();
    require_word(t.input_alphabet, input);

    // Backward viability: viable[pos][q] = an accepting run suffix exists
    // consuming input[pos..].
    std::vector<std::vector<bool>> viable(len + 1, std::vector<bool>(m, false));
    for (std::size_t pos = len + 1; pos-- > 0;) {
        std::deque<State> queue;
        for (State q = 0; q < m; ++q) {
            bool v = pos == len ? t.accepting[q] : false;
            if (pos < len)
                for (int i : consume_[q][input[pos]])
                    if (viable[pos + 1][t.transitions[i].to]) {
                        v = true;
                        break;
                    }
            if (v) {
                viable[pos][q] = true;
                queue.push_back(q);
            }
        }
        while (!queue.empty()) {
            State q = queue.front();
            queue.pop_front();
            for (int i : eps_in_[q]) {
                State p = t.transitions[i].from;
                if (!viable[pos][p]) {
                    viable[pos][p] = true;
                    queue.push_back(p);
                }
            }
        }
    }
    if (!viable[0][t.initial]) return std::nullopt;

    // Forward run counting, saturated at 2, restricted to viable nodes.
    std::vector<std::vector<std::uint8_t>> count(len + 1, std::vector<std::uint8_t>(m, 0));
    auto bump = [](std::uint8_t& c, std::uint8_t by) {
        c = static_cast<std::uint8_t>(std::min(2, c + by));
    };
    count[0][t.initial] = 1;
    for (std::size_t pos = 0; pos <= len; ++pos) {
        for (State q : eps_topo_) {
            if (count[pos][q] == 0) continue;
            if (eps_on_cycle_[q])
                throw AmbiguityError("silent epsilon cycle produces infinitely many runs");
            for (int i : eps_out_[q]) {
                State to = t.transitions[i].to;
                if (viable[pos][to]) bump(count[pos][to], count[pos][q]);
            }
        }
        if (pos == len) break;
        for (State q = 0; q < m; ++q) {
            if (count[pos][q] == 0) continue;
            for (int i : consume_[q][input[pos]]) {
                State to = t.transitions[i].to;
                if (viable[pos + 1][to]) bump(count[pos + 1][to], count[pos][q]);
            }
        }
    }

    std::uint32_t total = 0;
    State final_state = 0;
    for (State q = 0; q < m; ++q)
        if (t.accepting[q] && count[len][q]) {
            total += count[len][q];
            final_state = q;
        }
    if (total == 0) return std::nullopt;
    if (total >= 2) throw AmbiguityError("input admits two accepting transducer runs");

    // Walk the unique run backwards; at every node with count 1 exactly one
    // predecessor carries a nonzero count.
    std::vector<Letter> rev_output;
    std::size_t pos = len;
    State q = final_state;
    while (!(pos == 0 && q == t.initial)) {
        bool stepped = false;
        for (int i : eps_in_[q]) {
            State p = t.transitions[i].from;
            if (count[pos][p] >= 1) {
                if (t.transitions[i].out) rev_output.push_back(*t.transitions[i].out);
                q = p;
                stepped = true;
                break;
            }
        }
        if (stepped) continue;
        if (pos > 0)
            for (int i : consume_in_[q]) {
                const auto& tr = t.transitions[i];
                if (*tr.in == input[pos - 1] && count[pos - 1][tr.from] >= 1) {
                    if (tr.out) rev_output.push_back(*tr.out);
                    q = tr.from;
                    --pos;
                    stepped = true;
                    break;
                }
            }
        if (!stepped) throw std::logic_error("transducer run reconstruction failed");
    }
    std::reverse(rev_output.begin(), rev_output.end());
    return Word(std::move(rev_output));
}

std::optional<Word> apply_transducer(const Transducer& t, const Word& input) {
    return TransducerRunner(t).apply(input);
}

bool transducer_is_unambiguous(const Transducer& raw) {
    Transducer t = prune_useless(raw);
    const std::size_t m = t.num_states;
    if (m == 0) return true;

    // Any epsilon cycle among useful states can be pumped silently on an
    // accepting run.
    std::vector<bool> all(m, true);
    EpsScc scc = eps_scc(t, all);
    for (const auto& tr : t.transitions)
        if (!tr.in && scc.comp[tr.from] == scc.comp[tr.to]) return false;

    // Epsilon graph is a DAG; component ids give a topological state order.
    std::vector<State> topo(m);
    for (State q = 0; q < m; ++q) topo[q] = q;
    std::stable_sort(topo.begin(), topo.end(),
                     [&](State a, State b) { return scc.comp[a] < scc.comp[b]; });
    std::vector<std::vector<int>> eps_adj(m);
    for (std::size_t i = 0; i < t.transitions.size(); ++i)
        if (!t.transitions[i].in) eps_adj[t.transitions[i].from].push_back(static_cast<int>(i));

    auto sat2 = [](std::uint32_t v) { return std::min<std::uint32_t>(v, 2); };

    // Epsilon path counts to acceptance (trailing closures), saturated at 2.
    std::vector<std::uint8_t> cnt_to_f(m, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        State q = *it;
        std::uint32_t c = t.accepting[q] ? 1 : 0;
        for (int i : eps_adj[q]) c = sat2(c + cnt_to_f[t.transitions[i].to]);
        cnt_to_f[q] = static_cast<std::uint8_t>(c);
    }

    // Sparse epsilon closures with path multiplicities: closure[q] lists
    // (state, #eps-paths q -> state), built bottom-up.
    std::vector<std::vector<std::pair<State, std::uint8_t>>> closure(m);
    {
        std::vector<std::uint8_t> acc(m, 0);
        std::vector<State> touched;
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            State q = *it;
            touched.clear();
            acc[q] = 1;
            touched.push_back(q);
            for (int i : eps_adj[q])
                for (auto [s, c] : closure[t.transitions[i].to]) {
                    if (!acc[s]) touched.push_back(s);
                    acc[s] = static_cast<std::uint8_t>(sat2(acc[s] + c));
                }
            std::sort(touched.begin(), touched.end());
            for (State s : touched) {
                closure[q].emplace_back(s, acc[s]);
                acc[s] = 0;
            }
        }
    }

    // Consuming edges indexed by (state, letter).
    const std::size_t k = t.input_alphabet.size();
    std::vector<std::vector<std::vector<int>>> consume(m, std::vector<std::vector<int>>(k));
    for (std::size_t i = 0; i < t.transitions.size(); ++i)
        if (t.transitions[i].in)
            consume[t.transitions[i].from][*t.transitions[i].in].push_back(static_cast<int>(i));

    // Expanded edges: (eps path, consuming edge) pairs collapsed to target
    // multiplicities.
    std::vector<std::vector<std::vector<std::pair<State, std::uint8_t>>>> expanded(
        m, std::vector<std::vector<std::pair<State, std::uint8_t>>>(k));
    {
        std::vector<std::uint8_t> mult(m, 0);
        std::vector<State> touched;
        for (State s = 0; s < m; ++s)
            for (Letter a = 0; a < k; ++a) {
                touched.clear();
                for (auto [mid, c] : closure[s])
                    for (int i : consume[mid][a]) {
                        State to = t.transitions[i].to;
                        if (!mult[to]) touched.push_back(to);
                        mult[to] = static_cast<std::uint8_t>(sat2(mult[to] + c));
                    }
                std::sort(touched.begin(), touched.end());
                for (State to : touched) {
                    expanded[s][a].emplace_back(to, mult[to]);
                    mult[to] = 0;
                }
            }
    }

    // Squared exploration with divergence tracking.
    std::vector<bool> seen_diag(m, false);
    std::unordered_set<std::uint64_t> seen_pair;
    std::deque<State> diag_queue;
    std::deque<std::pair<State, State>> div_queue;
    auto push_div = [&](State a, State b) {
        if (a > b) std::swap(a, b);
        std::uint64_t key = static_cast<std::uint64_t>(a) * m + b;
        if (seen_pair.insert(key).second) div_queue.emplace_back(a, b);
    };

    seen_diag[t.initial] = true;
    diag_queue.push_back(t.initial);
    if (cnt_to_f[t.initial] >= 2) return false;

    while (!diag_queue.empty() || !div_queue.empty()) {
        if (!diag_queue.empty()) {
            State p = diag_queue.front();
            diag_queue.pop_front();
            for (Letter a = 0; a < k; ++a) {
                const auto& outs = expanded[p][a];
                for (std::size_t i = 0; i < outs.size(); ++i) {
                    auto [ti, mi] = outs[i];
                    if (!seen_diag[ti]) {
                        seen_diag[ti] = true;
                        diag_queue.push_back(ti);
                        if (cnt_to_f[ti] >= 2) return false;
                    }
                    if (mi >= 2) push_div(ti, ti);
                    for (std::size_t j = i + 1; j < outs.size(); ++j) push_div(ti, outs[j].first);
                }
            }
        } else {
            auto [p, q] = div_queue.front();
            div_queue.pop_front();
            if (cnt_to_f[p] >= 1 && cnt_to_f[q] >= 1) return false;
            for (Letter a = 0; a < k; ++a)
                for (const auto& [tp, mp] : expanded[p][a])
                    for (const auto& [tq, mq] : expanded[q][a]) push_div(tp, tq);
        }
    }
    return true;
}

}  // namespace radixlex
