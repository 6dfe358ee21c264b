#pragma once

#include <cstdint>
#include <vector>

#include "radixlex/alphabet.hpp"
#include "radixlex/dfa.hpp"

namespace radixlex {

/// Nondeterministic finite automaton (no epsilon transitions; those live only
/// in transducers). delta[q][a] is a sorted list of successor states.
struct Nfa {
    Alphabet alphabet;
    std::uint32_t num_states = 0;
    State initial = 0;
    std::vector<bool> accepting;
    std::vector<std::vector<std::vector<State>>> delta;  // [state][letter] -> states

    void add_transition(State from, Letter a, State to);
    bool is_accepting(State q) const { return accepting[q]; }
    void validate() const;
};

Nfa make_nfa(Alphabet alphabet, std::uint32_t num_states, State initial);
Nfa nfa_from_dfa(const Dfa& a);

bool nfa_accepts(const Nfa& n, const Word& w);

/// Exact number of distinct accepting runs on w (saturating at 2^63).
std::uint64_t nfa_accepting_run_count(const Nfa& n, const Word& w);

/// Number of accepted words per length 0..max_len, counted as accepting runs.
/// For unambiguous automata this equals the number of accepted words.
std::vector<std::uint64_t> nfa_run_counts_by_length(const Nfa& n, std::size_t max_len);

/// Decides whether some word has two distinct accepting runs, via the squared
/// automaton with divergence tracking: ambiguous iff a diverged state pair
/// that is reachable by a common word can reach a pair of accepting states.
bool is_unambiguous(const Nfa& n);

/// Subset construction (complete DFA; the empty subset is the sink).
Dfa determinize(const Nfa& n);

}  // namespace radixlex
