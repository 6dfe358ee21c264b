#pragma once

#include <cstdint>
#include <vector>

#include "radixlex/alphabet.hpp"

namespace radixlex {

/// Complete deterministic finite automaton. The transition function is total:
/// delta has num_states * alphabet.size() entries, row-major by state.
struct Dfa {
    Alphabet alphabet;
    std::uint32_t num_states = 0;
    State initial = 0;
    std::vector<bool> accepting;  // indexed by state
    std::vector<State> delta;     // delta[q * |alphabet| + a]

    State step(State q, Letter a) const { return delta[q * alphabet.size() + a]; }
    State run(State q, const Word& w) const {
        for (Letter a : w.letters) q = step(q, a);
        return q;
    }
    bool is_accepting(State q) const { return accepting[q]; }
    bool accepts(const Word& w) const { return accepting[run(initial, w)]; }

    /// Throws ValidationError if the automaton is malformed.
    void validate() const;

    bool operator==(const Dfa&) const = default;
};

/// Builder-style helper: allocate a complete DFA with all transitions pointing
/// at state 0 and no accepting states.
Dfa make_dfa(Alphabet alphabet, std::uint32_t num_states, State initial);

/// Sequence of the |w|+1 states visited when reading w from q.
std::vector<State> trace(const Dfa& a, State q, const Word& w);

enum class ProductMode { Intersection, Union };

/// Product automaton over reachable state pairs only; both inputs must share
/// an alphabet.
Dfa product(const Dfa& a, const Dfa& b, ProductMode mode);

/// Complement (flips acceptance; input must be complete, which Dfa guarantees).
Dfa complement(Dfa a);

/// Restrict to states reachable from the initial state (renumbered in BFS
/// order, letters scanned in alphabet order; the result is canonical for the
/// reachable part).
Dfa reachable_part(const Dfa& a);

/// Minimal complete DFA for the same language, in canonical BFS numbering.
/// Two DFAs over the same alphabet have equal languages iff their minimized
/// forms compare equal.
Dfa minimize(const Dfa& a);

bool language_empty(const Dfa& a);
bool language_equal(const Dfa& a, const Dfa& b);

/// Does any word of exactly `len` letters reach acceptance? (table from each
/// state, lengths 0..max_len)
std::vector<std::vector<bool>> acceptance_by_length(const Dfa& a, std::size_t max_len);

/// Same automaton with the alphabet order reversed (letter i becomes
/// |alphabet|-1-i and the symbol sequence is reversed). The language is
/// unchanged as a set of symbol sequences.
Dfa reverse_alphabet_order(const Dfa& a);

/// Same language with unreachable padding states added until at least
/// `min_states` states exist.
Dfa pad_states(Dfa a, std::uint32_t min_states);

/// Same automaton with a different initial state.
Dfa reroot(Dfa a, State new_initial);

}  // namespace radixlex
