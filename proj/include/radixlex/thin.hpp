#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radixlex/dfa.hpp"
#include "radixlex/nfa.hpp"

namespace radixlex {

/// Exact thinness decision (at most one accepted word per length), via the
/// squared automaton: the language is not thin iff a pair of runs over
/// distinct same-length words reaches two accepting states.
bool is_thin(const Dfa& a);

/// Lazily materialized map length -> the unique accepted word of that length
/// of a thin language.
class ThinWitness {
  public:
    explicit ThinWitness(Dfa a);
    std::optional<Word> word_at(std::size_t len);

  private:
    Dfa a_;
    std::vector<std::vector<bool>> alive_;  // completion table, grown on demand
};

/// 2n-state unambiguous NFA for {v : some u in L, |u| = |v|, v <= u}; the
/// input language must be thin (checked; throws std::invalid_argument).
/// States are (q, 0|1): 0 = still equal to the L-word, 1 = already below it.
Nfa thin_leq_ufa(const Dfa& a);

/// Mirror image: {v : some u in L, |u| = |v|, v >= u}.
Nfa thin_geq_ufa(const Dfa& a);

/// DFA for the words whose length is the length of no accepted word, via the
/// unary subset sequence: project labels away, iterate the reachable subset
/// sequence to its entry point and period, complement, and expand back to the
/// alphabet (all letters act identically).
Dfa x_dfa(const Dfa& a);

/// Unambiguous NFA for "no strictly larger word of the same length in L":
/// disjoint union of thin_geq over the largest-words DFA (lengths where L has
/// words) and x_dfa (lengths where it has none), behind a fresh initial
/// state. Certified unambiguous.
Nfa bgeq_ufa(const Dfa& a);

}  // namespace radixlex
