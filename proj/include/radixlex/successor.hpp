#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radixlex/dfa.hpp"
#include "radixlex/transducer.hpp"

namespace radixlex {

/// Symbol prepended as the minimum of the extended alphabet by pad_automaton.
inline const std::string kPadSymbol = "⋄";

/// DFA for pad* L over the extended alphabet (pad symbol first, so letter 0).
struct PaddedDfa {
    Dfa dfa;
    std::uint32_t original_state_count = 0;
};

/// Adds a fresh initial state with a pad self-loop (mirroring the old initial
/// state on real letters) and a pad sink; n + 2 states total. Throws when the
/// pad symbol already occurs in the alphabet.
PaddedDfa pad_automaton(const Dfa& a);

/// Unambiguous transducer that maps every word whose successor in L(a) has
/// equal length to that successor, and rejects all other words. Structure:
/// a copy phase following the automaton, a nondeterministic branch that
/// outputs some letter b greater than the input letter a, and a verification
/// phase running three component families: no larger same-length word after
/// ua, the output suffix is the least same-length completion after ub, and no
/// same-length word after uc for any letter c between a and b.
Transducer length_preserving_successor_transducer(const Dfa& a);

/// Unambiguous transducer mapping every non-maximal word to its successor in
/// L(a) (maximal words have no accepting run): pads the automaton, restricts
/// the input to exactly n+2 pads followed by real letters, builds the
/// length-preserving machine, and turns pad transitions into epsilon moves.
Transducer successor_transducer(const Dfa& a);

/// Least accepted word in radix order; nullopt for the empty language.
std::optional<Word> minimal_word(const Dfa& a);

/// First `count` accepted words in radix order: minimal_word followed by
/// repeated successor application.
std::vector<Word> enumerate_words(const Dfa& a, std::size_t count);

struct PaddedGapCheck {
    Word k_successor;                     // over the padded alphabet
    bool length_in_range = false;         // |u| <= |v| <= |u| + n
    bool padded_successor_matches = false;  // successor of pad^n u is the padded v
};

/// Test support for the padding argument: u (over the padded alphabet,
/// without pads) has K-successor v; checks |u| <= |v| <= |u|+n and that the
/// successor of pad^n u in the padded language is pad^{n+|u|-|v|} v. Throws
/// when u is K-maximal.
PaddedGapCheck padded_length_gap(const PaddedDfa& p, const Word& u);

}  // namespace radixlex
