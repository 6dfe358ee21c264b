#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radixlex/alphabet.hpp"
#include "radixlex/dfa.hpp"

namespace radixlex {

/// Reference implementations computed straight from the definitions. These
/// certify the automata constructions, so they use their own plain search
/// code and none of the construction machinery.

/// Lexicographically least accepted word of each length 0..max_len (nullopt
/// where the language has no word of that length).
std::vector<std::optional<Word>> oracle_smallest(const Dfa& a, std::size_t max_len);

/// Lexicographically greatest accepted word of each length.
std::vector<std::optional<Word>> oracle_largest(const Dfa& a, std::size_t max_len);

/// Least accepted word strictly greater than w in radix order. Searches
/// lengths |w| .. |w|+n+1 which suffices: a DFA with n states accepting any
/// word longer than |w| accepts one of length at most |w|+n.
std::optional<Word> oracle_successor(const Dfa& a, const Word& w);

/// Per length 0..max_len: true iff no accepted word has that length.
std::vector<bool> oracle_x(const Dfa& a, std::size_t max_len);

/// Per-length table for "no strictly larger accepted word of the same
/// length": a word belongs iff its length has no accepted word at all, or it
/// is >= the greatest accepted word of its length.
struct BgeqTable {
    std::vector<std::optional<Word>> greatest;  // per length
    bool contains(const Word& w) const {
        const auto& g = greatest[w.size()];
        return !g || radix_compare(w, *g) != std::strong_ordering::less;
    }
};
BgeqTable oracle_bgeq(const Dfa& a, std::size_t max_len);

/// First `count` accepted words in radix order.
std::vector<Word> oracle_enumerate(const Dfa& a, std::size_t count);

/// At most one accepted word per length, checked for lengths 0..bound by
/// counting words per length.
bool oracle_is_thin_up_to(const Dfa& a, std::size_t bound);

}  // namespace radixlex
