#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radixlex/dfa.hpp"
#include "radixlex/transducer.hpp"

namespace radixlex {

/// Equivalence checks between constructions and the reference oracles, shared
/// by the acceptance suite and the command-line `check` subcommand.

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

/// Number of accepted words per length 0..max_len (exact path counting).
std::vector<std::uint64_t> dfa_word_counts(const Dfa& d, std::size_t max_len);

/// The DFA accepts exactly the table entry at each length (and nothing else).
bool dfa_matches_singleton_table(const Dfa& d, const std::vector<std::optional<Word>>& table,
                                 std::size_t max_len, std::string* detail);

/// Per-length threshold semantics, checked on every word up to max_len:
///   Leq: member iff the table has a word of that length and w <= it;
///   Geq: member iff the table has a word of that length and w >= it;
///   GeqOrEmpty: member iff the length is absent from the table or w >= it.
enum class ThresholdMode { Leq, Geq, GeqOrEmpty };
bool dfa_matches_threshold(const Dfa& machine, const std::vector<std::optional<Word>>& table,
                           std::size_t max_len, ThresholdMode mode, std::string* detail);

/// Sorted accepted words per length (plain DFS enumeration).
std::vector<std::vector<Word>> accepted_words_by_length(const Dfa& a, std::size_t max_len);

/// Reference successor queries backed by enumeration tables; equivalent to
/// oracle_successor for words up to max_len.
struct SuccessorTables {
    std::vector<std::vector<Word>> by_length;        // sorted members, lengths 0..max_len
    std::vector<std::optional<Word>> min_by_length;  // lengths 0..max_len+n+2
    std::optional<Word> successor(const Word& w) const;
};
SuccessorTables make_successor_tables(const Dfa& a, std::size_t max_len);

/// Exhaustive comparison of a successor transducer against the reference on
/// every input up to max_len, including the at-most-one-run requirement.
/// With length_preserving_only the machine must map exactly the words whose
/// successor has equal length and reject everything else.
bool check_successor_transducer(const Transducer& t, const Dfa& a, std::size_t max_len,
                                bool length_preserving_only, std::string* detail);

/// The full oracle-equivalence suite for one automaton; deterministic for a
/// fixed seed (the seed drives the sampled successor spot checks).
std::vector<CheckResult> oracle_equivalence_suite(const Dfa& a, std::size_t max_len,
                                                  std::uint64_t seed);

}  // namespace radixlex
