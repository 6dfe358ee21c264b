#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radixlex/alphabet.hpp"
#include "radixlex/dfa.hpp"

namespace radixlex {

/// Which of the three swap cases holds for x u u y z vs x u y v z vs x y v v z
/// (|u| = |v|): decided by comparing uy with yv.
enum class SwapCase { FirstSmaller, ThirdSmaller, AllEqual };
SwapCase swap_trichotomy(const Word& x, const Word& u, const Word& y, const Word& v,
                         const Word& z);

/// One block u v^i of a word factorization: u is a simple path, v a simple
/// cycle at the state reached after u (v may be empty only in a final block).
struct FactorBlock {
    Word path;   // u
    Word cycle;  // v
    std::uint64_t exponent = 1;
};

struct Factorization {
    std::vector<FactorBlock> blocks;
    Word reassemble() const;
};

/// Deterministic factorization of w relative to the DFA: repeatedly cut the
/// shortest prefix whose trace revisits exactly one state, split it at the
/// loop, and merge consecutive equal loops.
Factorization factorize(const Dfa& a, const Word& w);

/// x y* z with the cycle condition (initial . x) . y = initial . x.
struct LassoTriple {
    Word x, y, z;
    bool operator==(const LassoTriple&) const = default;
    auto operator<=>(const LassoTriple&) const = default;
};

/// The unique word x y^e z of the given length in the lasso language, if any.
std::optional<Word> lasso_word_of_length(const LassoTriple& l, std::size_t len);
bool lasso_contains(const LassoTriple& l, const Word& w);

struct PumpDecomposition {
    LassoTriple triple;
    std::uint64_t exponent = 0;
};

/// Pump decomposition w = x y^e z with |xz| <= n^3, |y| <= n and the cycle
/// condition; defined for smallest words of their length. Throws
/// std::invalid_argument when the factorization shape certifies that w is not
/// such a word (duplicate cycle lengths or two oversized exponents). The
/// automaton is padded to at least 3 states internally.
PumpDecomposition extract_pump(const Dfa& a, const Word& w);

/// The state sets of the two cycles are equal or disjoint. Cycle states are
/// those visited by trace(initial . x, y); an empty cycle contributes the
/// singleton of its anchor state. Both triples must satisfy the cycle
/// condition.
bool are_cycle_disjoint(const Dfa& a, const LassoTriple& s, const LassoTriple& t);

struct OverlapResolution {
    int truncated;                        // 0 = first argument, 1 = second
    std::vector<LassoTriple> replacements;  // bounded words as (w, eps, eps)
};

/// For two overlapping (not cycle-disjoint) lassos, decides which one can
/// only contribute smallest words of bounded length, and returns that lasso's
/// words of length <= n^3+n^2 as replacement triples.
OverlapResolution resolve_overlap(const Dfa& a, const LassoTriple& s, const LassoTriple& t);

/// Finite union of lassos sandwiched between S(L) and L.
struct TupleCover {
    Alphabet alphabet;
    std::uint32_t source_n = 0;  // padded state count of the source DFA
    std::vector<LassoTriple> triples;
};

/// Cover construction: per-length minima up to n^3+n^2 become plain word
/// triples; every simple cycle that survives pairwise overlap resolution
/// contributes, per |xz| length, the radix-least lasso; classes with equal
/// (|xz|, |y|) are collapsed. Throws if more than max_tuples would be kept.
TupleCover simplify_tuples(const Dfa& a, std::size_t max_tuples = 1'000'000);

/// DFA for S(union of the cover's lassos): a counter component (exact length
/// up to n^3+n^2, then modulo lcm of the cycle lengths) in product with one
/// live-position component per lasso; a state is final iff the word it
/// represents is the least same-length word of the union.
Dfa build_cover_dfa(const TupleCover& cover);

/// Pair construction: track (state on w, set of states reached by strictly
/// smaller words of the same length); accept iff the state accepts and the
/// tracked set contains no accepting state.
Dfa smallest_words_dfa_naive(const Dfa& a);

/// Smallest-words DFA via the cover pipeline:
/// minimize(build_cover_dfa(simplify_tuples(a))).
Dfa smallest_words_dfa(const Dfa& a);

/// Largest words of each length: smallest-words construction under the
/// reversed alphabet order.
Dfa largest_words_dfa(const Dfa& a);

/// Pair-construction route to the largest-words DFA (language-equal to
/// largest_words_dfa; cheap enough to build per seed state).
Dfa largest_words_dfa_naive(const Dfa& a);

}  // namespace radixlex
