#pragma once

#include <string>
#include <vector>

#include "radixlex/alphabet.hpp"
#include "radixlex/dfa.hpp"

namespace testutil {

using namespace radixlex;

inline Dfa table_dfa(const std::string& letters, std::uint32_t n, State initial,
                     const std::vector<State>& flat_delta, const std::vector<State>& accepting) {
    Dfa d = make_dfa(Alphabet::from_chars(letters), n, initial);
    d.delta = flat_delta;
    for (State q : accepting) d.accepting[q] = true;
    d.validate();
    return d;
}

inline Word wd(const Dfa& d, const std::string& text) { return parse_word(d.alphabet, text); }
inline Word wd(const Alphabet& ab, const std::string& text) { return parse_word(ab, text); }

// All words over the given alphabet: one accepting state.
inline Dfa all_words_dfa(const std::string& letters) {
    std::vector<State> delta(letters.size(), 0);
    return table_dfa(letters, 1, 0, delta, {0});
}

inline Dfa empty_language_dfa(const std::string& letters) {
    std::vector<State> delta(letters.size(), 0);
    return table_dfa(letters, 1, 0, delta, {});
}

// (ab)* over {a,b}: states 0 (accepting), 1, 2 = sink.
inline Dfa ab_star_dfa() {
    return table_dfa("ab", 3, 0,
                     {
                         1, 2,  // 0: a->1, b->sink
                         2, 0,  // 1: a->sink, b->0
                         2, 2,  // sink
                     },
                     {0});
}

// (10)* over {0,1}.
inline Dfa one_zero_star_dfa() {
    return table_dfa("01", 3, 0,
                     {
                         2, 1,  // 0: '0'->sink, '1'->1
                         0, 2,  // 1: '0'->0, '1'->sink
                         2, 2,  // sink
                     },
                     {0});
}

// 1(0+1)* over {0,1}.
inline Dfa one_then_any_dfa() {
    return table_dfa("01", 3, 0,
                     {
                         2, 1,  // 0: '0'->sink, '1'->1
                         1, 1,  // 1: loops
                         2, 2,  // sink
                     },
                     {1});
}

// Even-length words over {0,1}.
inline Dfa even_length_dfa() {
    return table_dfa("01", 2, 0,
                     {
                         1, 1,  // 0 -> 1
                         0, 0,  // 1 -> 0
                     },
                     {0});
}

// Exactly the word "0".
inline Dfa single_zero_dfa() {
    return table_dfa("01", 3, 0,
                     {
                         1, 2,  // 0: '0'->1, '1'->sink
                         2, 2,  // 1: -> sink
                         2, 2,  // sink
                     },
                     {1});
}

// (a^p)* over {a}.
inline Dfa unary_multiples_dfa(std::uint32_t p) {
    std::vector<State> delta(p);
    for (std::uint32_t i = 0; i < p; ++i) delta[i] = (i + 1) % p;
    return table_dfa("a", p, 0, delta, {0});
}

// Every word over the alphabet of d, lengths 0..max_len, in radix order.
inline std::vector<Word> all_words_up_to(const Alphabet& ab, std::size_t max_len) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    out.push_back(Word{});
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (Letter c = 0; c < ab.size(); ++c) {
                Word e = w;
                e.push_back(c);
                next.push_back(e);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace testutil
