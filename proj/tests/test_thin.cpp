#include <doctest.h>

#include <stdexcept>

#include <random>

#include "helpers.hpp"
#include "radixlex/minimal_words.hpp"
#include "radixlex/oracles.hpp"
#include "radixlex/sample.hpp"
#include "radixlex/thin.hpp"

using namespace radixlex;
using namespace testutil;

TEST_CASE("thinness decision") {
    CHECK(is_thin(one_zero_star_dfa()));
    CHECK_FALSE(is_thin(all_words_dfa("01")));
    CHECK(is_thin(empty_language_dfa("01")));
    CHECK(is_thin(unary_multiples_dfa(3)));

    std::mt19937_64 rng(79);
    for (int i = 0; i < 40; ++i) {
        Dfa a = random_dfa(rng, 5, 3);
        Dfa s = smallest_words_dfa(a);
        CHECK(is_thin(s));
        CHECK(is_thin(s) == oracle_is_thin_up_to(s, 2 * s.num_states + 4));
    }
}

TEST_CASE("thin witness") {
    ThinWitness w(one_zero_star_dfa());
    CHECK(w.word_at(0) == Word{});
    CHECK_FALSE(w.word_at(1).has_value());
    CHECK(w.word_at(4) == parse_word(Alphabet::from_chars("01"), "1010"));
}

TEST_CASE("comparison machines on (10)*") {
    Dfa d = one_zero_star_dfa();
    Nfa leq = thin_leq_ufa(d);
    CHECK(leq.num_states == 2 * d.num_states);
    CHECK(is_unambiguous(leq));
    CHECK(nfa_accepts(leq, wd(d, "01")));
    CHECK_FALSE(nfa_accepts(leq, wd(d, "11")));
    CHECK(nfa_accepts(leq, Word{}));
    CHECK(nfa_accepts(leq, wd(d, "10")));
    CHECK_FALSE(nfa_accepts(leq, wd(d, "0")));  // no member of length 1

    Nfa geq = thin_geq_ufa(d);
    CHECK(nfa_accepts(geq, wd(d, "11")));
    CHECK_FALSE(nfa_accepts(geq, wd(d, "01")));
    CHECK(nfa_accepts(geq, Word{}));

    CHECK_THROWS_AS(thin_leq_ufa(all_words_dfa("01")), std::invalid_argument);
}

TEST_CASE("comparison machines against the definition") {
    std::mt19937_64 rng(83);
    int built = 0;
    for (int i = 0; i < 60 && built < 25; ++i) {
        Dfa a = random_dfa(rng, 4, 2);
        Dfa s = smallest_words_dfa(a);
        if (language_empty(s)) continue;
        ++built;
        Nfa leq = thin_leq_ufa(s);
        Nfa geq = thin_geq_ufa(s);
        CHECK(leq.num_states == 2 * s.num_states);
        CHECK(geq.num_states == 2 * s.num_states);
        CHECK(is_unambiguous(leq));
        CHECK(is_unambiguous(geq));
        ThinWitness witness(s);
        for (const Word& w : all_words_up_to(s.alphabet, 7)) {
            auto u = witness.word_at(w.size());
            bool in_leq = u && radix_compare(w, *u) != std::strong_ordering::greater;
            bool in_geq = u && radix_compare(w, *u) != std::strong_ordering::less;
            CHECK(nfa_accepts(leq, w) == in_leq);
            CHECK(nfa_accepts(geq, w) == in_geq);
            if (u)  // partition at inhabited lengths
                CHECK((in_leq || in_geq));
        }
        // run-count check: the per-length sum of accepting runs must equal
        // the member count, which pins every word at no more than one run
        const std::size_t bound = 2 * s.num_states + 4;
        auto leq_counts = nfa_run_counts_by_length(leq, bound);
        auto geq_counts = nfa_run_counts_by_length(geq, bound);
        const std::uint64_t k = s.alphabet.size();
        for (std::size_t len = 0; len <= bound; ++len) {
            auto u = witness.word_at(len);
            std::uint64_t rank = 0;
            if (u)
                for (Letter c : u->letters) rank = rank * k + c;
            CHECK(leq_counts[len] == (u ? rank + 1 : 0));
            std::uint64_t full = 1;
            for (std::size_t i = 0; i < len; ++i) full *= k;
            CHECK(geq_counts[len] == (u ? full - rank : 0));
        }
    }
    CHECK(built >= 10);
}

TEST_CASE("excluded-length automata") {
    Dfa two = table_dfa("a", 2, 0, {1, 0}, {0});  // (aa)*
    Dfa x = x_dfa(two);
    for (std::size_t len = 0; len <= 15; ++len)
        CHECK(x.accepts(Word(std::vector<Letter>(len, 0))) == (len % 2 == 1));

    Dfa none = empty_language_dfa("01");
    Dfa all_lengths = x_dfa(none);
    for (const Word& w : all_words_up_to(none.alphabet, 6)) CHECK(all_lengths.accepts(w));

    std::mt19937_64 rng(89);
    for (int i = 0; i < 40; ++i) {
        Dfa a = random_dfa(rng, 5, 3);
        Dfa xa = x_dfa(a);
        auto expected = oracle_x(a, 30);
        for (std::size_t len = 0; len <= 30; ++len) {
            Word w;
            for (std::size_t j = 0; j < len; ++j)
                w.push_back(static_cast<Letter>(rng() % a.alphabet.size()));
            CHECK(xa.accepts(w) == expected[len]);
        }
    }
}

TEST_CASE("no-larger-same-length machines") {
    Dfa all = all_words_dfa("01");
    Nfa bg = bgeq_ufa(all);
    CHECK(is_unambiguous(bg));
    for (const Word& w : all_words_up_to(all.alphabet, 7)) {
        bool ones = true;
        for (Letter c : w.letters) ones = ones && c == 1;
        CHECK(nfa_accepts(bg, w) == ones);
    }

    Dfa none = empty_language_dfa("01");
    Nfa bg_none = bgeq_ufa(none);
    for (const Word& w : all_words_up_to(none.alphabet, 5)) CHECK(nfa_accepts(bg_none, w));

    std::mt19937_64 rng(97);
    for (int i = 0; i < 25; ++i) {
        Dfa a = random_dfa(rng, 4, 2);
        Nfa bg_a = bgeq_ufa(a);
        CHECK(is_unambiguous(bg_a));
        auto table = oracle_bgeq(a, 8);
        for (const Word& w : all_words_up_to(a.alphabet, 8))
            CHECK(nfa_accepts(bg_a, w) == table.contains(w));
        for (const Word& w : all_words_up_to(a.alphabet, 5))
            CHECK(nfa_accepting_run_count(bg_a, w) <= 1);
    }
}
