#include <doctest.h>

#include <stdexcept>

#include <random>

#include "helpers.hpp"
#include "radixlex/dfa.hpp"
#include "radixlex/sample.hpp"

using namespace radixlex;
using namespace testutil;

TEST_CASE("accepts and trace") {
    Dfa all = all_words_dfa("ab");
    CHECK(all.accepts(wd(all, "")));
    CHECK(all.accepts(wd(all, "ba")));

    Dfa ab = ab_star_dfa();
    CHECK(ab.accepts(wd(ab, "ab")));
    CHECK_FALSE(ab.accepts(wd(ab, "a")));
    CHECK(ab.accepts(wd(ab, "")));

    CHECK(trace(ab, 0, Word{}) == std::vector<State>{0});
    Dfa one = all_words_dfa("a");
    CHECK(trace(one, 0, wd(one, "aa")) == std::vector<State>{0, 0, 0});
    CHECK(trace(ab, 0, wd(ab, "ab")) == std::vector<State>{0, 1, 0});
}

TEST_CASE("product languages") {
    Dfa all = all_words_dfa("a");
    Dfa two = unary_multiples_dfa(2);
    Dfa three = unary_multiples_dfa(3);

    CHECK(language_equal(product(all, two, ProductMode::Intersection), two));
    CHECK(language_equal(product(empty_language_dfa("a"), two, ProductMode::Union), two));

    Dfa six = product(two, three, ProductMode::Intersection);
    for (std::size_t len = 0; len <= 12; ++len) {
        Word w(std::vector<Letter>(len, 0));
        CHECK(six.accepts(w) == (len % 6 == 0));
    }

    CHECK_THROWS_AS(product(all_words_dfa("a"), all_words_dfa("b"), ProductMode::Union),
                    std::invalid_argument);
}

TEST_CASE("product agrees with membership on random automata") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        Dfa a = random_dfa(rng, 5, 2);
        Dfa b = random_dfa(rng, 5, 2);
        while (!(b.alphabet == a.alphabet)) b = random_dfa(rng, 5, 2);
        Dfa inter = product(a, b, ProductMode::Intersection);
        Dfa uni = product(a, b, ProductMode::Union);
        for (const Word& w : all_words_up_to(a.alphabet, 8)) {
            CHECK(inter.accepts(w) == (a.accepts(w) && b.accepts(w)));
            CHECK(uni.accepts(w) == (a.accepts(w) || b.accepts(w)));
        }
    }
}

TEST_CASE("trace length and adjacency") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 30; ++i) {
        Dfa a = random_dfa(rng, 5, 3);
        Word w;
        for (int j = 0; j < 9; ++j) w.push_back(static_cast<Letter>(rng() % a.alphabet.size()));
        auto seq = trace(a, a.initial, w);
        CHECK(seq.size() == w.size() + 1);
        for (std::size_t j = 0; j < w.size(); ++j) CHECK(seq[j + 1] == a.step(seq[j], w[j]));
    }
}

TEST_CASE("minimize merges equivalent states") {
    Dfa one = all_words_dfa("a");
    CHECK(minimize(one).num_states == 1);

    // a+ with two interchangeable accepting states
    Dfa redundant = table_dfa("a", 3, 0, {1, 2, 1}, {1, 2});
    Dfa min = minimize(redundant);
    CHECK(min.num_states == 2);
    for (std::size_t len = 0; len <= 8; ++len) {
        Word w(std::vector<Letter>(len, 0));
        CHECK(min.accepts(w) == redundant.accepts(w));
    }
}

TEST_CASE("minimize preserves language on random automata") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        Dfa a = random_dfa(rng, 6, 3);
        Dfa m = minimize(a);
        CHECK(m.num_states <= a.num_states);
        for (const Word& w : all_words_up_to(a.alphabet, 6)) CHECK(m.accepts(w) == a.accepts(w));
    }
}

TEST_CASE("language equality is exact") {
    CHECK(language_equal(unary_multiples_dfa(2), pad_states(unary_multiples_dfa(2), 7)));
    CHECK_FALSE(language_equal(unary_multiples_dfa(2), unary_multiples_dfa(3)));
    // (a^2)* and (a^3)* differ first at length 2; equal up to length 1 only.
    CHECK(language_empty(empty_language_dfa("ab")));
    CHECK_FALSE(language_empty(ab_star_dfa()));
}

TEST_CASE("alphabet order reversal") {
    Dfa d = one_then_any_dfa();
    Dfa r = reverse_alphabet_order(d);
    CHECK(r.alphabet.symbol(0) == "1");
    CHECK(r.alphabet.symbol(1) == "0");
    // language is the same set of symbol sequences
    for (const Word& w : all_words_up_to(d.alphabet, 6)) {
        Word rw = w;
        for (auto& c : rw.letters) c = 1 - c;
        CHECK(d.accepts(w) == r.accepts(rw));
    }
    CHECK(language_equal(reverse_alphabet_order(r), d));
}

TEST_CASE("acceptance by length table") {
    Dfa two = unary_multiples_dfa(2);
    auto alive = acceptance_by_length(two, 7);
    for (std::size_t r = 0; r <= 7; ++r) CHECK(alive[r][0] == (r % 2 == 0));
}
