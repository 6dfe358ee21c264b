#include <doctest.h>

#include <stdexcept>

#include <random>

#include "helpers.hpp"
#include "radixlex/alphabet.hpp"

using namespace radixlex;
using testutil::wd;

TEST_CASE("radix order basics") {
    Alphabet ab = Alphabet::from_chars("01");
    CHECK(radix_compare(wd(ab, ""), wd(ab, "0")) == std::strong_ordering::less);
    CHECK(radix_compare(wd(ab, "01"), wd(ab, "10")) == std::strong_ordering::less);
    CHECK(radix_compare(wd(ab, "10"), wd(ab, "011")) == std::strong_ordering::less);
    CHECK(radix_compare(wd(ab, "10"), wd(ab, "10")) == std::strong_ordering::equal);
    CHECK(wd(ab, "1") < wd(ab, "00"));
}

TEST_CASE("radix order is total on sampled triples") {
    std::mt19937_64 rng(7);
    Alphabet ab = Alphabet::from_chars("012");
    auto rand_word = [&] {
        Word w;
        std::size_t len = rng() % 6;
        for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(rng() % 3));
        return w;
    };
    for (int i = 0; i < 2000; ++i) {
        Word a = rand_word(), b = rand_word(), c = rand_word();
        auto ab_cmp = radix_compare(a, b);
        auto ba_cmp = radix_compare(b, a);
        // antisymmetry
        CHECK(ab_cmp == (ba_cmp == std::strong_ordering::less ? std::strong_ordering::greater
                         : ba_cmp == std::strong_ordering::greater ? std::strong_ordering::less
                                                                   : std::strong_ordering::equal));
        // totality: equal iff identical
        CHECK((ab_cmp == std::strong_ordering::equal) == (a == b));
        // transitivity
        if (radix_compare(a, b) != std::strong_ordering::greater &&
            radix_compare(b, c) != std::strong_ordering::greater)
            CHECK(radix_compare(a, c) != std::strong_ordering::greater);
    }
}

TEST_CASE("word parsing and formatting") {
    Alphabet ab = Alphabet::from_chars("abc");
    CHECK(parse_word(ab, "") == Word{});
    CHECK(parse_word(ab, "cab") == Word{2, 0, 1});
    CHECK(format_word(ab, Word{2, 0, 1}) == "cab");
    CHECK_THROWS_AS(parse_word(ab, "abd"), std::invalid_argument);

    Alphabet multi({"aa", "b"});
    CHECK(parse_word(multi, "aa,b,aa", ",") == Word{0, 1, 0});
    CHECK(format_word(multi, Word{0, 1}, ",") == "aa,b");
    CHECK(parse_word(multi, "aab") == Word{0, 1});

    auto make_alphabet = [](std::vector<std::string> symbols) { return Alphabet(std::move(symbols)); };
    CHECK_THROWS_AS(make_alphabet({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(make_alphabet({""}), std::invalid_argument);
}

TEST_CASE("word helpers") {
    Alphabet ab = Alphabet::from_chars("ab");
    Word u = wd(ab, "ab"), v = wd(ab, "ba");
    CHECK(concat(u, v) == wd(ab, "abba"));
    CHECK(repeated(u, 3) == wd(ab, "ababab"));
    CHECK(repeated(u, 0) == Word{});
    CHECK(is_prefix_of(wd(ab, "ab"), wd(ab, "abba")));
    CHECK_FALSE(is_prefix_of(wd(ab, "b"), wd(ab, "abba")));
}
