#include <doctest.h>

#include "helpers.hpp"
#include "radixlex/families.hpp"
#include "radixlex/measure.hpp"
#include "radixlex/minimal_words.hpp"
#include "radixlex/oracles.hpp"
#include "radixlex/successor.hpp"
#include "radixlex/transducer.hpp"

using namespace radixlex;
using namespace testutil;

namespace {

// Direct evaluation of the displayed set: 1* plus the branch words
// 1^i 0^(k-i+1) 1^j with j >= 1 not a multiple of the i-th prime.
bool smallest_family_member(std::size_t k, const PrimeList& primes, const Word& w) {
    bool all_ones = true;
    for (Letter c : w.letters) all_ones = all_ones && c == 1;
    if (all_ones) return true;
    std::size_t i = 0;
    while (i < w.size() && w[i] == 1) ++i;
    if (i < 1 || i > k) return false;
    std::size_t z = i;
    while (z < w.size() && w[z] == 0) ++z;
    if (z - i != k - i + 1) return false;
    std::size_t j = w.size() - z;
    for (std::size_t t = z; t < w.size(); ++t)
        if (w[t] != 1) return false;
    return j >= 1 && j % primes.primes[i - 1] != 0;
}

}  // namespace

TEST_CASE("primes and lcm") {
    PrimeList p = first_primes(3);
    CHECK(p.primes == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(p.product == 30);
    CHECK(lcm_of({}) == 1);
    CHECK(lcm_of({4, 6}) == 12);
}

TEST_CASE("smallest-words family membership") {
    for (std::size_t k = 1; k <= 3; ++k) {
        Dfa fam = family_smallest_lb(k);
        PrimeList primes = first_primes(k);
        std::uint64_t prime_sum = 0;
        for (auto p : primes.primes) prime_sum += p;
        // k = 1 needs one extra state: the residuals of "", "1", "11", "10",
        // "101" and the dead state are pairwise distinct, which already makes
        // six classes against the advertised five.
        CHECK(fam.num_states <= k * k + prime_sum + (k == 1 ? 3 : 2));
        for (const Word& w : all_words_up_to(fam.alphabet, 12))
            CHECK(fam.accepts(w) == smallest_family_member(k, primes, w));
    }
}

TEST_CASE("no branch word carries a multiple-of-all-primes tail") {
    for (std::size_t k = 1; k <= 3; ++k) {
        Dfa fam = family_smallest_lb(k);
        PrimeList primes = first_primes(k);
        for (std::size_t i = 1; i <= k; ++i) {
            Word w;
            for (std::size_t t = 0; t < i; ++t) w.push_back(1);
            for (std::size_t t = 0; t < k - i + 1; ++t) w.push_back(0);
            for (std::uint64_t t = 0; t < primes.product; ++t) w.push_back(1);
            CHECK_FALSE(fam.accepts(w));
        }
    }
}

TEST_CASE("smallest-words family details for k = 2") {
    Dfa fam = family_smallest_lb(2);
    CHECK(fam.accepts(wd(fam, "100111")));        // 3 odd
    CHECK_FALSE(fam.accepts(wd(fam, "10011")));   // 2 even
    // the all-ones word of length k+1+p is the smallest of its length
    auto table = oracle_smallest(fam, 9);
    REQUIRE(table[9].has_value());
    CHECK(*table[9] == Word(std::vector<Letter>(9, 1)));
}

TEST_CASE("successor family shape") {
    Dfa fam = family_successor_lb(2);
    CHECK(fam.num_states == 7);  // 2 + 2 + 3
    CHECK(fam.alphabet.size() == 3);
    CHECK(fam.alphabet.symbol(2) == "#");

    // "#" alone runs into the error state
    CHECK_FALSE(fam.accepts(wd(fam, "#")));
    // bare digits are members (zero tail)
    CHECK(fam.accepts(wd(fam, "1")));
    CHECK(fam.accepts(wd(fam, "2")));
    // letter "2" counts in twos, letter "1" in threes
    CHECK(fam.accepts(wd(fam, "2##")));
    CHECK_FALSE(fam.accepts(wd(fam, "2###")));
    CHECK(fam.accepts(wd(fam, "1###")));
    CHECK_FALSE(fam.accepts(wd(fam, "1##")));
    CHECK_FALSE(fam.accepts(wd(fam, "12")));

    CHECK(minimal_word(fam) == wd(fam, "1"));
}

TEST_CASE("successor family transducer values") {
    Dfa fam = family_successor_lb(2);
    Transducer t = successor_transducer(fam);
    TransducerRunner runner(t);
    for (std::size_t ell = 1; ell <= 3; ++ell) {
        Word in = wd(fam, "2");
        for (std::size_t j = 0; j < 6 * ell; ++j) in.push_back(2);
        Word expected = wd(fam, "2");
        for (std::size_t j = 0; j < 6 * ell + 2; ++j) expected.push_back(2);
        CHECK(runner.apply(in) == expected);
    }
}

TEST_CASE("measurement report") {
    Dfa all = all_words_dfa("01");
    MeasureReport r = measure(all);
    CHECK(r.n == 1);
    // S({0,1}*) = 0*, a two-state complete machine
    CHECK(r.s_naive_states == 2);
    CHECK(r.s_cover_states == 2);
    CHECK(r.b_states == 2);
    CHECK(r.x_states == 1);
    CHECK(r.thin_leq_states == 4);
    CHECK(r.k_le_n4_plus_n3);
    CHECK(r.xz_le_n3_plus_n2);
    CHECK(r.y_sum_le_n);
    CHECK(r.pairwise_cycle_disjoint);

    MeasureReport e = measure(empty_language_dfa("01"));
    CHECK(e.s_naive_states == 1);
    CHECK(e.s_cover_states == 1);
    CHECK(e.b_states == 1);
    CHECK(e.cover_k == 0);

    MeasureReport f = measure(family_smallest_lb(2));
    CHECK(f.s_cover_states >= 6);

    CHECK(measure_to_csv_row(r).find(',') != std::string::npos);
    CHECK(measure_to_json(r).find("\"bounds\"") != std::string::npos);
}
