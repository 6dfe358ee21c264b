#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "helpers.hpp"
#include "radixlex/minimal_words.hpp"
#include "radixlex/oracles.hpp"
#include "radixlex/sample.hpp"

using namespace radixlex;
using namespace testutil;

namespace {

Word rand_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_len) {
    Word w;
    std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(rng() % letters));
    return w;
}

// DFA used by the overlap examples: an a-cycle 0->1->2->0 with a b-loop on
// state 1, accepting {1}, sink 3.
Dfa overlap_dfa() {
    return table_dfa("ab", 4, 0,
                     {
                         1, 3,  // 0
                         2, 1,  // 1
                         0, 3,  // 2
                         3, 3,  // 3
                     },
                     {1});
}

void check_cover_invariants(const Dfa& a, const TupleCover& cover) {
    const std::uint64_t n = cover.source_n;
    CHECK(cover.triples.size() <= n * n * n * n + n * n * n);
    std::set<std::size_t> y_lengths;
    std::uint64_t y_sum = 0;
    Dfa padded = pad_states(a, 3);
    for (const auto& t : cover.triples) {
        CHECK(t.x.size() + t.z.size() <= n * n * n + n * n);
        if (!t.y.empty() && y_lengths.insert(t.y.size()).second) y_sum += t.y.size();
        // every lasso is inside the language
        State p = padded.run(padded.initial, t.x);
        CHECK(padded.run(p, t.y) == p);
        CHECK(padded.accepting[padded.run(p, t.z)]);
    }
    CHECK(y_sum <= n);
    for (std::size_t i = 0; i < cover.triples.size(); ++i) {
        if (cover.triples[i].y.empty()) continue;
        for (std::size_t j = i + 1; j < cover.triples.size(); ++j) {
            if (cover.triples[j].y.empty()) continue;
            CHECK(are_cycle_disjoint(padded, cover.triples[i], cover.triples[j]));
        }
    }
}

void check_sandwich(const Dfa& a, const TupleCover& cover, std::size_t max_len) {
    auto smallest = oracle_smallest(a, max_len);
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (!smallest[len]) continue;
        bool covered = false;
        for (const auto& t : cover.triples)
            if (lasso_contains(t, *smallest[len])) {
                covered = true;
                break;
            }
        CHECK(covered);
    }
    // the cover stays inside the language, and its per-length minima agree
    // with the language's (smallest words pass through the approximation)
    std::vector<std::optional<Word>> cover_min(max_len + 1);
    for (const auto& t : cover.triples)
        for (std::size_t len = 0; len <= max_len; ++len)
            if (auto w = lasso_word_of_length(t, len)) {
                CHECK(a.accepts(*w));
                if (!cover_min[len] || *w < *cover_min[len]) cover_min[len] = *w;
            }
    for (std::size_t len = 0; len <= max_len; ++len) {
        CHECK(cover_min[len].has_value() == smallest[len].has_value());
        if (cover_min[len]) CHECK(*cover_min[len] == *smallest[len]);
    }
}

}  // namespace

TEST_CASE("swap trichotomy") {
    Alphabet ab = Alphabet::from_chars("ab");
    Word e;
    CHECK(swap_trichotomy(e, wd(ab, "a"), e, wd(ab, "a"), e) == SwapCase::AllEqual);
    CHECK(swap_trichotomy(e, wd(ab, "a"), e, wd(ab, "b"), e) == SwapCase::FirstSmaller);
    CHECK_THROWS_AS(swap_trichotomy(e, wd(ab, "a"), e, wd(ab, "bb"), e), std::invalid_argument);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 3000; ++i) {
        Word x = rand_word(rng, 2, 3), y = rand_word(rng, 2, 3), z = rand_word(rng, 2, 3);
        std::size_t ul = rng() % 3;
        Word u, v;
        for (std::size_t j = 0; j < ul; ++j) {
            u.push_back(static_cast<Letter>(rng() % 2));
            v.push_back(static_cast<Letter>(rng() % 2));
        }
        Word first = concat(x, concat(u, u, y), z);
        Word middle = concat(x, concat(u, y, v), z);
        Word third = concat(x, concat(y, v, v), z);
        switch (swap_trichotomy(x, u, y, v, z)) {
            case SwapCase::FirstSmaller:
                CHECK(first < middle);
                break;
            case SwapCase::ThirdSmaller:
                CHECK(third < middle);
                break;
            case SwapCase::AllEqual:
                CHECK(first == middle);
                CHECK(middle == third);
                break;
        }
    }
}

TEST_CASE("factorization examples") {
    Dfa one = all_words_dfa("a");
    CHECK(factorize(one, Word{}).blocks.empty());

    auto f = factorize(one, wd(one, "aaa"));
    REQUIRE(f.blocks.size() == 1);
    CHECK(f.blocks[0].path == Word{});
    CHECK(f.blocks[0].cycle == wd(one, "a"));
    CHECK(f.blocks[0].exponent == 3);

    Dfa ab = ab_star_dfa();
    auto g = factorize(ab, wd(ab, "ababab"));
    REQUIRE(g.blocks.size() == 1);
    CHECK(g.blocks[0].path == Word{});
    CHECK(g.blocks[0].cycle == wd(ab, "ab"));
    CHECK(g.blocks[0].exponent == 3);
}

TEST_CASE("factorization invariants on random words") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        Dfa a = random_dfa(rng, 5, 3);
        Word w = rand_word(rng, a.alphabet.size(), 12);
        Factorization f = factorize(a, w);
        CHECK(f.reassemble() == w);
        State q = a.initial;
        for (std::size_t j = 0; j < f.blocks.size(); ++j) {
            const auto& b = f.blocks[j];
            CHECK(b.path.size() + b.cycle.size() <= a.num_states);
            State after_path = a.run(q, b.path);
            if (!b.cycle.empty()) CHECK(a.run(after_path, b.cycle) == after_path);
            q = after_path;
            for (std::uint64_t e = 0; e < b.exponent; ++e) q = a.run(q, b.cycle);
            if (!b.cycle.empty()) {
                Word suffix;
                for (std::size_t r = j + 1; r < f.blocks.size(); ++r) {
                    suffix = concat(suffix, f.blocks[r].path);
                    for (std::uint64_t e = 0; e < f.blocks[r].exponent; ++e)
                        suffix = concat(suffix, f.blocks[r].cycle);
                }
                CHECK_FALSE(is_prefix_of(b.cycle, suffix));
            }
        }
    }
}

TEST_CASE("factorizations of smallest words have distinct cycle lengths") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 120; ++i) {
        Dfa a = random_dfa(rng, 5, 3);
        auto table = oracle_smallest(a, 14);
        for (const auto& entry : table) {
            if (!entry) continue;
            Factorization f = factorize(a, *entry);
            std::set<std::size_t> lens;
            std::size_t oversized = 0;
            for (const auto& b : f.blocks) {
                CHECK(lens.insert(b.cycle.size()).second);
                if (b.exponent > a.num_states) ++oversized;
            }
            CHECK(oversized <= 1);
        }
    }
}

TEST_CASE("pump extraction examples") {
    Dfa ab = ab_star_dfa();
    auto small = extract_pump(ab, wd(ab, "abab"));
    CHECK(small.triple.x == wd(ab, "abab"));
    CHECK(small.triple.y == Word{});
    CHECK(small.triple.z == Word{});
    CHECK(small.exponent == 0);

    Dfa one = all_words_dfa("a");
    Word long_word(std::vector<Letter>(10, 0));
    auto pumped = extract_pump(one, long_word);
    CHECK(pumped.triple.x == Word{});
    CHECK(pumped.triple.y == Word{0});
    CHECK(pumped.triple.z == Word{});
    CHECK(pumped.exponent == 10);
}

TEST_CASE("pump extraction bounds and membership on smallest words") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 80; ++i) {
        Dfa a = random_dfa(rng, 5, 3);
        const std::uint64_t n = std::max<std::uint64_t>(a.num_states, 3);
        auto table = oracle_smallest(a, 14);
        for (const auto& entry : table) {
            if (!entry) continue;
            auto pump = extract_pump(a, *entry);
            CHECK(pump.triple.x.size() + pump.triple.z.size() <= n * n * n);
            CHECK(pump.triple.y.size() <= n);
            for (std::size_t j = 0; j <= 5; ++j) {
                Word w = concat(pump.triple.x, repeated(pump.triple.y, j), pump.triple.z);
                CHECK(a.accepts(w));
            }
        }
    }
}

TEST_CASE("cycle disjointness") {
    Dfa d = overlap_dfa();
    LassoTriple big{Word{}, wd(d, "aaa"), wd(d, "a")};
    LassoTriple small{wd(d, "a"), wd(d, "b"), Word{}};
    LassoTriple rotated{wd(d, "a"), wd(d, "aaa"), Word{}};

    CHECK(are_cycle_disjoint(d, big, big));
    CHECK(are_cycle_disjoint(d, big, rotated));  // equal state sets
    CHECK_FALSE(are_cycle_disjoint(d, big, small));

    // empty cycles are anchored singletons
    LassoTriple eps1{wd(d, "a"), Word{}, Word{}};
    LassoTriple eps2{wd(d, "aa"), Word{}, wd(d, "aa")};
    CHECK(are_cycle_disjoint(d, eps1, eps2));

    CHECK_THROWS_AS(are_cycle_disjoint(d, LassoTriple{Word{}, wd(d, "a"), Word{}}, big),
                    std::invalid_argument);
}

TEST_CASE("overlap resolution") {
    Dfa d = overlap_dfa();
    LassoTriple big{Word{}, wd(d, "aaa"), wd(d, "a")};
    LassoTriple small{wd(d, "a"), wd(d, "b"), Word{}};

    CHECK_THROWS_AS(resolve_overlap(d, big, big), std::invalid_argument);

    auto res = resolve_overlap(d, big, small);
    CHECK(res.truncated == 1);
    const std::uint64_t bound = 64 + 16;  // n^3 + n^2 with n = 4
    CHECK_FALSE(res.replacements.empty());
    for (const auto& r : res.replacements) {
        CHECK(r.y.empty());
        CHECK(r.x.size() <= bound);
        CHECK(d.accepts(r.x));
    }
    // every word of the truncated lasso beyond the exponent bound has a
    // strictly smaller accepted word of the same length
    auto smallest = oracle_smallest(d, 10);
    for (std::size_t i = 4; i <= 9; ++i) {
        Word w = concat(small.x, repeated(small.y, i), small.z);
        REQUIRE(smallest[w.size()].has_value());
        CHECK(*smallest[w.size()] < w);
    }
}

TEST_CASE("tuple cover of the empty language is empty") {
    TupleCover cover = simplify_tuples(empty_language_dfa("01"));
    CHECK(cover.triples.empty());
    Dfa s = build_cover_dfa(cover);
    CHECK(language_empty(s));
}

TEST_CASE("tuple cover of a star") {
    Dfa one = all_words_dfa("a");
    TupleCover cover = simplify_tuples(one);
    check_cover_invariants(one, cover);
    // same language as the single lasso (eps, a, eps) on lengths 0..20
    for (std::size_t len = 0; len <= 20; ++len) {
        bool covered = false;
        Word w(std::vector<Letter>(len, 0));
        for (const auto& t : cover.triples)
            if (lasso_contains(t, w)) covered = true;
        CHECK(covered);
    }
}

TEST_CASE("cover invariants and sandwich on random automata") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 30; ++i) {
        Dfa a = random_dfa(rng, 5, 3);
        TupleCover cover = simplify_tuples(a);
        check_cover_invariants(a, cover);
        check_sandwich(a, cover, 12);
    }
}

TEST_CASE("cover automaton examples") {
    Alphabet ua = Alphabet::from_chars("a");
    TupleCover star{ua, 3, {LassoTriple{Word{}, Word{0}, Word{}}}};
    Dfa s = build_cover_dfa(star);
    for (std::size_t len = 0; len <= 20; ++len) CHECK(s.accepts(Word(std::vector<Letter>(len, 0))));

    Alphabet binary = Alphabet::from_chars("01");
    TupleCover pick{binary, 3,
                    {LassoTriple{Word{0}, Word{}, Word{}}, LassoTriple{Word{1}, Word{}, Word{}}}};
    Dfa p = build_cover_dfa(pick);
    CHECK(p.accepts(Word{0}));
    CHECK_FALSE(p.accepts(Word{1}));
    CHECK_FALSE(p.accepts(Word{}));
    CHECK_FALSE(p.accepts(Word{0, 0}));
}

TEST_CASE("cover automaton handles tails beyond the periodic prefix") {
    Alphabet ab = Alphabet::from_chars("ab");

    // z extends past its periodic prefix: (ab)^e aa, one word per length
    TupleCover tail{ab, 3, {LassoTriple{Word{}, wd(ab, "ab"), wd(ab, "aa")}}};
    Dfa d1 = build_cover_dfa(tail);
    for (const Word& w : all_words_up_to(ab, 10))
        CHECK(d1.accepts(w) == lasso_contains(tail.triples[0], w));

    // z equal to the cycle: (ab)^(e+1), fully periodic
    TupleCover periodic{ab, 3, {LassoTriple{Word{}, wd(ab, "ab"), wd(ab, "ab")}}};
    Dfa d2 = build_cover_dfa(periodic);
    for (const Word& w : all_words_up_to(ab, 10))
        CHECK(d2.accepts(w) == lasso_contains(periodic.triples[0], w));

    // nonempty x, cycle and tail together: a (ba)^e bb
    TupleCover mixed{ab, 3, {LassoTriple{wd(ab, "a"), wd(ab, "ba"), wd(ab, "bb")}}};
    Dfa d3 = build_cover_dfa(mixed);
    for (const Word& w : all_words_up_to(ab, 11))
        CHECK(d3.accepts(w) == lasso_contains(mixed.triples[0], w));

    // several lassos: the smallest same-length word wins
    TupleCover mix2{ab, 3,
                    {LassoTriple{wd(ab, "a"), Word{}, Word{}},
                     LassoTriple{wd(ab, "b"), Word{}, Word{}},
                     LassoTriple{Word{}, wd(ab, "ab"), Word{}}}};
    Dfa d4 = build_cover_dfa(mix2);
    CHECK(d4.accepts(Word{}));
    CHECK(d4.accepts(wd(ab, "a")));
    CHECK_FALSE(d4.accepts(wd(ab, "b")));  // "a" is smaller at length 1
    CHECK(d4.accepts(wd(ab, "ab")));
    CHECK(d4.accepts(wd(ab, "abab")));
    CHECK_FALSE(d4.accepts(wd(ab, "aa")));
}

TEST_CASE("pair construction examples") {
    Dfa all = all_words_dfa("01");
    Dfa s = minimize(smallest_words_dfa_naive(all));
    for (const Word& w : all_words_up_to(all.alphabet, 8)) {
        bool zeros = true;
        for (Letter c : w.letters) zeros = zeros && c == 0;
        CHECK(s.accepts(w) == zeros);
    }

    Dfa one = one_then_any_dfa();
    Dfa s2 = minimize(smallest_words_dfa_naive(one));
    for (const Word& w : all_words_up_to(one.alphabet, 8)) {
        bool expected = !w.empty() && w[0] == 1;
        for (std::size_t i = 1; i < w.size() && expected; ++i) expected = w[i] == 0;
        CHECK(s2.accepts(w) == expected);
    }
}

TEST_CASE("pair construction agrees with the reference") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 40; ++i) {
        Dfa a = random_dfa(rng, 4, 3);
        Dfa s = smallest_words_dfa_naive(a);
        auto table = oracle_smallest(a, 12);
        for (const Word& w : all_words_up_to(a.alphabet, 7))
            CHECK(s.accepts(w) == (table[w.size()] && *table[w.size()] == w));
    }
}

TEST_CASE("cover pipeline equals the pair construction") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 25; ++i) {
        Dfa a = random_dfa(rng, 5, 3);
        Dfa via_cover = smallest_words_dfa(a);
        Dfa via_pairs = minimize(smallest_words_dfa_naive(a));
        CHECK(language_equal(via_cover, via_pairs));
    }
}

TEST_CASE("smallest words construction is idempotent") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 6; ++i) {
        Dfa a = random_dfa(rng, 4, 2);
        Dfa s = smallest_words_dfa(a);
        Dfa ss = smallest_words_dfa(s);
        CHECK(language_equal(s, ss));
    }
    Dfa none = smallest_words_dfa(empty_language_dfa("01"));
    CHECK(language_empty(none));
}

TEST_CASE("largest words") {
    Dfa all = all_words_dfa("01");
    Dfa b = largest_words_dfa(all);
    for (const Word& w : all_words_up_to(all.alphabet, 8)) {
        bool ones = true;
        for (Letter c : w.letters) ones = ones && c == 1;
        CHECK(b.accepts(w) == ones);
    }

    // a thin language is its own largest-words language
    Dfa thin = one_zero_star_dfa();
    CHECK(language_equal(largest_words_dfa(thin), minimize(thin)));

    std::mt19937_64 rng(73);
    for (int i = 0; i < 10; ++i) {
        Dfa a = random_dfa(rng, 4, 2);
        Dfa big = largest_words_dfa(a);
        auto table = oracle_largest(a, 12);
        for (const Word& w : all_words_up_to(a.alphabet, 8))
            CHECK(big.accepts(w) == (table[w.size()] && *table[w.size()] == w));
        CHECK(language_equal(big, largest_words_dfa_naive(a)));
    }
}
