#include "radixlex/families.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace radixlex {

PrimeList first_primes(std::size_t k) {
    PrimeList out;
    std::uint64_t candidate = 2;
    while (out.primes.size() < k) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= candidate; ++d)
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        if (prime) {
            out.primes.push_back(candidate);
            out.product *= candidate;
        }
        ++candidate;
    }
    return out;
}

std::uint64_t lcm_of(const std::vector<std::uint64_t>& values) {
    std::uint64_t l = 1;
    for (std::uint64_t v : values) l = std::lcm(l, v);
    return l;
}

namespace {

// Branch DFA over {0,1} for 1^i 0^(k-i+1) { 1^j : j not a multiple of p }.
Dfa branch_dfa(const Alphabet& ab, std::size_t i, std::size_t k, std::uint64_t p) {
    const std::size_t zeros = k - i + 1;
    // states: 0..i-1 ones read, i..i+zeros-1 zeros read, then p counter
    // states, then a dead sink.
    const std::uint32_t counter_base = static_cast<std::uint32_t>(i + zeros);
    const std::uint32_t n = counter_base + static_cast<std::uint32_t>(p) + 1;
    const State dead = n - 1;
    Dfa d = make_dfa(ab, n, 0);
    for (State q = 0; q < n; ++q) {
        d.delta[q * 2 + 0] = dead;
        d.delta[q * 2 + 1] = dead;
    }
    for (std::size_t t = 0; t < i; ++t) d.delta[t * 2 + 1] = static_cast<State>(t + 1);
    for (std::size_t t = 0; t < zeros; ++t)
        d.delta[(i + t) * 2 + 0] = static_cast<State>(i + t + 1);
    for (std::uint64_t j = 0; j < p; ++j)
        d.delta[(counter_base + j) * 2 + 1] =
            static_cast<State>(counter_base + ((j + 1) % p));
    for (std::uint64_t j = 1; j < p; ++j) d.accepting[counter_base + j] = true;
    return d;
}

Dfa ones_dfa(const Alphabet& ab) {
    Dfa d = make_dfa(ab, 2, 0);
    d.delta[0 * 2 + 0] = 1;
    d.delta[0 * 2 + 1] = 0;
    d.delta[1 * 2 + 0] = 1;
    d.delta[1 * 2 + 1] = 1;
    d.accepting[0] = true;
    return d;
}

}  // namespace

Dfa family_smallest_lb(std::size_t k) {
    if (k == 0) throw std::invalid_argument("family_smallest_lb requires k >= 1");
    Alphabet ab = Alphabet::from_chars("01");
    PrimeList primes = first_primes(k);
    Dfa result = ones_dfa(ab);
    for (std::size_t i = 1; i <= k; ++i)
        result = product(result, branch_dfa(ab, i, k, primes.primes[i - 1]), ProductMode::Union);
    return minimize(result);
}

Dfa family_successor_lb(std::size_t k) {
    if (k == 0) throw std::invalid_argument("family_successor_lb requires k >= 1");
    PrimeList primes = first_primes(k);

    std::vector<std::string> symbols;
    for (std::size_t i = 1; i <= k; ++i) symbols.push_back(std::to_string(i));
    symbols.push_back("#");
    Alphabet ab{symbols};
    const std::size_t ksz = ab.size();

    // Letter i (1-based) counts modulo the (k+1-i)-th prime; this makes the
    // largest digit the one whose tail grows by the smallest prime.
    std::vector<std::uint64_t> prime_of_letter(k);
    for (std::size_t i = 0; i < k; ++i) prime_of_letter[i] = primes.primes[k - 1 - i];

    std::uint32_t total = 2;
    std::vector<std::uint32_t> base(k);
    for (std::size_t i = 0; i < k; ++i) {
        base[i] = total;
        total += static_cast<std::uint32_t>(prime_of_letter[i]);
    }

    const State initial = 0;
    const State err = 1;
    Dfa d = make_dfa(ab, total, initial);
    for (std::size_t c = 0; c < ksz; ++c) d.delta[err * ksz + c] = err;
    for (std::size_t c = 0; c < ksz; ++c)
        d.delta[initial * ksz + c] = c < k ? base[c] : err;
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t p = prime_of_letter[i];
        for (std::uint64_t j = 0; j < p; ++j) {
            State q = base[i] + static_cast<State>(j);
            for (std::size_t c = 0; c < k; ++c) d.delta[q * ksz + c] = err;
            d.delta[q * ksz + k] = base[i] + static_cast<State>((j + 1) % p);
        }
        d.accepting[base[i]] = true;
    }
    return d;
}

}  // namespace radixlex
