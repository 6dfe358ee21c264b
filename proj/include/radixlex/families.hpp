#pragma once

#include <cstdint>
#include <vector>

#include "radixlex/dfa.hpp"

namespace radixlex {

struct PrimeList {
    std::vector<std::uint64_t> primes;  // first k primes, ascending
    std::uint64_t product = 1;
};

PrimeList first_primes(std::size_t k);
std::uint64_t lcm_of(const std::vector<std::uint64_t>& values);  // lcm of {} is 1

/// Binary-alphabet family whose smallest-words language needs many states:
/// 1* together with, for each i <= k, the words 1^i 0^(k-i+1) 1^j where j is
/// not a multiple of the i-th prime. Returned minimized.
Dfa family_smallest_lb(std::size_t k);

/// Family over {1..k, #} whose successor transducer needs many states:
/// words i #^j with j a multiple of the prime assigned to letter i. Exactly
/// 2 + p_1 + ... + p_k states. Letter i carries the (k+1-i)-th prime, so the
/// largest digit counts the smallest prime.
Dfa family_successor_lb(std::size_t k);

}  // namespace radixlex
