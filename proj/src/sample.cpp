#include "radixlex/sample.hpp"

namespace radixlex {

Dfa random_dfa(std::mt19937_64& rng, std::uint32_t max_states, std::uint32_t max_letters,
               std::uint32_t accept_percent) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % max_states);
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % max_letters);
    Dfa d = make_dfa(Alphabet::from_chars(std::string_view("012").substr(0, k)), n, 0);
    for (State q = 0; q < n; ++q) {
        d.accepting[q] = rng() % 100 < accept_percent;
        for (std::uint32_t c = 0; c < k; ++c)
            d.delta[q * k + c] = static_cast<State>(rng() % n);
    }
    return d;
}

}  // namespace radixlex
