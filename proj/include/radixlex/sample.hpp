#pragma once

#include <cstdint>
#include <random>

#include "radixlex/dfa.hpp"

namespace radixlex {

/// Deterministic random complete DFA: up to max_states states over digits
/// "0".."2" (alphabet size up to max_letters), uniform transitions, each
/// state accepting with roughly the given percentage. Uses plain modulo
/// draws so the result only depends on the engine state.
Dfa random_dfa(std::mt19937_64& rng, std::uint32_t max_states, std::uint32_t max_letters,
               std::uint32_t accept_percent = 40);

}  // namespace radixlex
