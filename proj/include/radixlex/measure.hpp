#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radixlex/dfa.hpp"

namespace radixlex {

/// State counts and cover statistics for one input automaton. Minimized sizes
/// are complete-DFA counts (sink included). The comparison-UFA sizes refer to
/// machines built on the minimized smallest-words DFA, which is thin.
struct MeasureReport {
    std::uint32_t n = 0;
    std::uint32_t s_naive_states = 0;
    std::uint32_t s_cover_states = 0;
    std::uint32_t b_states = 0;
    std::uint32_t x_states = 0;
    std::uint32_t thin_leq_states = 0;
    std::uint32_t thin_geq_states = 0;
    std::uint32_t bgeq_states = 0;
    std::uint32_t successor_states = 0;
    std::uint32_t cover_k = 0;
    std::uint32_t cover_max_xz = 0;
    std::vector<std::uint32_t> cover_cycle_lengths;  // distinct nonzero |y|
    bool k_le_n4_plus_n3 = false;
    bool xz_le_n3_plus_n2 = false;
    bool y_sum_le_n = false;
    bool pairwise_cycle_disjoint = false;
};

MeasureReport measure(const Dfa& a);

std::string measure_to_json(const MeasureReport& r);
std::string measure_csv_header();
std::string measure_to_csv_row(const MeasureReport& r);

}  // namespace radixlex
