#include "radixlex/measure.hpp"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "radixlex/minimal_words.hpp"
#include "radixlex/successor.hpp"
#include "radixlex/thin.hpp"

namespace radixlex {

MeasureReport measure(const Dfa& a) {
    MeasureReport r;
    r.n = a.num_states;

    TupleCover cover = simplify_tuples(a);
    const std::uint64_t n = cover.source_n;
    r.cover_k = static_cast<std::uint32_t>(cover.triples.size());
    std::set<std::uint32_t> ys;
    std::uint64_t y_sum = 0;
    for (const auto& t : cover.triples) {
        r.cover_max_xz =
            std::max(r.cover_max_xz, static_cast<std::uint32_t>(t.x.size() + t.z.size()));
        if (!t.y.empty() && ys.insert(static_cast<std::uint32_t>(t.y.size())).second)
            y_sum += t.y.size();
    }
    r.cover_cycle_lengths.assign(ys.begin(), ys.end());
    r.k_le_n4_plus_n3 = r.cover_k <= n * n * n * n + n * n * n;
    r.xz_le_n3_plus_n2 = r.cover_max_xz <= n * n * n + n * n;
    r.y_sum_le_n = y_sum <= n;

    r.pairwise_cycle_disjoint = true;
    Dfa padded = pad_states(a, 3);
    for (std::size_t i = 0; i < cover.triples.size() && r.pairwise_cycle_disjoint; ++i) {
        if (cover.triples[i].y.empty()) continue;
        for (std::size_t j = i + 1; j < cover.triples.size(); ++j) {
            if (cover.triples[j].y.empty()) continue;
            if (!are_cycle_disjoint(padded, cover.triples[i], cover.triples[j])) {
                r.pairwise_cycle_disjoint = false;
                break;
            }
        }
    }

    Dfa s_cover = minimize(build_cover_dfa(cover));
    r.s_cover_states = s_cover.num_states;
    r.s_naive_states = minimize(smallest_words_dfa_naive(a)).num_states;
    r.b_states = minimize(largest_words_dfa(a)).num_states;
    r.x_states = minimize(x_dfa(a)).num_states;
    r.thin_leq_states = thin_leq_ufa(s_cover).num_states;
    r.thin_geq_states = thin_geq_ufa(s_cover).num_states;
    r.bgeq_states = bgeq_ufa(a).num_states;
    r.successor_states = successor_transducer(a).num_states;
    return r;
}

std::string measure_to_json(const MeasureReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["s_naive_states"] = r.s_naive_states;
    j["s_cover_states"] = r.s_cover_states;
    j["b_states"] = r.b_states;
    j["x_states"] = r.x_states;
    j["thin_leq_states"] = r.thin_leq_states;
    j["thin_geq_states"] = r.thin_geq_states;
    j["bgeq_states"] = r.bgeq_states;
    j["successor_states"] = r.successor_states;
    j["cover"] = nlohmann::ordered_json{{"k", r.cover_k},
                                        {"max_xz", r.cover_max_xz},
                                        {"cycle_lengths", r.cover_cycle_lengths}};
    j["bounds"] = nlohmann::ordered_json{{"k_le_n4_plus_n3", r.k_le_n4_plus_n3},
                                         {"xz_le_n3_plus_n2", r.xz_le_n3_plus_n2},
                                         {"y_sum_le_n", r.y_sum_le_n},
                                         {"pairwise_cycle_disjoint", r.pairwise_cycle_disjoint}};
    return j.dump(2);
}

std::string measure_csv_header() {
    return "n,s_naive_states,s_cover_states,b_states,x_states,thin_leq_states,thin_geq_states,"
           "bgeq_states,successor_states,cover_k,cover_max_xz,k_le_n4_plus_n3,xz_le_n3_plus_n2,"
           "y_sum_le_n,pairwise_cycle_disjoint";
}

std::string measure_to_csv_row(const MeasureReport& r) {
    std::ostringstream os;
    os << r.n << ',' << r.s_naive_states << ',' << r.s_cover_states << ',' << r.b_states << ','
       << r.x_states << ',' << r.thin_leq_states << ',' << r.thin_geq_states << ','
       << r.bgeq_states << ',' << r.successor_states << ',' << r.cover_k << ','
       << r.cover_max_xz << ',' << (r.k_le_n4_plus_n3 ? 1 : 0) << ','
       << (r.xz_le_n3_plus_n2 ? 1 : 0) << ',' << (r.y_sum_le_n ? 1 : 0) << ','
       << (r.pairwise_cycle_disjoint ? 1 : 0);
    return os.str();
}

}  // namespace radixlex
