#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "radixlex/dfa.hpp"
#include "radixlex/minimal_words.hpp"
#include "radixlex/nfa.hpp"
#include "radixlex/transducer.hpp"

namespace radixlex {

/// JSON automaton format, stable key order:
///   {"type":"dfa"|"nfa"|"transducer", "alphabet":[sym,...], "states":n,
///    "initial":i, "accepting":[...], "transitions":[[from,"sym",to],...]}
/// Transducer transitions are [from, in_sym, out_sym, to] with "" for the
/// empty word. Symbols are nonempty strings in radix order.
nlohmann::ordered_json to_json(const Dfa& a);
nlohmann::ordered_json to_json(const Nfa& n);
nlohmann::ordered_json to_json(const Transducer& t);
nlohmann::ordered_json to_json(const TupleCover& c);

Dfa dfa_from_json(const nlohmann::json& j);
Nfa nfa_from_json(const nlohmann::json& j);
Transducer transducer_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace radixlex
