#include "radixlex/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace radixlex {

namespace {

nlohmann::ordered_json alphabet_json(const Alphabet& ab) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : ab.symbols()) arr.push_back(s);
    return arr;
}

Alphabet alphabet_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("alphabet must be an array of symbols");
    std::vector<std::string> symbols;
    for (const auto& s : j) {
        if (!s.is_string()) throw std::invalid_argument("alphabet symbols must be strings");
        symbols.push_back(s.get<std::string>());
    }
    return Alphabet(std::move(symbols));
}

struct Header {
    Alphabet alphabet;
    std::uint32_t states;
    State initial;
    std::vector<bool> accepting;
};

Header header_from_json(const nlohmann::json& j, const char* type) {
    if (!j.is_object() || j.value("type", "") != type)
        throw std::invalid_argument(std::string("expected a JSON object with type \"") + type +
                                    "\"");
    Header h{alphabet_from_json(j.at("alphabet")), j.at("states").get<std::uint32_t>(),
             j.at("initial").get<State>(), {}};
    if (h.states == 0) throw std::invalid_argument("states must be positive");
    if (h.initial >= h.states) throw std::invalid_argument("initial state out of range");
    h.accepting.assign(h.states, false);
    for (const auto& f : j.at("accepting")) {
        State q = f.get<State>();
        if (q >= h.states) throw std::invalid_argument("accepting state out of range");
        h.accepting[q] = true;
    }
    return h;
}

nlohmann::ordered_json header_json(const char* type, const Alphabet& ab, std::uint32_t states,
                                   State initial, const std::vector<bool>& accepting) {
    nlohmann::ordered_json j;
    j["type"] = type;
    j["alphabet"] = alphabet_json(ab);
    j["states"] = states;
    j["initial"] = initial;
    nlohmann::ordered_json acc = nlohmann::ordered_json::array();
    for (State q = 0; q < states; ++q)
        if (accepting[q]) acc.push_back(q);
    j["accepting"] = std::move(acc);
    return j;
}

}  // namespace

nlohmann::ordered_json to_json(const Dfa& a) {
    nlohmann::ordered_json j =
        header_json("dfa", a.alphabet, a.num_states, a.initial, a.accepting);
    nlohmann::ordered_json trans = nlohmann::ordered_json::array();
    for (State q = 0; q < a.num_states; ++q)
        for (Letter c = 0; c < a.alphabet.size(); ++c)
            trans.push_back({q, a.alphabet.symbol(c), a.step(q, c)});
    j["transitions"] = std::move(trans);
    return j;
}

nlohmann::ordered_json to_json(const Nfa& n) {
    nlohmann::ordered_json j =
        header_json("nfa", n.alphabet, n.num_states, n.initial, n.accepting);
    nlohmann::ordered_json trans = nlohmann::ordered_json::array();
    for (State q = 0; q < n.num_states; ++q)
        for (Letter c = 0; c < n.alphabet.size(); ++c)
            for (State t : n.delta[q][c]) trans.push_back({q, n.alphabet.symbol(c), t});
    j["transitions"] = std::move(trans);
    return j;
}

nlohmann::ordered_json to_json(const Transducer& t) {
    if (!(t.input_alphabet == t.output_alphabet))
        throw std::invalid_argument(
            "transducer JSON uses one alphabet; input and output alphabets differ");
    nlohmann::ordered_json j =
        header_json("transducer", t.input_alphabet, t.num_states, t.initial, t.accepting);
    nlohmann::ordered_json trans = nlohmann::ordered_json::array();
    for (const auto& tr : t.transitions)
        trans.push_back({tr.from, tr.in ? t.input_alphabet.symbol(*tr.in) : "",
                         tr.out ? t.output_alphabet.symbol(*tr.out) : "", tr.to});
    j["transitions"] = std::move(trans);
    return j;
}

nlohmann::ordered_json to_json(const TupleCover& c) {
    nlohmann::ordered_json j;
    j["n"] = c.source_n;
    nlohmann::ordered_json triples = nlohmann::ordered_json::array();
    for (const auto& t : c.triples)
        triples.push_back(nlohmann::ordered_json{{"x", format_word(c.alphabet, t.x)},
                                                 {"y", format_word(c.alphabet, t.y)},
                                                 {"z", format_word(c.alphabet, t.z)}});
    j["triples"] = std::move(triples);
    return j;
}

Dfa dfa_from_json(const nlohmann::json& j) {
    Header h = header_from_json(j, "dfa");
    const std::size_t k = h.alphabet.size();
    Dfa a;
    a.alphabet = std::move(h.alphabet);
    a.num_states = h.states;
    a.initial = h.initial;
    a.accepting = std::move(h.accepting);
    a.delta.assign(static_cast<std::size_t>(h.states) * k, 0);
    std::vector<bool> defined(a.delta.size(), false);
    for (const auto& tr : j.at("transitions")) {
        if (!tr.is_array() || tr.size() != 3)
            throw std::invalid_argument("dfa transitions must be [from, symbol, to]");
        State from = tr[0].get<State>();
        State to = tr[2].get<State>();
        auto letter = a.alphabet.index_of(tr[1].get<std::string>());
        if (!letter) throw std::invalid_argument("transition symbol not in alphabet");
        if (from >= a.num_states || to >= a.num_states)
            throw std::invalid_argument("transition state out of range");
        std::size_t slot = from * k + *letter;
        if (defined[slot]) throw std::invalid_argument("duplicate dfa transition");
        defined[slot] = true;
        a.delta[slot] = to;
    }
    for (bool d : defined)
        if (!d) throw std::invalid_argument("dfa transition table is not total");
    a.validate();
    return a;
}

Nfa nfa_from_json(const nlohmann::json& j) {
    Header h = header_from_json(j, "nfa");
    Nfa n = make_nfa(h.alphabet, h.states, h.initial);
    n.accepting = std::move(h.accepting);
    for (const auto& tr : j.at("transitions")) {
        if (!tr.is_array() || tr.size() != 3)
            throw std::invalid_argument("nfa transitions must be [from, symbol, to]");
        State from = tr[0].get<State>();
        State to = tr[2].get<State>();
        auto letter = n.alphabet.index_of(tr[1].get<std::string>());
        if (!letter) throw std::invalid_argument("transition symbol not in alphabet");
        if (from >= n.num_states || to >= n.num_states)
            throw std::invalid_argument("transition state out of range");
        n.add_transition(from, *letter, to);
    }
    n.validate();
    return n;
}

Transducer transducer_from_json(const nlohmann::json& j) {
    Header h = header_from_json(j, "transducer");
    Transducer t = make_transducer(h.alphabet, h.alphabet, h.states, h.initial);
    t.accepting = std::move(h.accepting);
    for (const auto& tr : j.at("transitions")) {
        if (!tr.is_array() || tr.size() != 4)
            throw std::invalid_argument("transducer transitions must be [from, in, out, to]");
        State from = tr[0].get<State>();
        State to = tr[3].get<State>();
        if (from >= t.num_states || to >= t.num_states)
            throw std::invalid_argument("transition state out of range");
        std::optional<Letter> in, out;
        std::string in_sym = tr[1].get<std::string>();
        std::string out_sym = tr[2].get<std::string>();
        if (!in_sym.empty()) {
            auto l = t.input_alphabet.index_of(in_sym);
            if (!l) throw std::invalid_argument("input symbol not in alphabet");
            in = *l;
        }
        if (!out_sym.empty()) {
            auto l = t.output_alphabet.index_of(out_sym);
            if (!l) throw std::invalid_argument("output symbol not in alphabet");
            out = *l;
        }
        t.transitions.push_back({from, in, out, to});
    }
    t.validate();
    return t;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace radixlex
