// Command-line front end: smallest/largest-words DFAs, successor queries,
// radix-order enumeration, successor transducers, lower-bound families,
// measurement reports, and the oracle-equivalence check suite.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "radixlex/dfa.hpp"
#include "radixlex/errors.hpp"
#include "radixlex/families.hpp"
#include "radixlex/json_io.hpp"
#include "radixlex/measure.hpp"
#include "radixlex/minimal_words.hpp"
#include "radixlex/successor.hpp"
#include "radixlex/transducer.hpp"
#include "radixlex/verify.hpp"

namespace {

using namespace radixlex;

void emit(const nlohmann::ordered_json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        save_json_file(out_path, j);
}

Dfa load_dfa(const std::string& path) { return dfa_from_json(load_json_file(path)); }

int run(int argc, char** argv) {
    CLI::App app{"constructions for smallest words and radix-order successors of regular "
                 "languages"};
    app.require_subcommand(1);

    std::string in_path, out_path, word_text, sep, cover_out;
    bool use_naive = false, use_cover = false, csv = false;
    std::size_t count = 0, max_len = 0, family_k = 1;
    std::uint64_t seed = 0;

    auto* smallest = app.add_subcommand("smallest", "DFA for the smallest word of each length");
    smallest->add_option("input", in_path, "automaton JSON")->required();
    auto* naive_flag = smallest->add_flag("--naive", use_naive, "pair construction");
    smallest->add_flag("--cover", use_cover, "cover pipeline (default)")->excludes(naive_flag);
    smallest->add_option("-o,--output", out_path, "output path (default stdout)");
    smallest->add_option("--cover-out", cover_out, "also write the tuple cover JSON");

    auto* largest = app.add_subcommand("largest", "DFA for the largest word of each length");
    largest->add_option("input", in_path, "automaton JSON")->required();
    largest->add_option("-o,--output", out_path, "output path (default stdout)");

    auto* successor = app.add_subcommand("successor", "print the successor of a word in L");
    successor->add_option("input", in_path, "automaton JSON")->required();
    successor->add_option("word", word_text, "input word (symbols concatenated)")->required();
    successor->add_option("--sep", sep, "symbol separator for multi-character symbols");

    auto* enumerate = app.add_subcommand("enumerate", "print the first N words of L");
    enumerate->add_option("input", in_path, "automaton JSON")->required();
    enumerate->add_option("--count", count, "number of words")->required();
    enumerate->add_option("--sep", sep, "symbol separator on output");

    auto* transducer = app.add_subcommand("transducer", "emit the successor transducer");
    transducer->add_option("input", in_path, "automaton JSON")->required();
    transducer->add_option("-o,--output", out_path, "output path")->required();

    auto* family = app.add_subcommand("family", "emit a lower-bound family automaton");
    family->require_subcommand(1);
    auto* fam_s = family->add_subcommand("smallest-lb", "family for smallest-words blowup");
    fam_s->add_option("--k", family_k, "number of primes")->required();
    fam_s->add_option("-o,--output", out_path, "output path (default stdout)");
    auto* fam_t = family->add_subcommand("successor-lb", "family for successor blowup");
    fam_t->add_option("--k", family_k, "number of primes")->required();
    fam_t->add_option("-o,--output", out_path, "output path (default stdout)");

    auto* measure_cmd = app.add_subcommand("measure", "state counts and cover statistics");
    measure_cmd->add_option("input", in_path, "automaton JSON")->required();
    measure_cmd->add_flag("--csv", csv, "CSV row instead of JSON");

    auto* check = app.add_subcommand("check", "oracle-equivalence suite");
    check->add_option("input", in_path, "automaton JSON")->required();
    check->add_option("--max-len", max_len, "word length bound")->required();
    check->add_option("--seed", seed, "seed for sampled spot checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (smallest->parsed()) {
        Dfa a = load_dfa(in_path);
        if (!cover_out.empty() || !use_naive) {
            TupleCover cover = simplify_tuples(a);
            if (!cover_out.empty()) save_json_file(cover_out, to_json(cover));
            if (!use_naive) {
                emit(to_json(minimize(build_cover_dfa(cover))), out_path);
                return 0;
            }
        }
        emit(to_json(minimize(smallest_words_dfa_naive(a))), out_path);
        return 0;
    }
    if (largest->parsed()) {
        emit(to_json(largest_words_dfa(load_dfa(in_path))), out_path);
        return 0;
    }
    if (successor->parsed()) {
        Dfa a = load_dfa(in_path);
        Word w = parse_word(a.alphabet, word_text, sep);
        Transducer t = successor_transducer(a);
        auto result = apply_transducer(t, w);
        if (result)
            std::cout << format_word(a.alphabet, *result, sep) << '\n';
        else
            std::cout << "MAXIMAL\n";
        return 0;
    }
    if (enumerate->parsed()) {
        Dfa a = load_dfa(in_path);
        for (const Word& w : enumerate_words(a, count))
            std::cout << format_word(a.alphabet, w, sep) << '\n';
        return 0;
    }
    if (transducer->parsed()) {
        emit(to_json(successor_transducer(load_dfa(in_path))), out_path);
        return 0;
    }
    if (fam_s->parsed()) {
        emit(to_json(family_smallest_lb(family_k)), out_path);
        return 0;
    }
    if (fam_t->parsed()) {
        emit(to_json(family_successor_lb(family_k)), out_path);
        return 0;
    }
    if (measure_cmd->parsed()) {
        MeasureReport r = measure(load_dfa(in_path));
        if (csv)
            std::cout << measure_csv_header() << '\n' << measure_to_csv_row(r) << '\n';
        else
            std::cout << measure_to_json(r) << '\n';
        return 0;
    }
    if (check->parsed()) {
        Dfa a = load_dfa(in_path);
        bool all_ok = true;
        for (const CheckResult& r : oracle_equivalence_suite(a, max_len, seed)) {
            if (r.ok)
                std::cout << "ok   " << r.name << '\n';
            else {
                std::cout << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail)
                          << '\n';
                all_ok = false;
            }
        }
        return all_ok ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
