#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radixlex/alphabet.hpp"

namespace radixlex {

/// One transducer transition; nullopt on either side is the empty word.
struct TransducerTransition {
    State from = 0;
    std::optional<Letter> in;
    std::optional<Letter> out;
    State to = 0;

    bool operator==(const TransducerTransition&) const = default;
    auto operator<=>(const TransducerTransition&) const = default;
};

/// Nondeterministic finite-state transducer with epsilon input/output.
struct Transducer {
    Alphabet input_alphabet;
    Alphabet output_alphabet;
    std::uint32_t num_states = 0;
    State initial = 0;
    std::vector<bool> accepting;
    std::vector<TransducerTransition> transitions;

    /// Structural checks. Epsilon-input cycles that produce output are
    /// rejected when they lie on a potential accepting path (they would make
    /// the output of a single input infinite).
    void validate() const;
};

Transducer make_transducer(Alphabet input, Alphabet output, std::uint32_t num_states,
                           State initial);

/// Drops states that are not both reachable and co-reachable (keeping the
/// initial state), renumbering the rest. Transitions are sorted.
Transducer prune_useless(const Transducer& t);

/// Runs words through a fixed transducer; builds its indexes once.
class TransducerRunner {
  public:
    explicit TransducerRunner(const Transducer& t);

    /// Output of the unique accepting run on `input`; nullopt when no run
    /// accepts. Throws AmbiguityError when two or more runs accept (or when
    /// a silent epsilon cycle yields infinitely many).
    std::optional<Word> apply(const Word& input) const;

    const Transducer& machine() const { return *t_; }

  private:
    const Transducer* t_;
    std::vector<std::vector<std::vector<int>>> consume_;  // [state][letter] -> transition index
    std::vector<std::vector<int>> eps_out_;               // [state] -> eps-input transition index
    std::vector<std::vector<int>> eps_in_;                // [state] -> eps-input transitions into it
    std::vector<std::vector<int>> consume_in_;            // [state] -> consuming transitions into it
    std::vector<State> eps_topo_;                         // topological order of eps graph
    std::vector<bool> eps_on_cycle_;                      // state lies on an eps cycle
};

/// One-shot convenience wrapper around TransducerRunner.
std::optional<Word> apply_transducer(const Transducer& t, const Word& input);

/// Exact decision: does every input word admit at most one accepting run?
bool transducer_is_unambiguous(const Transducer& t);

}  // namespace radixlex
