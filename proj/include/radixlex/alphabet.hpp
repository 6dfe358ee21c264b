#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radixlex {

using Letter = std::uint32_t;
using State = std::uint32_t;

/// Ordered alphabet: the position of a symbol in the sequence is its rank in
/// the total order (position i < position j means symbol i < symbol j).
/// Letters are represented everywhere as indices into this sequence.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    /// Convenience: one alphabet symbol per character of `chars`, in order.
    static Alphabet from_chars(std::string_view chars);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(Letter a) const { return symbols_[a]; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<Letter> index_of(std::string_view symbol) const;
    bool contains(std::string_view symbol) const { return index_of(symbol).has_value(); }

    bool operator==(const Alphabet&) const = default;

  private:
    std::vector<std::string> symbols_;
};

/// A word over some alphabet, stored as letter indices. Comparison is radix
/// order: shorter words first, ties broken lexicographically.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
    Word(std::initializer_list<Letter> ls) : letters(ls) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Letter operator[](std::size_t i) const { return letters[i]; }
    void push_back(Letter a) { letters.push_back(a); }

    bool operator==(const Word&) const = default;
    std::strong_ordering operator<=>(const Word& other) const;
};

/// Radix-order comparison (length first, then lexicographic).
std::strong_ordering radix_compare(const Word& u, const Word& v);

Word concat(const Word& u, const Word& v);
Word concat(const Word& u, const Word& v, const Word& w);
/// u repeated `times` times.
Word repeated(const Word& u, std::size_t times);
bool is_prefix_of(const Word& u, const Word& v);

/// Parse a word given the alphabet. With an empty separator every symbol must
/// be a single character; otherwise the input is split on `sep`. The empty
/// string parses to the empty word. Throws std::invalid_argument on symbols
/// that are not in the alphabet.
Word parse_word(const Alphabet& alphabet, std::string_view text, std::string_view sep = "");
std::string format_word(const Alphabet& alphabet, const Word& w, std::string_view sep = "");

/// Checks that every letter of `w` is a letter of `alphabet`; throws
/// std::invalid_argument otherwise. Used at API boundaries where words meet
/// machines over a specific alphabet.
void require_word(const Alphabet& alphabet, const Word& w);

}  // namespace radixlex
