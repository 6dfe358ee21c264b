#include "radixlex/alphabet.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace radixlex {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& s : symbols_) {
        if (s.empty())
            throw std::invalid_argument("alphabet symbols must be nonempty (\"\" is reserved)");
        if (!seen.insert(s).second)
            throw std::invalid_argument("duplicate alphabet symbol: " + s);
    }
}

Alphabet Alphabet::from_chars(std::string_view chars) {
    std::vector<std::string> symbols;
    symbols.reserve(chars.size());
    for (char c : chars) symbols.emplace_back(1, c);
    return Alphabet(std::move(symbols));
}

std::optional<Letter> Alphabet::index_of(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == symbol) return static_cast<Letter>(i);
    return std::nullopt;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    return radix_compare(*this, other);
}

std::strong_ordering radix_compare(const Word& u, const Word& v) {
    if (u.letters.size() != v.letters.size())
        return u.letters.size() <=> v.letters.size();
    for (std::size_t i = 0; i < u.letters.size(); ++i)
        if (u.letters[i] != v.letters[i]) return u.letters[i] <=> v.letters[i];
    return std::strong_ordering::equal;
}

Word concat(const Word& u, const Word& v) {
    Word r = u;
    r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
    return r;
}

Word concat(const Word& u, const Word& v, const Word& w) {
    Word r = concat(u, v);
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
}

Word repeated(const Word& u, std::size_t times) {
    Word r;
    r.letters.reserve(u.letters.size() * times);
    for (std::size_t i = 0; i < times; ++i)
        r.letters.insert(r.letters.end(), u.letters.begin(), u.letters.end());
    return r;
}

bool is_prefix_of(const Word& u, const Word& v) {
    if (u.size() > v.size()) return false;
    return std::equal(u.letters.begin(), u.letters.end(), v.letters.begin());
}

Word parse_word(const Alphabet& alphabet, std::string_view text, std::string_view sep) {
    Word w;
    if (text.empty()) return w;
    if (sep.empty()) {
        // Single-character symbols; reject the alphabet if any symbol is longer.
        std::size_t pos = 0;
        while (pos < text.size()) {
            // Symbols may be multi-byte (UTF-8) even in separator-free mode, so
            // greedily match the longest alphabet symbol at this position.
            std::optional<Letter> best;
            std::size_t best_len = 0;
            for (std::size_t i = 0; i < alphabet.size(); ++i) {
                const std::string& s = alphabet.symbol(static_cast<Letter>(i));
                if (s.size() > best_len && text.substr(pos, s.size()) == s) {
                    best = static_cast<Letter>(i);
                    best_len = s.size();
                }
            }
            if (!best)
                throw std::invalid_argument("word contains a symbol not in the alphabet: " +
                                            std::string(text.substr(pos)));
            w.push_back(*best);
            pos += best_len;
        }
        return w;
    }
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(sep, start);
        std::string_view piece = text.substr(start, end == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : end - start);
        auto idx = alphabet.index_of(piece);
        if (!idx)
            throw std::invalid_argument("word contains a symbol not in the alphabet: " +
                                        std::string(piece));
        w.push_back(*idx);
        if (end == std::string_view::npos) break;
        start = end + sep.size();
    }
    return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += sep;
        out += alphabet.symbol(w[i]);
    }
    return out;
}

void require_word(const Alphabet& alphabet, const Word& w) {
    for (Letter a : w.letters)
        if (a >= alphabet.size())
            throw std::invalid_argument("word letter out of range for this alphabet");
}

}  // namespace radixlex
