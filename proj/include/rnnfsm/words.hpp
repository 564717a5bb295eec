#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rnnfsm/rational.hpp"

namespace rnnfsm {

using SymbolIndex = std::uint32_t;

inline constexpr std::string_view kEndMarker = "$";

// Ordered set of distinct symbol tokens. The end marker $ never appears in
// the token list; evaluators append it internally, so in Sigma_$ tables the
// marker row always sits after the declared symbols.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(SymbolIndex index) const { return symbols_.at(index); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<SymbolIndex> index_of(std::string_view token) const;

    // Row index of $ in Sigma_$-indexed tables (embeddings, output rows).
    SymbolIndex end_marker_index() const { return static_cast<SymbolIndex>(symbols_.size()); }
    std::size_t sigma_dollar_size() const { return symbols_.size() + 1; }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, SymbolIndex> index_;
};

// A finite word as a sequence of alphabet symbol indices; the end marker is
// never stored.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<SymbolIndex> symbols) : symbols_(std::move(symbols)) {}

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    SymbolIndex operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<SymbolIndex>& symbols() const { return symbols_; }

    Word prefix(std::size_t length) const;
    void push_back(SymbolIndex s) { symbols_.push_back(s); }
    void pop_back() { symbols_.pop_back(); }

    bool operator==(const Word& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<SymbolIndex> symbols_;
};

// Length-then-lexicographic order by symbol index.
bool shortlex_less(const Word& a, const Word& b);

// Parses one symbol per character; all alphabet tokens must be single
// characters. Throws ParseError on unknown symbols.
Word parse_word(const Alphabet& alphabet, std::string_view text);

std::string format_word(const Alphabet& alphabet, const Word& word);

// Validates that every symbol index falls inside the alphabet.
void check_word(const Alphabet& alphabet, const Word& word);

// Streams every word of length <= max_len (unbounded when absent) exactly
// once, in shortlex order. Single consumer.
class ShortlexEnumerator {
public:
    ShortlexEnumerator(const Alphabet& alphabet, std::optional<std::uint64_t> max_len);

    std::optional<Word> next();

private:
    std::size_t alphabet_size_;
    std::optional<std::uint64_t> max_len_;
    std::vector<SymbolIndex> current_;
    bool started_ = false;
    bool done_ = false;
};

// Number of words of length <= max_len over an alphabet of the given size.
std::uint64_t shortlex_count(std::size_t alphabet_size, unsigned max_len);

}  // namespace rnnfsm
