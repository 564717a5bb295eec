#include "rnnfsm/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace rnnfsm {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw std::invalid_argument("alphabet must be non-empty");
    }
    for (SymbolIndex i = 0; i < symbols_.size(); ++i) {
        const auto& token = symbols_[i];
        if (token.empty()) {
            throw std::invalid_argument("alphabet token must be non-empty");
        }
        if (token == kEndMarker) {
            throw std::invalid_argument("end marker $ cannot be an alphabet symbol");
        }
        if (!index_.emplace(token, i).second) {
            throw std::invalid_argument("duplicate alphabet token '" + token + "'");
        }
    }
}

std::optional<SymbolIndex> Alphabet::index_of(std::string_view token) const {
    const auto it = index_.find(std::string(token));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Word Word::prefix(std::size_t length) const {
    if (length > symbols_.size()) {
        throw std::out_of_range("prefix longer than word");
    }
    return Word(std::vector<SymbolIndex>(symbols_.begin(),
                                         symbols_.begin() + static_cast<std::ptrdiff_t>(length)));
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a.symbols() < b.symbols();
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    std::vector<SymbolIndex> symbols;
    symbols.reserve(text.size());
    for (const char c : text) {
        const auto idx = alphabet.index_of(std::string_view(&c, 1));
        if (!idx) {
            throw ParseError(std::string("unknown symbol '") + c + "' in word");
        }
        symbols.push_back(*idx);
    }
    return Word(std::move(symbols));
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
    std::string out;
    for (const SymbolIndex s : word.symbols()) {
        out += alphabet.symbol(s);
    }
    return out;
}

void check_word(const Alphabet& alphabet, const Word& word) {
    for (const SymbolIndex s : word.symbols()) {
        if (s >= alphabet.size()) {
            throw std::invalid_argument("word symbol index outside alphabet");
        }
    }
}

ShortlexEnumerator::ShortlexEnumerator(const Alphabet& alphabet,
                                       std::optional<std::uint64_t> max_len)
    : alphabet_size_(alphabet.size()), max_len_(max_len) {}

std::optional<Word> ShortlexEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        return Word();  // epsilon
    }
    // Advance like an odometer; on overflow grow to the next length.
    std::size_t pos = current_.size();
    while (pos > 0 && current_[pos - 1] + 1 == alphabet_size_) {
        current_[pos - 1] = 0;
        --pos;
    }
    if (pos > 0) {
        ++current_[pos - 1];
    } else {
        if (max_len_ && current_.size() >= *max_len_) {
            done_ = true;
            return std::nullopt;
        }
        current_.assign(current_.size() + 1, 0);
    }
    return Word(current_);
}

std::uint64_t shortlex_count(std::size_t alphabet_size, unsigned max_len) {
    std::uint64_t total = 0;
    std::uint64_t level = 1;
    for (unsigned i = 0; i <= max_len; ++i) {
        total += level;
        level *= alphabet_size;
    }
    return total;
}

}  // namespace rnnfsm
