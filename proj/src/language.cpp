#include "rnnfsm/language.hpp"

namespace rnnfsm {

namespace {

// Fallback cursor: tracks the prefix and re-evaluates from scratch.
class ReplayCursor : public PrefixCursor {
public:
    explicit ReplayCursor(const WeightedLanguage& language) : language_(language) {}

    void push(SymbolIndex symbol) override { prefix_.push_back(symbol); }
    void pop() override { prefix_.pop_back(); }
    Rational weight() const override { return language_.weight(prefix_); }

private:
    const WeightedLanguage& language_;
    Word prefix_;
};

}  // namespace

Interval WeightedLanguage::weight_enclosure(const Word& word, unsigned /*precision_bits*/) const {
    return Interval::point(weight(word));
}

std::unique_ptr<PrefixCursor> WeightedLanguage::cursor() const {
    return std::make_unique<ReplayCursor>(*this);
}

Rational cumulative_mass(const WeightedLanguage& language, unsigned max_len) {
    const auto cur = language.cursor();
    PrefixCursor* const cursors[] = {cur.get()};
    Rational total = 0;
    for (unsigned length = 0; length <= max_len; ++length) {
        for_each_word_of_length(language.alphabet(), length, cursors, [&](const Word&) {
            total += cur->weight();
            return true;
        });
    }
    return total;
}

bool for_each_word_of_length(const Alphabet& alphabet, unsigned length,
                             std::span<PrefixCursor* const> cursors,
                             const std::function<bool(const Word&)>& visit) {
    Word word;
    if (length == 0) {
        return visit(word);
    }
    const std::size_t sigma = alphabet.size();
    // Iterative DFS to fixed depth, visiting leaves in lexicographic order.
    std::vector<SymbolIndex> path;
    path.reserve(length);
    const auto descend = [&](SymbolIndex symbol) {
        path.push_back(symbol);
        word.push_back(symbol);
        for (PrefixCursor* cursor : cursors) {
            cursor->push(symbol);
        }
    };
    const auto ascend = [&]() {
        path.pop_back();
        word.pop_back();
        for (PrefixCursor* cursor : cursors) {
            cursor->pop();
        }
    };

    descend(0);
    while (true) {
        if (path.size() == length) {
            if (!visit(word)) {
                while (!path.empty()) {
                    ascend();
                }
                return false;
            }
            // Advance to the next sibling, unwinding exhausted levels.
            while (!path.empty() && path.back() + 1 == sigma) {
                ascend();
            }
            if (path.empty()) {
                return true;
            }
            const SymbolIndex next = path.back() + 1;
            ascend();
            descend(next);
        } else {
            descend(0);
        }
    }
}

}  // namespace rnnfsm
