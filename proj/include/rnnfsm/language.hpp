#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "rnnfsm/interval.hpp"
#include "rnnfsm/words.hpp"

namespace rnnfsm {

// Incremental evaluator over word prefixes. push/pop maintain an internal
// stack so that word trees can be walked without re-evaluating shared
// prefixes.
class PrefixCursor {
public:
    virtual ~PrefixCursor() = default;
    virtual void push(SymbolIndex symbol) = 0;
    virtual void pop() = 0;
    // Weight of the current prefix taken as a complete word. Exact mode only.
    virtual Rational weight() const = 0;
};

class WeightedLanguage {
public:
    virtual ~WeightedLanguage() = default;

    virtual const Alphabet& alphabet() const = 0;
    virtual bool declared_consistent() const = 0;

    // Exact weight; throws ExactnessUnavailable when the model cannot be
    // evaluated exactly on this word.
    virtual Rational weight(const Word& word) const = 0;

    // Certified enclosure at the requested precision. Defaults to a point
    // interval around the exact weight.
    virtual Interval weight_enclosure(const Word& word, unsigned precision_bits) const;

    // Defaults to a replaying cursor built on weight().
    virtual std::unique_ptr<PrefixCursor> cursor() const;
};

// Exact sum of weights over all words of length <= max_len.
Rational cumulative_mass(const WeightedLanguage& language, unsigned max_len);

// Visits every word of exactly `length` in lexicographic order while keeping
// the supplied cursors in lockstep with the visited prefix. The visitor may
// return false to abort; the function then returns false.
bool for_each_word_of_length(const Alphabet& alphabet, unsigned length,
                             std::span<PrefixCursor* const> cursors,
                             const std::function<bool(const Word&)>& visit);

}  // namespace rnnfsm
