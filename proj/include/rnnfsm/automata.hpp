#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "rnnfsm/language.hpp"

namespace rnnfsm {

using StateIndex = std::uint32_t;

struct WfaTransition {
    SymbolIndex symbol;
    StateIndex target;
    Rational weight;
};

// Weighted automaton with path-sum semantics: the weight of w is the sum over
// all state paths of I(q0) * prod T(q_i, w_{i+1}, q_{i+1}) * P(q_end).
// Transitions are stored sparsely per source state.
class WeightedAutomaton {
public:
    WeightedAutomaton(Alphabet alphabet, std::size_t num_states);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return initial_.size(); }

    void set_initial(StateIndex state, Rational weight);
    void set_final(StateIndex state, Rational weight);
    // At most one weight per (source, symbol, target) triple.
    void add_transition(StateIndex from, SymbolIndex symbol, StateIndex to, Rational weight);

    const Rational& initial(StateIndex state) const { return initial_.at(state); }
    const Rational& final_weight(StateIndex state) const { return final_.at(state); }
    const std::vector<WfaTransition>& transitions_from(StateIndex state) const {
        return transitions_.at(state);
    }

    std::size_t num_transitions() const;

    // Drops states unreachable from the initial support, remapping indices.
    WeightedAutomaton pruned() const;

private:
    Alphabet alphabet_;
    std::vector<Rational> initial_;
    std::vector<Rational> final_;
    std::vector<std::vector<WfaTransition>> transitions_;
};

// Forward algorithm over exact rationals.
Rational wfa_weight(const WeightedAutomaton& automaton, const Word& word);

enum class PfaViolationKind {
    kInitialSum,    // sum of initial weights != 1
    kStateSum,      // P(q) + sum of outgoing weights != 1
    kWeightRange,   // some weight outside [0, 1]
    kDeterminism,   // more than one outgoing transition per (state, symbol)
};

const char* to_string(PfaViolationKind kind);

struct PfaViolationEntry {
    std::optional<StateIndex> state;  // absent for the global initial-sum check
    PfaViolationKind kind;
    Rational observed;
    Rational expected;
};

struct PfaValidationReport {
    bool is_pfa = false;
    bool is_dpfa = false;
    std::vector<PfaViolationEntry> violations;
};

// Exact stochasticity checks; violations are reported, never thrown.
PfaValidationReport validate_pfa(const WeightedAutomaton& automaton);

// Single-state DPFA over {a} realizing f(a^n) = 1/2^(n+1).
WeightedAutomaton build_trivial_unary_dpfa();

// Deterministic finite automaton with a partial transition function; a
// missing transition rejects.
struct Dfa {
    Alphabet alphabet;
    std::size_t num_states = 0;
    StateIndex start = 0;
    std::set<StateIndex> accepting;
    std::map<std::pair<StateIndex, SymbolIndex>, StateIndex> delta;
};

bool dfa_accepts(const Dfa& dfa, const Word& word);

// WeightedLanguage adapter; the consistency flag is the caller's claim.
class WfaLanguage : public WeightedLanguage {
public:
    WfaLanguage(WeightedAutomaton automaton, bool declared_consistent);

    const Alphabet& alphabet() const override { return automaton_->alphabet(); }
    bool declared_consistent() const override { return declared_consistent_; }
    Rational weight(const Word& word) const override;
    std::unique_ptr<PrefixCursor> cursor() const override;

    const WeightedAutomaton& automaton() const { return *automaton_; }

private:
    std::shared_ptr<const WeightedAutomaton> automaton_;
    bool declared_consistent_;
};

}  // namespace rnnfsm
