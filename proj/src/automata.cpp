#include "rnnfsm/automata.hpp"

#include <algorithm>
#include <stdexcept>

namespace rnnfsm {

WeightedAutomaton::WeightedAutomaton(Alphabet alphabet, std::size_t num_states)
    : alphabet_(std::move(alphabet)),
      initial_(num_states, Rational(0)),
      final_(num_states, Rational(0)),
      transitions_(num_states) {
    if (num_states == 0) {
        throw std::invalid_argument("automaton needs at least one state");
    }
}

void WeightedAutomaton::set_initial(StateIndex state, Rational weight) {
    initial_.at(state) = std::move(weight);
}

void WeightedAutomaton::set_final(StateIndex state, Rational weight) {
    final_.at(state) = std::move(weight);
}

void WeightedAutomaton::add_transition(StateIndex from, SymbolIndex symbol, StateIndex to,
                                       Rational weight) {
    if (symbol >= alphabet_.size()) {
        throw std::invalid_argument("transition symbol outside alphabet");
    }
    if (to >= num_states()) {
        throw std::invalid_argument("transition target outside state set");
    }
    auto& row = transitions_.at(from);
    for (const auto& existing : row) {
        if (existing.symbol == symbol && existing.target == to) {
            throw std::invalid_argument("duplicate transition triple");
        }
    }
    row.push_back(WfaTransition{symbol, to, std::move(weight)});
}

std::size_t WeightedAutomaton::num_transitions() const {
    std::size_t total = 0;
    for (const auto& row : transitions_) {
        total += row.size();
    }
    return total;
}

WeightedAutomaton WeightedAutomaton::pruned() const {
    std::vector<bool> reachable(num_states(), false);
    std::vector<StateIndex> frontier;
    for (StateIndex q = 0; q < num_states(); ++q) {
        if (initial_[q] != 0) {
            reachable[q] = true;
            frontier.push_back(q);
        }
    }
    while (!frontier.empty()) {
        const StateIndex q = frontier.back();
        frontier.pop_back();
        for (const auto& t : transitions_[q]) {
            if (!reachable[t.target]) {
                reachable[t.target] = true;
                frontier.push_back(t.target);
            }
        }
    }
    std::vector<StateIndex> remap(num_states(), 0);
    StateIndex next = 0;
    for (StateIndex q = 0; q < num_states(); ++q) {
        if (reachable[q]) {
            remap[q] = next++;
        }
    }
    WeightedAutomaton result(alphabet_, next);
    for (StateIndex q = 0; q < num_states(); ++q) {
        if (!reachable[q]) {
            continue;
        }
        result.set_initial(remap[q], initial_[q]);
        result.set_final(remap[q], final_[q]);
        for (const auto& t : transitions_[q]) {
            result.add_transition(remap[q], t.symbol, remap[t.target], t.weight);
        }
    }
    return result;
}

Rational wfa_weight(const WeightedAutomaton& automaton, const Word& word) {
    check_word(automaton.alphabet(), word);
    std::vector<Rational> alpha(automaton.num_states());
    for (StateIndex q = 0; q < automaton.num_states(); ++q) {
        alpha[q] = automaton.initial(q);
    }
    std::vector<Rational> next(automaton.num_states());
    for (const SymbolIndex symbol : word.symbols()) {
        std::fill(next.begin(), next.end(), Rational(0));
        for (StateIndex q = 0; q < automaton.num_states(); ++q) {
            if (alpha[q] == 0) {
                continue;
            }
            for (const auto& t : automaton.transitions_from(q)) {
                if (t.symbol == symbol) {
                    next[t.target] += alpha[q] * t.weight;
                }
            }
        }
        alpha.swap(next);
    }
    Rational total = 0;
    for (StateIndex q = 0; q < automaton.num_states(); ++q) {
        if (alpha[q] != 0) {
            total += alpha[q] * automaton.final_weight(q);
        }
    }
    return total;
}

const char* to_string(PfaViolationKind kind) {
    switch (kind) {
        case PfaViolationKind::kInitialSum: return "global-initial";
        case PfaViolationKind::kStateSum: return "state-sum";
        case PfaViolationKind::kWeightRange: return "weight-range";
        case PfaViolationKind::kDeterminism: return "determinism";
    }
    return "unknown";
}

PfaValidationReport validate_pfa(const WeightedAutomaton& automaton) {
    PfaValidationReport report;
    const Rational one(1);
    const auto in_unit_range = [](const Rational& w) { return w >= 0 && w <= 1; };

    Rational initial_sum = 0;
    for (StateIndex q = 0; q < automaton.num_states(); ++q) {
        initial_sum += automaton.initial(q);
        if (!in_unit_range(automaton.initial(q))) {
            report.violations.push_back({q, PfaViolationKind::kWeightRange,
                                         automaton.initial(q),
                                         automaton.initial(q) < 0 ? Rational(0) : Rational(1)});
        }
    }
    if (initial_sum != one) {
        report.violations.push_back(
            {std::nullopt, PfaViolationKind::kInitialSum, initial_sum, one});
    }

    bool deterministic = true;
    for (StateIndex q = 0; q < automaton.num_states(); ++q) {
        Rational out_sum = automaton.final_weight(q);
        if (!in_unit_range(automaton.final_weight(q))) {
            report.violations.push_back({q, PfaViolationKind::kWeightRange,
                                         automaton.final_weight(q),
                                         automaton.final_weight(q) < 0 ? Rational(0) : Rational(1)});
        }
        std::map<SymbolIndex, unsigned> per_symbol;
        for (const auto& t : automaton.transitions_from(q)) {
            out_sum += t.weight;
            ++per_symbol[t.symbol];
            if (!in_unit_range(t.weight)) {
                report.violations.push_back({q, PfaViolationKind::kWeightRange, t.weight,
                                             t.weight < 0 ? Rational(0) : Rational(1)});
            }
        }
        if (out_sum != one) {
            report.violations.push_back({q, PfaViolationKind::kStateSum, out_sum, one});
        }
        for (const auto& [symbol, count] : per_symbol) {
            if (count > 1) {
                deterministic = false;
                report.violations.push_back(
                    {q, PfaViolationKind::kDeterminism, Rational(count), one});
            }
        }
    }

    report.is_pfa = std::all_of(report.violations.begin(), report.violations.end(),
                                [](const PfaViolationEntry& v) {
                                    return v.kind == PfaViolationKind::kDeterminism;
                                });
    report.is_dpfa = report.is_pfa && deterministic;
    return report;
}

WeightedAutomaton build_trivial_unary_dpfa() {
    WeightedAutomaton automaton(Alphabet({"a"}), 1);
    const Rational half(1, 2);
    automaton.set_initial(0, 1);
    automaton.set_final(0, half);
    automaton.add_transition(0, 0, 0, half);
    return automaton;
}

bool dfa_accepts(const Dfa& dfa, const Word& word) {
    check_word(dfa.alphabet, word);
    StateIndex state = dfa.start;
    for (const SymbolIndex symbol : word.symbols()) {
        const auto it = dfa.delta.find({state, symbol});
        if (it == dfa.delta.end()) {
            return false;
        }
        state = it->second;
    }
    return dfa.accepting.count(state) > 0;
}

namespace {

// Cursor keeping a stack of forward vectors, one per prefix length.
class WfaCursor : public PrefixCursor {
public:
    explicit WfaCursor(const WeightedAutomaton& automaton) : automaton_(automaton) {
        std::vector<Rational> alpha(automaton.num_states());
        for (StateIndex q = 0; q < automaton.num_states(); ++q) {
            alpha[q] = automaton.initial(q);
        }
        stack_.push_back(std::move(alpha));
    }

    void push(SymbolIndex symbol) override {
        const auto& alpha = stack_.back();
        std::vector<Rational> next(automaton_.num_states(), Rational(0));
        for (StateIndex q = 0; q < automaton_.num_states(); ++q) {
            if (alpha[q] == 0) {
                continue;
            }
            for (const auto& t : automaton_.transitions_from(q)) {
                if (t.symbol == symbol) {
                    next[t.target] += alpha[q] * t.weight;
                }
            }
        }
        stack_.push_back(std::move(next));
    }

    void pop() override { stack_.pop_back(); }

    Rational weight() const override {
        const auto& alpha = stack_.back();
        Rational total = 0;
        for (StateIndex q = 0; q < automaton_.num_states(); ++q) {
            if (alpha[q] != 0) {
                total += alpha[q] * automaton_.final_weight(q);
            }
        }
        return total;
    }

private:
    const WeightedAutomaton& automaton_;
    std::vector<std::vector<Rational>> stack_;
};

}  // namespace

WfaLanguage::WfaLanguage(WeightedAutomaton automaton, bool declared_consistent)
    : automaton_(std::make_shared<const WeightedAutomaton>(std::move(automaton))),
      declared_consistent_(declared_consistent) {}

Rational WfaLanguage::weight(const Word& word) const {
    return wfa_weight(*automaton_, word);
}

std::unique_ptr<PrefixCursor> WfaLanguage::cursor() const {
    return std::make_unique<WfaCursor>(*automaton_);
}

}  // namespace rnnfsm
