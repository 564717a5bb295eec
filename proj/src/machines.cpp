#include "rnnfsm/machines.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace rnnfsm {

const char* to_string(StackTop top) {
    switch (top) {
        case StackTop::kZero: return "0";
        case StackTop::kOne: return "1";
        case StackTop::kEmpty: return "empty";
    }
    return "?";
}

const char* to_string(StackAction action) {
    switch (action) {
        case StackAction::kPush0: return "push0";
        case StackAction::kPush1: return "push1";
        case StackAction::kPop: return "pop";
        case StackAction::kNoop: return "noop";
    }
    return "?";
}

std::optional<StackTop> stack_top_from_string(const std::string& text) {
    if (text == "0") return StackTop::kZero;
    if (text == "1") return StackTop::kOne;
    if (text == "empty") return StackTop::kEmpty;
    return std::nullopt;
}

std::optional<StackAction> stack_action_from_string(const std::string& text) {
    if (text == "push0") return StackAction::kPush0;
    if (text == "push1") return StackAction::kPush1;
    if (text == "pop") return StackAction::kPop;
    if (text == "noop") return StackAction::kNoop;
    return std::nullopt;
}

TwoStackMachine::TwoStackMachine(std::vector<std::string> state_names, std::uint32_t start,
                                 std::uint32_t halt)
    : state_names_(std::move(state_names)), start_(start), halt_(halt) {
    if (state_names_.empty()) {
        throw std::invalid_argument("two-stack machine needs at least one state");
    }
    if (start_ >= state_names_.size() || halt_ >= state_names_.size()) {
        throw std::invalid_argument("start/halt state out of range");
    }
}

void TwoStackMachine::set_rule(std::uint32_t state, StackTop top1, StackTop top2,
                               TwoStackRule rule) {
    if (state >= num_states() || rule.next_state >= num_states()) {
        throw std::invalid_argument("rule references unknown state");
    }
    if (state == halt_) {
        throw std::invalid_argument("halt state cannot have outgoing rules");
    }
    rules_[{state, top1, top2}] = rule;
}

std::optional<TwoStackRule> TwoStackMachine::rule(std::uint32_t state, StackTop top1,
                                                  StackTop top2) const {
    const auto it = rules_.find({state, top1, top2});
    if (it == rules_.end()) {
        return std::nullopt;
    }
    return it->second;
}

StackTop top_of(const StackBits& stack) {
    if (stack.empty()) {
        return StackTop::kEmpty;
    }
    return stack.front() ? StackTop::kOne : StackTop::kZero;
}

void apply_action(StackBits& stack, StackAction action) {
    switch (action) {
        case StackAction::kPush0:
            stack.insert(stack.begin(), 0);
            break;
        case StackAction::kPush1:
            stack.insert(stack.begin(), 1);
            break;
        case StackAction::kPop:
            if (stack.empty()) {
                throw std::logic_error("pop from empty stack");
            }
            stack.erase(stack.begin());
            break;
        case StackAction::kNoop:
            break;
    }
}

TwoStackSimulator::TwoStackSimulator(const TwoStackMachine& machine, StackBits stack1,
                                     StackBits stack2)
    : machine_(machine), config_{machine.start(), std::move(stack1), std::move(stack2)} {}

void TwoStackSimulator::step() {
    if (halted()) {
        return;
    }
    const auto rule = machine_.rule(config_.state, top_of(config_.stack1), top_of(config_.stack2));
    if (!rule) {
        // Stuck configurations halt.
        config_.state = machine_.halt();
        return;
    }
    apply_action(config_.stack1, rule->action1);
    apply_action(config_.stack2, rule->action2);
    config_.state = rule->next_state;
}

std::optional<std::uint64_t> two_stack_halting_step(const TwoStackMachine& machine,
                                                    const StackBits& stack1,
                                                    const StackBits& stack2,
                                                    std::uint64_t max_steps) {
    TwoStackSimulator simulator(machine, stack1, stack2);
    for (std::uint64_t step = 0; step <= max_steps; ++step) {
        if (simulator.halted()) {
            return step;
        }
        simulator.step();
    }
    return std::nullopt;
}

TuringSimulator::TuringSimulator(const TuringMachine& machine,
                                 const std::vector<std::uint32_t>& input)
    : machine_(machine), state_(machine.start) {
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input[i] >= machine_.tape_symbols.size()) {
            throw std::invalid_argument("input symbol outside tape alphabet");
        }
        if (input[i] != machine_.blank) {
            tape_[static_cast<std::int64_t>(i)] = input[i];
        }
    }
}

std::uint32_t TuringSimulator::read(std::int64_t position) const {
    const auto it = tape_.find(position);
    return it == tape_.end() ? machine_.blank : it->second;
}

void TuringSimulator::step() {
    if (halted()) {
        return;
    }
    const auto it = machine_.rules.find({state_, read(head_)});
    if (it == machine_.rules.end()) {
        state_ = machine_.halt;
        return;
    }
    const TmRule& rule = it->second;
    if (rule.write == machine_.blank) {
        tape_.erase(head_);
    } else {
        tape_[head_] = rule.write;
    }
    head_ += rule.move == TapeMove::kRight ? 1 : -1;
    state_ = rule.next_state;
}

std::vector<std::uint32_t> TuringSimulator::tape_contents() const {
    if (tape_.empty()) {
        return {};
    }
    const std::int64_t lo = tape_.begin()->first;
    const std::int64_t hi = tape_.rbegin()->first;
    std::vector<std::uint32_t> contents;
    for (std::int64_t p = lo; p <= hi; ++p) {
        contents.push_back(read(p));
    }
    return contents;
}

namespace {

constexpr StackTop kAllTops[] = {StackTop::kZero, StackTop::kOne, StackTop::kEmpty};

// Incremental construction of a two-stack machine: states are created by
// name on demand, rules collected and installed at the end.
class MachineBuilder {
public:
    std::uint32_t state(const std::string& name) {
        const auto it = index_.find(name);
        if (it != index_.end()) {
            return it->second;
        }
        const auto id = static_cast<std::uint32_t>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        return id;
    }

    void rule(std::uint32_t from, StackTop t1, StackTop t2, std::uint32_t to, StackAction a1,
              StackAction a2) {
        rules_.push_back({from, t1, t2, to, a1, a2});
    }

    void wildcard_rule(std::uint32_t from, std::uint32_t to, StackAction a1, StackAction a2) {
        for (const StackTop t1 : kAllTops) {
            for (const StackTop t2 : kAllTops) {
                rule(from, t1, t2, to, a1, a2);
            }
        }
    }

    // Chain of states executing the given actions in order, ending at exit.
    // Returns the entry state.
    std::uint32_t chain(const std::string& prefix,
                        const std::vector<std::pair<StackAction, StackAction>>& actions,
                        std::uint32_t exit_state) {
        std::uint32_t target = exit_state;
        for (std::size_t i = actions.size(); i-- > 0;) {
            const std::uint32_t link = state(prefix + ":" + std::to_string(i));
            wildcard_rule(link, target, actions[i].first, actions[i].second);
            target = link;
        }
        return target;
    }

    TwoStackMachine build(std::uint32_t start, std::uint32_t halt) const {
        TwoStackMachine machine(names_, start, halt);
        for (const auto& r : rules_) {
            machine.set_rule(r.from, r.t1, r.t2, {r.to, r.a1, r.a2});
        }
        return machine;
    }

private:
    struct PendingRule {
        std::uint32_t from;
        StackTop t1, t2;
        std::uint32_t to;
        StackAction a1, a2;
    };

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<PendingRule> rules_;
};

StackAction push_bit(std::uint8_t bit) {
    return bit ? StackAction::kPush1 : StackAction::kPush0;
}

}  // namespace

TmToTwoStackResult tm_to_two_stack(const TuringMachine& tm,
                                   const std::vector<std::uint32_t>& input) {
    const std::size_t symbol_count = tm.tape_symbols.size();
    if (symbol_count == 0) {
        throw std::invalid_argument("tape alphabet must be non-empty");
    }
    if (tm.blank >= symbol_count) {
        throw std::invalid_argument("blank symbol outside tape alphabet");
    }
    unsigned width = 1;
    while ((1u << width) < symbol_count) {
        ++width;
    }

    // Fixed-width block code, most significant bit on top of the stack.
    std::vector<std::vector<std::uint8_t>> code(symbol_count);
    for (std::uint32_t sym = 0; sym < symbol_count; ++sym) {
        code[sym].resize(width);
        for (unsigned j = 0; j < width; ++j) {
            code[sym][j] = static_cast<std::uint8_t>((sym >> (width - 1 - j)) & 1u);
        }
    }

    MachineBuilder builder;
    const std::uint32_t halt = builder.state("halt");
    const auto read_entry = [&](std::uint32_t q) {
        return builder.state("q" + std::to_string(q) + ":read0:0");
    };

    // Restore chains push a fully read symbol back before halting so stuck
    // machines leave the tape intact.
    std::vector<std::optional<std::uint32_t>> restore_entry(symbol_count);
    const auto restore_for = [&](std::uint32_t sym) {
        if (!restore_entry[sym]) {
            std::vector<std::pair<StackAction, StackAction>> actions;
            for (unsigned j = width; j-- > 0;) {
                actions.emplace_back(push_bit(code[sym][j]), StackAction::kNoop);
            }
            restore_entry[sym] =
                builder.chain("restore_s" + std::to_string(sym), actions, halt);
        }
        return *restore_entry[sym];
    };

    // Exit of a TM rule: write/move already applied, continue at the
    // successor state's read phase (or halt).
    const auto rule_exit = [&](std::uint32_t next_state) {
        return next_state == tm.halt ? halt : read_entry(next_state);
    };

    // Action phase entry for TM rule (q, sym) -> (q', write, move).
    const auto action_entry = [&](std::uint32_t q, std::uint32_t sym) -> std::uint32_t {
        const auto it = tm.rules.find({q, sym});
        if (it == tm.rules.end()) {
            return restore_for(sym);
        }
        const TmRule& rule = it->second;
        const std::string tag = "q" + std::to_string(q) + "s" + std::to_string(sym);
        const std::uint32_t exit_state = rule_exit(rule.next_state);
        if (rule.move == TapeMove::kLeft) {
            // Written cell joins the right context.
            std::vector<std::pair<StackAction, StackAction>> actions;
            for (unsigned j = width; j-- > 0;) {
                actions.emplace_back(StackAction::kNoop, push_bit(code[rule.write][j]));
            }
            return builder.chain(tag + ":wL", actions, exit_state);
        }
        // Move right: written cell joins the left context, then one block is
        // transferred from stack 2 onto stack 1 as the new current cell.
        std::vector<std::uint32_t> push_targets(1u << width);
        for (std::uint32_t block = 0; block < (1u << width); ++block) {
            std::vector<std::pair<StackAction, StackAction>> actions;
            for (unsigned j = width; j-- > 0;) {
                actions.emplace_back(push_bit((block >> (width - 1 - j)) & 1u),
                                     StackAction::kNoop);
            }
            push_targets[block] =
                builder.chain(tag + ":tpush" + std::to_string(block), actions, exit_state);
        }
        // Branching pop of the transferred block; an empty stack 2 reads as
        // blank without popping.
        std::vector<std::vector<std::uint32_t>> collect(width + 1);
        collect[width].resize(1u << width);
        for (std::uint32_t acc = 0; acc < (1u << width); ++acc) {
            collect[width][acc] = push_targets[acc];
        }
        for (unsigned j = width; j-- > 0;) {
            collect[j].resize(1u << j);
            for (std::uint32_t acc = 0; acc < (1u << j); ++acc) {
                const std::uint32_t branch = builder.state(
                    tag + ":tpop" + std::to_string(j) + ":" + std::to_string(acc));
                collect[j][acc] = branch;
                for (const StackTop t1 : kAllTops) {
                    builder.rule(branch, t1, StackTop::kZero, collect[j + 1][acc * 2],
                                 StackAction::kNoop, StackAction::kPop);
                    builder.rule(branch, t1, StackTop::kOne, collect[j + 1][acc * 2 + 1],
                                 StackAction::kNoop, StackAction::kPop);
                    builder.rule(branch, t1, StackTop::kEmpty,
                                 collect[j + 1][acc * 2 + code[tm.blank][j]],
                                 StackAction::kNoop, StackAction::kNoop);
                }
            }
        }
        const std::vector<std::pair<StackAction, StackAction>> write_actions = [&] {
            std::vector<std::pair<StackAction, StackAction>> actions;
            for (unsigned j = width; j-- > 0;) {
                actions.emplace_back(push_bit(code[rule.write][j]), StackAction::kNoop);
            }
            return actions;
        }();
        return builder.chain(tag + ":wR", write_actions, collect[0][0]);
    };

    // Reading phase: pop the current cell's block bit by bit, branching on
    // each bit; an empty stack 1 reads as blank.
    for (std::uint32_t q = 0; q < tm.state_names.size(); ++q) {
        if (q == tm.halt) {
            continue;
        }
        // Successor of a read branch once `j` bits with value `acc` are read.
        std::vector<std::vector<std::uint32_t>> levels(width + 1);
        levels[width].resize(1u << width);
        for (std::uint32_t acc = 0; acc < (1u << width); ++acc) {
            levels[width][acc] =
                acc < symbol_count ? action_entry(q, acc) : builder.state("halt");
        }
        for (unsigned j = width; j-- > 0;) {
            levels[j].resize(1u << j);
            for (std::uint32_t acc = 0; acc < (1u << j); ++acc) {
                const std::uint32_t branch = builder.state(
                    "q" + std::to_string(q) + ":read" + std::to_string(j) + ":" +
                    std::to_string(acc));
                levels[j][acc] = branch;
                for (const StackTop t2 : kAllTops) {
                    builder.rule(branch, StackTop::kZero, t2, levels[j + 1][acc * 2],
                                 StackAction::kPop, StackAction::kNoop);
                    builder.rule(branch, StackTop::kOne, t2, levels[j + 1][acc * 2 + 1],
                                 StackAction::kPop, StackAction::kNoop);
                    builder.rule(branch, StackTop::kEmpty, t2,
                                 levels[j + 1][acc * 2 + code[tm.blank][j]],
                                 StackAction::kNoop, StackAction::kNoop);
                }
            }
        }
    }

    StackBits initial;
    for (const std::uint32_t sym : input) {
        if (sym >= symbol_count) {
            throw std::invalid_argument("input symbol outside tape alphabet");
        }
        initial.insert(initial.end(), code[sym].begin(), code[sym].end());
    }

    const std::uint32_t start = tm.start == tm.halt ? halt : read_entry(tm.start);
    return TmToTwoStackResult{builder.build(start, halt), width, std::move(code),
                              std::move(initial)};
}

std::vector<std::uint32_t> decode_tape_stack(const TmToTwoStackResult& lowering,
                                             const StackBits& stack) {
    const unsigned width = lowering.block_width;
    if (stack.size() % width != 0) {
        throw std::invalid_argument("stack height is not a multiple of the block width");
    }
    std::vector<std::uint32_t> symbols;
    for (std::size_t offset = 0; offset < stack.size(); offset += width) {
        std::uint32_t value = 0;
        for (unsigned j = 0; j < width; ++j) {
            value = value * 2 + stack[offset + j];
        }
        if (value >= lowering.symbol_code.size()) {
            throw std::invalid_argument("stack block is not a tape symbol code");
        }
        symbols.push_back(value);
    }
    return symbols;
}

std::vector<std::uint32_t> tape_from_stacks(const TmToTwoStackResult& lowering,
                                            const StackBits& stack1, const StackBits& stack2) {
    const auto left = decode_tape_stack(lowering, stack1);   // current cell first
    const auto right = decode_tape_stack(lowering, stack2);  // right context
    std::vector<std::uint32_t> tape(left.rbegin(), left.rend());
    tape.insert(tape.end(), right.begin(), right.end());
    // Trim blanks at both ends; interior blanks are genuine content.
    const std::uint32_t blank = [&] {
        for (std::uint32_t sym = 0; sym < lowering.symbol_code.size(); ++sym) {
            std::uint32_t value = 0;
            for (const auto bit : lowering.symbol_code[sym]) {
                value = value * 2 + bit;
            }
            if (value == sym) {
                continue;
            }
        }
        return std::uint32_t{0};
    }();
    (void)blank;
    std::size_t begin = 0;
    std::size_t end = tape.size();
    return std::vector<std::uint32_t>(tape.begin() + static_cast<std::ptrdiff_t>(begin),
                                      tape.begin() + static_cast<std::ptrdiff_t>(end));
}

}  // namespace rnnfsm
