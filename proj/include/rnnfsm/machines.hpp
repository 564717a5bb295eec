#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rnnfsm/words.hpp"

namespace rnnfsm {

enum class StackTop : std::uint8_t { kZero, kOne, kEmpty };
enum class StackAction : std::uint8_t { kPush0, kPush1, kPop, kNoop };

const char* to_string(StackTop top);
const char* to_string(StackAction action);
std::optional<StackTop> stack_top_from_string(const std::string& text);
std::optional<StackAction> stack_action_from_string(const std::string& text);

// Binary stack contents; element 0 is the top.
using StackBits = std::vector<std::uint8_t>;

struct TwoStackRule {
    std::uint32_t next_state;
    StackAction action1;
    StackAction action2;
};

// Deterministic machine with a control unit and two binary stacks. A missing
// (state, tops) entry is an implicit transition to the halt state with no
// stack actions: a stuck machine halts. The halt state has no outgoing rules.
class TwoStackMachine {
public:
    TwoStackMachine(std::vector<std::string> state_names, std::uint32_t start, std::uint32_t halt);

    void set_rule(std::uint32_t state, StackTop top1, StackTop top2, TwoStackRule rule);
    std::optional<TwoStackRule> rule(std::uint32_t state, StackTop top1, StackTop top2) const;

    std::size_t num_states() const { return state_names_.size(); }
    const std::vector<std::string>& state_names() const { return state_names_; }
    std::uint32_t start() const { return start_; }
    std::uint32_t halt() const { return halt_; }
    const std::map<std::tuple<std::uint32_t, StackTop, StackTop>, TwoStackRule>& rules() const {
        return rules_;
    }

private:
    std::vector<std::string> state_names_;
    std::uint32_t start_;
    std::uint32_t halt_;
    std::map<std::tuple<std::uint32_t, StackTop, StackTop>, TwoStackRule> rules_;
};

struct TwoStackConfig {
    std::uint32_t state;
    StackBits stack1;
    StackBits stack2;
};

StackTop top_of(const StackBits& stack);
void apply_action(StackBits& stack, StackAction action);

// Step-by-step reference simulator; the oracle the compiled network is
// checked against.
class TwoStackSimulator {
public:
    TwoStackSimulator(const TwoStackMachine& machine, StackBits stack1, StackBits stack2 = {});

    const TwoStackConfig& config() const { return config_; }
    bool halted() const { return config_.state == machine_.halt(); }
    void step();

private:
    const TwoStackMachine& machine_;
    TwoStackConfig config_;
};

// Machine step at which the halt state is first entered (step 0 when the
// start state is the halt state); nullopt if it does not halt within
// max_steps.
std::optional<std::uint64_t> two_stack_halting_step(const TwoStackMachine& machine,
                                                    const StackBits& stack1,
                                                    const StackBits& stack2,
                                                    std::uint64_t max_steps);

enum class TapeMove : std::uint8_t { kLeft, kRight };

struct TmRule {
    std::uint32_t next_state;
    std::uint32_t write;
    TapeMove move;
};

// Deterministic single-tape Turing machine; tape symbols are indices into
// tape_symbols, which must include the blank. The halt state has no rules.
struct TuringMachine {
    std::vector<std::string> state_names;
    std::vector<std::string> tape_symbols;
    std::uint32_t blank = 0;
    std::uint32_t start = 0;
    std::uint32_t halt = 0;
    std::map<std::pair<std::uint32_t, std::uint32_t>, TmRule> rules;
};

class TuringSimulator {
public:
    TuringSimulator(const TuringMachine& machine, const std::vector<std::uint32_t>& input);

    bool halted() const { return state_ == machine_.halt; }
    void step();
    std::uint32_t state() const { return state_; }
    std::int64_t head() const { return head_; }
    std::uint32_t read(std::int64_t position) const;
    // Tape contents between the leftmost and rightmost non-blank cells.
    std::vector<std::uint32_t> tape_contents() const;

private:
    const TuringMachine& machine_;
    std::map<std::int64_t, std::uint32_t> tape_;
    std::int64_t head_ = 0;
    std::uint32_t state_;
};

// Result of lowering a Turing machine to a two-stack machine. Tape cells are
// encoded as fixed-width bit blocks; stack 1 holds the cell under the head on
// top with the left context below, stack 2 holds the right context.
struct TmToTwoStackResult {
    TwoStackMachine machine;
    unsigned block_width;
    std::vector<std::vector<std::uint8_t>> symbol_code;  // tape symbol -> block bits
    StackBits initial_stack1;                            // encoded input
};

TmToTwoStackResult tm_to_two_stack(const TuringMachine& machine,
                                   const std::vector<std::uint32_t>& input);

// Decodes a block-encoded stack back into tape symbols, top block first.
std::vector<std::uint32_t> decode_tape_stack(const TmToTwoStackResult& lowering,
                                             const StackBits& stack);

// Reconstructs the tape left-to-right from a halted two-stack configuration,
// trimming blank cells at both ends.
std::vector<std::uint32_t> tape_from_stacks(const TmToTwoStackResult& lowering,
                                            const StackBits& stack1, const StackBits& stack2);

}  // namespace rnnfsm
