#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ipda/symbol.hpp"

namespace ipda {

struct Action {
    enum class Kind { pop, push };

    Kind kind = Kind::pop;
    int level = 1;
    std::vector<Symbol> word; // push only

    static Action pop(int level) { return {Kind::pop, level, {}}; }
    static Action push(int level, std::vector<Symbol> word) { return {Kind::push, level, std::move(word)}; }

    friend bool operator==(const Action&, const Action&) = default;
};

/// (from, input item, topsym pattern) -> (to, action). An absent input is ε.
struct Transition {
    std::string from;
    std::optional<std::string> input;
    std::vector<Symbol> pattern;
    std::string to;
    Action action;

    friend bool operator==(const Transition&, const Transition&) = default;
};

enum class AutomatonErrorKind { syntax, undeclared_name, level_violation };

class AutomatonError : public std::runtime_error {
public:
    AutomatonError(AutomatonErrorKind kind, int line, const std::string& what);

    AutomatonErrorKind kind() const { return kind_; }
    /// 1-based source line, 0 when not parsed from text.
    int line() const { return line_; }

private:
    AutomatonErrorKind kind_;
    int line_;
};

/// A k-iterated pushdown automaton. Acceptance is by empty store with the
/// input exhausted; there are no final states.
class Automaton {
public:
    static constexpr std::int32_t kEpsilon = -1;

    struct Compiled {
        std::uint32_t from;
        std::int32_t input; // kEpsilon or an input-alphabet index
        std::uint32_t to;
    };

    /// Validates and indexes the definition; duplicate transitions are merged.
    /// Throws AutomatonError.
    Automaton(int levels, std::vector<std::string> states, std::string initial_state,
              std::vector<std::string> input_alphabet, std::vector<Symbol> store_alphabet,
              Symbol start_symbol, std::vector<Transition> transitions);

    int levels() const { return levels_; }
    const std::vector<std::string>& states() const { return states_; }
    const std::string& initial_state() const { return initial_; }
    const std::vector<std::string>& input_alphabet() const { return input_alphabet_; }
    const std::vector<Symbol>& store_alphabet() const { return store_alphabet_; }
    Symbol start_symbol() const { return start_symbol_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    std::uint32_t initial_index() const { return initial_index_; }
    std::optional<std::uint32_t> state_index(std::string_view name) const;
    std::optional<std::uint32_t> input_index(std::string_view letter) const;
    /// Index in store_alphabet(), or -1.
    int symbol_index(Symbol s) const {
        return s.id() < symbol_index_.size() ? symbol_index_[s.id()] : -1;
    }
    const Compiled& compiled(std::size_t transition) const { return compiled_[transition]; }

    /// Ids of transitions leaving `state` whose pattern equals `topsym`, ascending.
    std::span<const std::uint32_t> candidates(std::uint32_t state, std::span<const Symbol> topsym) const;

    /// True when some store token is longer than one character.
    bool multichar_store() const;
    /// True when some input token is longer than one character.
    bool multichar_input() const;

    /// Converts a token word to input-alphabet indices; throws
    /// std::invalid_argument naming the first undeclared letter.
    std::vector<std::uint32_t> encode_input(std::span<const std::string> word) const;

    friend bool operator==(const Automaton& a, const Automaton& b);

private:
    std::string lookup_key(std::uint32_t state, std::span<const Symbol> pattern) const;

    int levels_;
    std::vector<std::string> states_;
    std::string initial_;
    std::vector<std::string> input_alphabet_;
    std::vector<Symbol> store_alphabet_;
    Symbol start_symbol_;
    std::vector<Transition> transitions_;

    std::uint32_t initial_index_ = 0;
    std::unordered_map<std::string, std::uint32_t> state_ids_;
    std::unordered_map<std::string, std::uint32_t> input_ids_;
    std::vector<int> symbol_index_;
    std::vector<Compiled> compiled_;
    std::unordered_map<std::string, std::vector<std::uint32_t>> by_key_;
};

/// Line-oriented text format:
///
///     levels: 2
///     states: q0 q1
///     initial: q0
///     input: b w
///     store: Z B W F
///     start_symbol: Z
///     t: q0 eps Z  -> q0 push 2 F
///     t: q0 eps ZF -> q0 push 1 W W W W W
///
/// `#` starts a comment. Patterns are written as concatenated characters when
/// every store token is one character, and as `[X1 F]` otherwise; `[]` is the
/// empty pattern. An empty push word is written `eps`.
Automaton parse_automaton(std::string_view text);
std::string render_automaton(const Automaton& a);

/// Human-readable form of one transition, as in the file format without `t:`.
std::string describe(const Automaton& a, std::size_t transition);

} // namespace ipda
