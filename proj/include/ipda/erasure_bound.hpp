#pragma once

// Sound lower bounds on the input an automaton must consume to erase a store.
//
// For a 2-level automaton, an outer element A[flag] can only be removed by a
// run that starts with the element on top; the letters that run reads depend
// on the state, on A and on the flag. Abstracting the flag to its height h
// (any symbol may sit on top of it) gives a shortest-path problem over
// (state, A, h) whose solution never exceeds the true cost. Heights above a
// horizon H share the value at H when that is provably safe, and read 0
// otherwise. Costs are saturated at a cap: a configuration whose bound exceeds
// the unread input cannot reach an empty store and is pruned.
//
// Level-1 automata use the same table with h = 0 only. Higher levels are not
// analysed and every bound is 0.

#include <cstdint>
#include <vector>

#include "ipda/automaton.hpp"
#include "ipda/store.hpp"

namespace ipda {

class ErasureBound {
public:
    /// Disabled bound: every query returns 0.
    ErasureBound() = default;
    /// `cap` should exceed the longest input the bound will be used against.
    ErasureBound(const Automaton& a, std::uint64_t cap);

    bool enabled() const { return enabled_; }
    std::uint64_t cap() const { return cap_; }
    int horizon() const { return horizon_; }
    /// True when heights above the horizon reuse the horizon's values.
    bool tail_verified() const { return tail_verified_; }

    /// Bound for erasing the top element `symbol[flag of height h]` from `state`.
    std::uint64_t element(std::uint32_t state, int symbol, std::size_t height) const;
    /// Bound for erasing a non-top element (any state).
    std::uint64_t element_any(int symbol, std::size_t height) const;

    /// Bound for erasing the whole store from `state`.
    std::uint64_t store(const Automaton& a, std::uint32_t state, const Store& s) const;
    /// Sum of element_any over all outer elements below the top.
    std::uint64_t below_top(const Automaton& a, const Store& s) const;

private:
    struct Option {
        std::uint32_t to;
        std::uint32_t consumed; // 0 or 1
        Action::Kind kind;
        int level;
        std::vector<int> word;
    };

    bool solve(int horizon, bool verified_tail);
    std::uint64_t evaluate(const Option& o, int symbol, std::size_t h) const;
    std::uint64_t at(std::uint32_t q, int sym, std::size_t h) const;
    std::uint64_t any_at(int sym, std::size_t h) const;
    std::size_t cell(std::uint32_t q, int sym, std::size_t h) const {
        return (h * states_ + q) * symbols_ + static_cast<std::size_t>(sym);
    }

    bool enabled_ = false;
    bool tail_verified_ = false;
    int levels_ = 0;
    std::uint64_t cap_ = 0;
    int horizon_ = 0;
    std::size_t states_ = 0;
    std::size_t symbols_ = 0;
    // options_[q * symbols_ + A] for empty flags and for nonempty flags
    std::vector<std::vector<Option>> empty_flag_;
    std::vector<std::vector<Option>> nonempty_flag_;
    std::vector<std::uint64_t> cost_;     // (h, q, A)
    std::vector<std::uint64_t> any_cost_; // (h, A)
};

} // namespace ipda
