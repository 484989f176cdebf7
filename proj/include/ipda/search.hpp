#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipda/automaton.hpp"
#include "ipda/erasure_bound.hpp"
#include "ipda/store.hpp"

namespace ipda {

struct Configuration {
    std::uint32_t state = 0;
    std::size_t position = 0; // letters consumed
    Store store;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.state == b.state && a.position == b.position && a.store == b.store;
    }
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept {
        std::size_t h = c.store.hash();
        h ^= (static_cast<std::size_t>(c.state) * 0x9e3779b97f4a7c15ull) + (h << 6) + (h >> 2);
        h ^= (c.position * 0xc2b2ae3d27d4eb4full) + (h << 6) + (h >> 2);
        return h;
    }
};

/// Limits on the configuration search. Unset means unlimited.
struct SearchBounds {
    std::optional<std::uint64_t> max_store_symbols;
    std::optional<std::uint64_t> max_configurations;

    /// 4 * (n + 4) store symbols and 10^7 configurations.
    static SearchBounds defaults_for(std::size_t input_length);
    static SearchBounds unlimited() { return {}; }
};

struct SearchOptions {
    bool memoize = true;
    /// Prune configurations whose erasure bound exceeds the unread input.
    bool prune = true;
    bool record_trace = true;
    /// Precomputed bound for the same automaton. Used when its cap exceeds
    /// the input length; otherwise a bound is computed per call.
    const ErasureBound* bound = nullptr;
};

struct SearchStats {
    std::uint64_t expanded = 0;
    std::uint64_t pruned = 0;
    std::uint64_t cut_by_store_bound = 0;
    bool configuration_limit_hit = false;
};

struct Verdict {
    enum class Outcome { accepted, rejected, inconclusive };

    Outcome outcome = Outcome::rejected;
    /// Accepted only (when traces are recorded): the configuration reached
    /// from `start` and the transition ids applied along the witness run.
    Configuration start;
    std::vector<std::uint32_t> transitions;
    SearchStats stats;

    bool accepted() const { return outcome == Outcome::accepted; }
    bool rejected() const { return outcome == Outcome::rejected; }
    bool inconclusive() const { return outcome == Outcome::inconclusive; }
};

std::string to_string(Verdict::Outcome o);

struct Successor {
    Configuration configuration;
    std::uint32_t transition;
};

/// The initial configuration (q0, 0, Z[e]).
Configuration initial_configuration(const Automaton& a);

/// All configurations reachable in one step, ordered by transition id.
std::vector<Successor> step(const Automaton& a, const Configuration& c, std::span<const std::uint32_t> input);

/// Successors through ε-transitions only (no letter) or through transitions
/// reading `letter` only; the input position is not checked.
std::vector<Successor> step_with(const Automaton& a, const Configuration& c, std::optional<std::uint32_t> letter);

/// Acceptance by empty store with all input read, in any state.
Verdict accepts(const Automaton& a, std::span<const std::uint32_t> input, const SearchBounds& bounds,
                const SearchOptions& options = {});
/// Token-level convenience: encodes the word first (throws std::invalid_argument
/// on an undeclared letter) and uses default bounds when none are given.
Verdict accepts(const Automaton& a, std::span<const std::string> word,
                std::optional<SearchBounds> bounds = std::nullopt, const SearchOptions& options = {});

/// Whether `goal` is reachable from `from` reading input[from.position, goal.position).
Verdict reachable(const Automaton& a, const Configuration& from, const Configuration& goal,
                  std::span<const std::uint32_t> input, const SearchBounds& bounds,
                  const SearchOptions& options = {});

/// Reconstructs the configurations of an accepted run: start followed by one
/// configuration per applied transition. Throws std::logic_error if a step
/// does not replay under step().
std::vector<Configuration> replay(const Automaton& a, const Verdict& v, std::span<const std::uint32_t> input);

/// `(q0, 3 read, W[F].W[F.F])`
std::string render(const Automaton& a, const Configuration& c);

/// Splits a word for an automaton: contiguous characters when every input
/// token is one character, whitespace-separated tokens otherwise.
std::vector<std::string> tokenize_input(const Automaton& a, std::string_view text);

} // namespace ipda
