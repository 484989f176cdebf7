#pragma once

// Bulk acceptance work. Each kernel has a serial reference and an OpenMP
// version that must produce identical results.

#include <cstdint>
#include <vector>

#include "ipda/automaton.hpp"
#include "ipda/search.hpp"

namespace ipda {

using EncodedWord = std::vector<std::uint32_t>;

/// accepts() on every input with default bounds.
std::vector<Verdict::Outcome> accept_batch_serial(const Automaton& a, const std::vector<EncodedWord>& inputs);
std::vector<Verdict::Outcome> accept_batch(const Automaton& a, const std::vector<EncodedWord>& inputs);

struct SweepResult {
    std::uint64_t words = 0;        // all words of length <= max_length
    std::uint64_t rejected = 0;
    std::uint64_t inconclusive = 0;
    std::vector<EncodedWord> accepted; // sorted by length, then lexicographically

    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Every word over the input alphabet of length <= max_length, one accepts() call each.
SweepResult sweep_serial(const Automaton& a, std::size_t max_length);

/// Same result, by simulating the configuration sets of all prefixes at
/// once and discarding dead subtrees whole.
SweepResult sweep(const Automaton& a, std::size_t max_length);

} // namespace ipda
