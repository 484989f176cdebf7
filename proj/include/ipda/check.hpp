#pragma once

// End-to-end verification of a recognizer against the contour oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ipda/builders.hpp"
#include "ipda/contour.hpp"
#include "ipda/search.hpp"

namespace ipda {

struct CheckOptions {
    std::size_t level_from = 0;
    std::size_t level_to = 4;
    std::size_t mutations = 20;
    /// Only levels up to this one get mutations (all levels when unset).
    std::optional<std::size_t> mutate_up_to;
    std::uint64_t seed = 1;
    /// Run the exhaustive sweep over all words up to this length.
    std::optional<std::size_t> exhaustive_length;
    /// Overrides of the default search bounds.
    std::optional<std::uint64_t> max_store_symbols;
    std::optional<std::uint64_t> max_configurations;
};

struct CheckRow {
    std::size_t level = 0;
    std::uint64_t length = 0;
    Verdict::Outcome positive = Verdict::Outcome::rejected;
    std::size_t mutations = 0;
    std::size_t rejected = 0;   // mutants found Rejected
    std::size_t mismatches = 0; // mutants whose verdict disagrees with the oracle
    double millis = 0;
};

struct SweepRow {
    std::size_t max_length = 0;
    std::uint64_t words = 0;
    std::uint64_t accepted = 0;
    std::uint64_t mismatches = 0; // accepted non-contour words plus rejected contour words
    std::uint64_t inconclusive = 0;
    double millis = 0;
};

struct CheckReport {
    std::vector<CheckRow> rows;
    std::optional<SweepRow> sweep;
    bool pass = false;
};

/// Mutants of the level-l word are drawn with seed `mutation_seed(seed, l)`.
std::uint64_t mutation_seed(std::uint64_t seed, std::size_t level);

CheckReport run_check(const ContourSpec& spec, Variant variant, const CheckOptions& options);

/// Aligned text table followed by `PASS` or `FAIL`.
std::string render_text(const CheckReport& r);
/// Fields: pass, rows[{level, len, positive, mutations, rejected, millis}], sweep.
std::string render_json(const CheckReport& r);

} // namespace ipda
