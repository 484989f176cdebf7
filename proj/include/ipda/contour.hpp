#pragma once

// Contour words of balls and truncated sectors: the reference languages the
// automata are checked against.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ipda/grammar.hpp"

namespace ipda {

enum class ContourKind { ball, sector, level };

struct ContourSpec {
    SubstitutionSystem system;
    std::size_t root;
    int sigma = 1; // balls only
    ContourKind kind = ContourKind::ball;

    /// False when a ball uses a multiplicity the system does not declare.
    bool standard_sigma() const;
    /// Smallest level of the family: 1 for sectors, 0 otherwise.
    std::size_t first_level() const;
};

std::optional<ContourKind> parse_contour_kind(std::string_view name);
std::string to_string(ContourKind k);

inline const std::string kSectorRoot = "r";
inline const std::string kSectorSide = "s";

/// Streams the contour word of the family at `level`. Sector words are
/// r s^l lw(l) s^l when the system has side markers and lw(l) otherwise.
/// Throws std::domain_error for a sector at level 0.
void contour_word(const ContourSpec& spec, std::size_t level, const std::function<void(const std::string&)>& emit);
std::vector<std::string> contour_word(const ContourSpec& spec, std::size_t level);

std::vector<std::string> ball_contour(const ContourSpec& spec, std::size_t level);
std::vector<std::string> sector_contour(const ContourSpec& spec, std::size_t level);

/// Exact length of contour_word(spec, level), from the level counts.
BigInt contour_length(const ContourSpec& spec, std::size_t level);

/// The level whose contour word equals `word`, if any.
std::optional<std::size_t> oracle_level(const ContourSpec& spec, const std::vector<std::string>& word);
inline bool is_oracle(const ContourSpec& spec, const std::vector<std::string>& word) {
    return oracle_level(spec, word).has_value();
}

/// Terminal letters a recognizer for the family reads.
std::vector<std::string> terminal_alphabet(const ContourSpec& spec);

/// `count` single-edit variants of `word` (substitution, insertion or
/// deletion of one letter over `alphabet`), each different from `word`.
/// Deterministic in `seed`.
std::vector<std::vector<std::string>> mutate(const std::vector<std::string>& word,
                                             const std::vector<std::string>& alphabet, std::uint64_t seed,
                                             std::size_t count);

} // namespace ipda
