#pragma once

// Recognizers for the Fibonacci lengths and for ball and sector contour words.

#include <optional>
#include <string_view>

#include "ipda/automaton.hpp"
#include "ipda/contour.hpp"
#include "ipda/grammar.hpp"

namespace ipda {

enum class Variant {
    corrected,
    /// The transition tables exactly as originally published.
    as_printed,
};

std::optional<Variant> parse_variant(std::string_view name);
std::string to_string(Variant v);

Automaton fibonacci_automaton(Variant v = Variant::corrected);

/// Accepts exactly the ball contour words (lw(l))^sigma, l >= 0.
/// as_printed requires the Fibonacci rules and root W.
Automaton ball_automaton(const SubstitutionSystem& sys, std::size_t root, int sigma,
                         Variant v = Variant::corrected);

/// Accepts exactly the sector contour words for l >= 1.
/// as_printed requires the Fibonacci rules (root W or B).
Automaton sector_automaton(const SubstitutionSystem& sys, std::size_t root, Variant v = Variant::corrected);

/// Dispatch on spec.kind; a level family is a ball with sigma = 1.
Automaton automaton_for(const ContourSpec& spec, Variant v = Variant::corrected);

} // namespace ipda
