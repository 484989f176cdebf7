#include <doctest.h>

#include "ipda/builders.hpp"
#include "ipda/kernels.hpp"

using namespace ipda;

namespace {

std::vector<EncodedWord> words_from(const ContourSpec& spec, const Automaton& a, std::size_t levels) {
    std::vector<EncodedWord> out;
    for (std::size_t l = spec.first_level(); l <= levels; ++l) {
        const auto word = contour_word(spec, l);
        out.push_back(a.encode_input(word));
        for (const auto& m : mutate(word, a.input_alphabet(), 100 + l, 12))
            out.push_back(a.encode_input(m));
    }
    return out;
}

} // namespace

TEST_CASE("parallel batch equals the serial batch") {
    const auto sys = fibonacci();
    for (auto kind : {ContourKind::ball, ContourKind::sector}) {
        const ContourSpec spec{sys, sys.require("W"), 5, kind};
        const Automaton a = automaton_for(spec);
        const auto inputs = words_from(spec, a, 4);
        const auto serial = accept_batch_serial(a, inputs);
        CHECK(accept_batch(a, inputs) == serial);
        REQUIRE(serial.size() == inputs.size());
        for (std::size_t i = 0; i < inputs.size(); ++i)
            CHECK(serial[i] == accepts(a, inputs[i], SearchBounds::defaults_for(inputs[i].size())).outcome);
    }
    CHECK(accept_batch(fibonacci_automaton(), {}).empty());
}

TEST_CASE("batch on fibonacci lengths") {
    const Automaton a = fibonacci_automaton();
    std::vector<EncodedWord> inputs;
    for (std::size_t n = 0; n <= 25; ++n)
        inputs.emplace_back(n, 0);
    const auto got = accept_batch(a, inputs);
    for (std::size_t n = 0; n <= 25; ++n) {
        const bool fib = n == 1 || n == 2 || n == 3 || n == 5 || n == 8 || n == 13 || n == 21;
        CHECK(got[n] == (fib ? Verdict::Outcome::accepted : Verdict::Outcome::rejected));
    }
}

TEST_CASE("trie sweep equals word-by-word enumeration") {
    const auto sys = fibonacci();
    const std::vector<ContourSpec> specs{{sys, sys.require("W"), 5, ContourKind::ball},
                                         {sys, sys.require("B"), 1, ContourKind::sector},
                                         {sys, sys.require("W"), 1, ContourKind::level}};
    for (const auto& spec : specs) {
        const Automaton a = automaton_for(spec);
        const SweepResult fast = sweep(a, 8);
        CHECK(fast == sweep_serial(a, 8));
        CHECK(fast.inconclusive == 0);
        std::uint64_t total = 0, power = 1;
        for (std::size_t n = 0; n <= 8; ++n, power *= a.input_alphabet().size())
            total += power;
        CHECK(fast.words == total);
        CHECK(fast.rejected + fast.accepted.size() == total);
    }
    const Automaton fib = fibonacci_automaton();
    const SweepResult s = sweep(fib, 14);
    CHECK(s == sweep_serial(fib, 14));
    REQUIRE(s.accepted.size() == 6);
    CHECK(s.accepted.back().size() == 13);
}
