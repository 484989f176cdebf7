#include <doctest.h>

#include <algorithm>
#include <set>

#include "ipda/contour.hpp"

using namespace ipda;

namespace {

ContourSpec fib_spec(const char* root, ContourKind kind, int sigma = 1) {
    const auto sys = fibonacci();
    return {sys, sys.require(root), sigma, kind};
}

std::string str(const std::vector<std::string>& w) { return join_word(w); }

} // namespace

TEST_CASE("published sector strings") {
    CHECK(str(sector_contour(fib_spec("W", ContourKind::sector), 2)) == "rssbwbwwbwwss");
    CHECK(str(sector_contour(fib_spec("B", ContourKind::sector), 2)) == "rssbwbwwss");
    CHECK(str(contour_word(fib_spec("W", ContourKind::level), 2)) == "bwbwwbww");
}

TEST_CASE("small contours") {
    CHECK(str(sector_contour(fib_spec("W", ContourKind::sector), 1)) == "rsbwws");
    CHECK(str(ball_contour(fib_spec("W", ContourKind::ball, 5), 0)) == "wwwww");
    CHECK(str(ball_contour(fib_spec("W", ContourKind::ball, 2), 1)) == "bwwbww");
    CHECK_THROWS_AS(contour_word(fib_spec("W", ContourKind::sector), 0), std::domain_error);
    CHECK_THROWS_AS(ball_contour(fib_spec("W", ContourKind::sector), 1), std::invalid_argument);
    CHECK_THROWS_AS(sector_contour(fib_spec("W", ContourKind::ball, 5), 1), std::invalid_argument);
}

TEST_CASE("ball words repeat the level word") {
    const auto spec = fib_spec("W", ContourKind::ball, 7);
    for (std::size_t l = 0; l <= 5; ++l) {
        const auto w = ball_contour(spec, l);
        const auto lw = contour_word(fib_spec("W", ContourKind::level), l);
        REQUIRE(w.size() == 7 * lw.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            CHECK(w[i] == lw[i % lw.size()]);
    }
}

TEST_CASE("lengths match the words") {
    const auto dodeca = dodecahedral();
    const std::vector<ContourSpec> specs{fib_spec("W", ContourKind::ball, 5), fib_spec("B", ContourKind::sector),
                                         fib_spec("W", ContourKind::level),
                                         {dodeca, dodeca.require("O"), 8, ContourKind::ball},
                                         {dodeca, dodeca.require("H"), 1, ContourKind::sector}};
    for (const auto& spec : specs)
        for (std::size_t l = spec.first_level(); l <= 5; ++l)
            CHECK(contour_length(spec, l) == contour_word(spec, l).size());
}

TEST_CASE("standard multiplicities") {
    CHECK(fib_spec("W", ContourKind::ball, 5).standard_sigma());
    CHECK(fib_spec("W", ContourKind::ball, 7).standard_sigma());
    CHECK_FALSE(fib_spec("W", ContourKind::ball, 6).standard_sigma());
    CHECK(fib_spec("W", ContourKind::sector).standard_sigma());
}

TEST_CASE("oracle") {
    const auto spec = fib_spec("W", ContourKind::sector);
    for (std::size_t l = 1; l <= 6; ++l)
        CHECK(oracle_level(spec, sector_contour(spec, l)) == l);
    auto w = sector_contour(spec, 3);
    w[4] = w[4] == "b" ? "w" : "b";
    CHECK_FALSE(is_oracle(spec, w));
    CHECK_FALSE(is_oracle(spec, {}));
    const auto ball = fib_spec("W", ContourKind::ball, 5);
    CHECK(oracle_level(ball, ball_contour(ball, 0)) == 0u);
    CHECK_FALSE(is_oracle(ball, {"w"}));
}

TEST_CASE("terminal alphabets") {
    CHECK(terminal_alphabet(fib_spec("W", ContourKind::sector)) == std::vector<std::string>{"r", "s", "b", "w"});
    CHECK(terminal_alphabet(fib_spec("W", ContourKind::ball, 5)) == std::vector<std::string>{"b", "w"});
    const auto dodeca = dodecahedral();
    CHECK(terminal_alphabet({dodeca, 0, 1, ContourKind::sector}).size() == 4);
}

TEST_CASE("kind names") {
    for (auto k : {ContourKind::ball, ContourKind::sector, ContourKind::level})
        CHECK(parse_contour_kind(to_string(k)) == k);
    CHECK_FALSE(parse_contour_kind("disc").has_value());
}

TEST_CASE("mutations") {
    const auto spec = fib_spec("W", ContourKind::sector);
    const auto word = sector_contour(spec, 3);
    const auto alphabet = terminal_alphabet(spec);
    const auto a = mutate(word, alphabet, 42, 100);
    CHECK(a == mutate(word, alphabet, 42, 100));
    CHECK(a != mutate(word, alphabet, 43, 100));
    REQUIRE(a.size() == 100);
    std::set<std::size_t> lengths;
    for (const auto& m : a) {
        CHECK(m != word);
        const auto diff = static_cast<long>(m.size()) - static_cast<long>(word.size());
        CHECK(diff >= -1);
        CHECK(diff <= 1);
        lengths.insert(m.size());
        for (const auto& t : m)
            CHECK(std::find(alphabet.begin(), alphabet.end(), t) != alphabet.end());
    }
    CHECK(lengths.size() == 3);
    CHECK(mutate({}, alphabet, 1, 5).size() == 5);
    CHECK_THROWS_AS(mutate(word, {}, 1, 1), std::invalid_argument);
}
