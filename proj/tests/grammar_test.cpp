#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ipda/grammar.hpp"

using namespace ipda;

namespace {

// f0 = f1 = 1, by plain iteration.
std::vector<BigInt> fibonacci_sequence(std::size_t n) {
    std::vector<BigInt> f{1, 1};
    while (f.size() < n)
        f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f;
}

std::string labels_of(const SubstitutionSystem& sys, const std::vector<std::size_t>& w) {
    std::vector<std::string> out;
    for (std::size_t x : w)
        out.push_back(sys.labels()[x]);
    return join_word(out);
}

// Reads "label c1 c2 ..." rows, skipping comments.
std::vector<std::pair<std::string, std::vector<int>>> read_table(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::vector<std::pair<std::string, std::vector<int>>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string label;
        ls >> label;
        std::vector<int> counts;
        for (int c; ls >> c;)
            counts.push_back(c);
        rows.emplace_back(label, counts);
    }
    return rows;
}

void check_golden(const SubstitutionSystem& sys, const std::string& file) {
    const auto rows = read_table(std::string(IPDA_TEST_DATA) + "/" + file);
    REQUIRE(rows.size() == sys.size());
    const CountMatrix m = sys.count_matrix();
    for (std::size_t x = 0; x < rows.size(); ++x) {
        CAPTURE(rows[x].first);
        CHECK(sys.labels()[x] == rows[x].first);
        REQUIRE(rows[x].second.size() == sys.size());
        for (std::size_t y = 0; y < sys.size(); ++y)
            CHECK(m[x][y] == rows[x].second[y]);
    }
}

} // namespace

TEST_CASE("fibonacci rules") {
    const auto sys = fibonacci();
    CHECK(sys.labels() == std::vector<std::string>{"B", "W"});
    CHECK(labels_of(sys, sys.rule(sys.require("B"))) == "BW");
    CHECK(labels_of(sys, sys.rule(sys.require("W"))) == "BWW");
    CHECK(sys.read_letter(sys.require("W")) == "w");
    CHECK(sys.side_markers());
}

TEST_CASE("level words") {
    const auto sys = fibonacci();
    const auto w = sys.require("W");
    CHECK(labels_of(sys, level_word(sys, w, 0)) == "W");
    CHECK(labels_of(sys, level_word(sys, w, 1)) == "BWW");
    CHECK(labels_of(sys, level_word(sys, w, 2)) == "BWBWWBWW");
    CHECK(join_word(read_word(sys, level_word(sys, w, 2))) == "bwbwwbww");
    CHECK(labels_of(sys, level_word(sys, sys.require("B"), 2)) == "BWBWW");
    std::size_t streamed = 0;
    level_word(sys, w, 9, [&](std::size_t) { ++streamed; });
    CHECK(streamed == level_word(sys, w, 9).size());
}

TEST_CASE("level words unfold one step at a time") {
    for (const auto& sys : {fibonacci(), polygonal(7), dodecahedral(), cell120()}) {
        for (std::size_t root = 0; root < sys.size(); ++root) {
            for (std::size_t l = 0; l < 3; ++l) {
                std::vector<std::size_t> expanded;
                for (std::size_t x : level_word(sys, root, l))
                    for (std::size_t y : sys.rule(x))
                        expanded.push_back(y);
                CHECK(expanded == level_word(sys, root, l + 1));
            }
        }
    }
}

TEST_CASE("total counts are odd-indexed fibonacci numbers") {
    const auto sys = fibonacci();
    const auto f = fibonacci_sequence(110);
    for (std::size_t l = 0; l <= 50; ++l) {
        CAPTURE(l);
        CHECK(level_total(sys, sys.require("W"), l) == f[2 * l + 1]);
        CHECK(level_total(sys, sys.require("B"), l) == f[2 * l]);
    }
}

TEST_CASE("counts agree with expansion") {
    const auto sys = fibonacci();
    for (std::size_t l = 0; l <= 12; ++l) {
        const auto word = level_word(sys, sys.require("W"), l);
        const auto counts = level_counts(sys, sys.require("W"), l);
        for (std::size_t x = 0; x < sys.size(); ++x)
            CHECK(counts[x] == static_cast<int>(std::count(word.begin(), word.end(), x)));
    }
    const auto dodeca = dodecahedral();
    for (std::size_t l = 0; l <= 6; ++l)
        CHECK(level_total(dodeca, dodeca.require("O"), l) == level_word(dodeca, dodeca.require("O"), l).size());
}

TEST_CASE("dodecahedral rules") {
    const auto sys = dodecahedral();
    CHECK(labels_of(sys, level_word(sys, sys.require("O"), 1)) == "OOOOOCCCT");
    CHECK(sys.ball_multiplicities() == std::vector<int>{8});
    CHECK_FALSE(sys.side_markers());
    check_golden(sys, "dodeca_table.txt");
}

TEST_CASE("120-cell table") {
    const auto sys = cell120();
    check_golden(sys, "cell120_table.txt");
    CHECK(level_total(sys, sys.require("9"), 1) == 116);
    CHECK(level_word(sys, sys.require("9"), 1).size() == 116);
    CHECK(sys.read_letter(sys.require("6a")) == "6a");
    // rules list labels in table column order
    CHECK(sys.labels()[sys.rule(sys.require("0")).front()] == "9");
    CHECK(sys.labels()[sys.rule(sys.require("0")).back()] == "0");
}

TEST_CASE("polygonal systems") {
    const auto p5 = polygonal(5);
    CHECK(p5.count_matrix() == fibonacci().count_matrix());
    const auto p7 = polygonal(7);
    CHECK(labels_of(p7, p7.rule(p7.require("W"))) == "BWWWW");
    CHECK(labels_of(p7, p7.rule(p7.require("B"))) == "BWWW");
    CHECK(p7.ball_multiplicities() == std::vector<int>{7, 9});
    CHECK_THROWS_AS(polygonal(4), std::domain_error);
}

TEST_CASE("systems by name") {
    CHECK(system_by_name("fib") == fibonacci());
    CHECK(system_by_name("poly6") == polygonal(6));
    CHECK(system_by_name("cell120").size() == 11);
    CHECK_THROWS_AS(system_by_name("torus"), std::invalid_argument);
    CHECK_THROWS_AS(fibonacci().require("X"), std::invalid_argument);
}

TEST_CASE("invalid systems") {
    CHECK_THROWS_AS(SubstitutionSystem("x", {"A"}, {{"B"}}, {"a"}, {1}, false), std::invalid_argument);
    CHECK_THROWS_AS(SubstitutionSystem("x", {"A"}, {{}}, {"a"}, {1}, false), std::invalid_argument);
    CHECK_THROWS_AS(SubstitutionSystem("x", {"A", "A"}, {{"A"}, {"A"}}, {"a", "b"}, {1}, false),
                    std::invalid_argument);
}

TEST_CASE("join word") {
    CHECK(join_word({"b", "w"}) == "bw");
    CHECK(join_word({"6a", "9"}) == "6a 9");
    CHECK(join_word({}).empty());
}
