#include <doctest.h>

#include <random>

#include "ipda/store.hpp"

using namespace ipda;

namespace {

Store st(std::string_view text, int level = 2) { return parse_store(text, level); }

std::vector<Symbol> word(std::string_view text) { return parse_symbols(text); }

std::string names(const std::vector<Symbol>& w) {
    std::string out;
    for (Symbol s : w)
        out += s.name();
    return out;
}

} // namespace

TEST_CASE("symbol tokens") {
    CHECK(is_valid_symbol_token("X1"));
    CHECK(is_valid_symbol_token("6a"));
    CHECK_FALSE(is_valid_symbol_token(""));
    CHECK_FALSE(is_valid_symbol_token("e"));
    CHECK_FALSE(is_valid_symbol_token("A B"));
    CHECK_FALSE(is_valid_symbol_token("A[B"));
    CHECK_FALSE(is_valid_symbol_token("A.B"));
    CHECK_THROWS_AS(Symbol("a]"), std::invalid_argument);
    CHECK(Symbol("W") == Symbol("W"));
    CHECK(Symbol("W") != Symbol("B"));
    CHECK(Symbol("6b").name() == "6b");
}

TEST_CASE("topsym") {
    CHECK(topsym(Store(2)).empty());
    CHECK(names(topsym(st("Z[e]"))) == "Z");
    CHECK(names(topsym(st("Z[F.F]"))) == "ZF");
    CHECK(names(topsym(st("A[B[C[e].D[e]]].E[e]", 3))) == "ABC");
    CHECK(topsym(st("Z[F]")).size() <= 2);
}

TEST_CASE("pop") {
    CHECK(pop(2, st("Z[F.F]")) == st("Z[F]"));
    CHECK(pop(1, st("X2[F]")) == Store(2));
    CHECK_FALSE(pop(2, st("Z[e]")).has_value());
    CHECK_FALSE(pop(1, Store(2)).has_value());
    CHECK_FALSE(pop(3, st("Z[F]")).has_value());
    CHECK_FALSE(pop(0, st("Z[F]")).has_value());
    CHECK(pop(1, st("A.B.C", 1)) == st("B.C", 1));
}

TEST_CASE("push") {
    SUBCASE("level 2 reaches the inner store") {
        CHECK(push(2, word("F"), st("Z[e]")) == st("Z[F]"));
        // the inner top is replaced: FF on Z[F^k] adds one F
        CHECK(push(2, word("F F"), st("Z[F]")) == st("Z[F.F]"));
        CHECK(push(2, word("F F"), st("Z[F.F.F]")) == st("Z[F.F.F.F]"));
        CHECK(push(2, word("F"), st("Z[F.F]")) == st("Z[F.F]"));
    }
    SUBCASE("level 1 replaces the top and copies its flag") {
        CHECK(push(1, word("X1 X2"), st("X1[F]")) == st("X1[F].X2[F]"));
        CHECK(push(1, word("W W W W W"), st("Z[F.F]")) == st("W[F.F].W[F.F].W[F.F].W[F.F].W[F.F]"));
        CHECK(push(1, word("B W"), st("W[F].X[e]")) == st("B[F].W[F].X[e]"));
    }
    SUBCASE("empty word deletes the top") {
        CHECK(push(1, {}, st("A[F].B[e]")) == st("B[e]"));
        CHECK_FALSE(push(1, {}, Store(2)).has_value());
    }
    SUBCASE("empty store") {
        CHECK(push(1, word("A B"), Store(2)) == st("A[e].B[e]"));
        CHECK_FALSE(push(2, word("F"), Store(2)).has_value());
        CHECK_FALSE(push(2, word("F"), st("Z[e]").rest()).has_value());
    }
    SUBCASE("out of range levels") {
        CHECK_FALSE(push(3, word("F"), st("Z[e]")).has_value());
        CHECK_FALSE(push(0, word("F"), st("Z[e]")).has_value());
    }
}

TEST_CASE("total size") {
    CHECK(total_size(Store(2)) == 0);
    CHECK(total_size(st("Z[F.F]")) == 3);
    CHECK(total_size(st("W[F].W[F]")) == 4);
    CHECK(total_size(st("A[B[C[e]]].D[e]", 3)) == 4);
}

TEST_CASE("render and parse") {
    CHECK(render(Store(2)) == "e");
    CHECK(render(st("Z[F.F]")) == "Z[F.F]");
    CHECK(render(st("W[F].W[F]")) == "W[F].W[F]");
    CHECK(render(st("Z")) == "Z[e]");
    CHECK(render(st("A.B", 1)) == "A.B");
    CHECK(render(Store(0)) == "e");
    for (const char* text : {"e", "Z[e]", "X1[F.F].X2[e]", "6a[F].10[F.F.F]"})
        CHECK(render(st(text)) == text);
    CHECK(render(st("A[B[e].C[D.E]]", 3)) == "A[B[e].C[D.E]]");
    CHECK_THROWS_AS(st("Z[F"), std::invalid_argument);
    CHECK_THROWS_AS(st("Z[F]]"), std::invalid_argument);
    CHECK_THROWS_AS(st("Z[F[G]]"), std::invalid_argument);
    CHECK_THROWS_AS(st(""), std::invalid_argument);
}

TEST_CASE("equality and hashing") {
    const Store a = st("W[F.F].B[F]");
    const Store b = st("W[F.F].B[F]");
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    CHECK(std::hash<Store>{}(a) == std::hash<Store>{}(b));
    CHECK(a != st("W[F].B[F.F]"));
    CHECK(Store(1) != Store(2));
    // the same value reached by different operation sequences
    const Store c = *push(1, word("W B"), st("Z[F.F]"));
    const Store d = *pop(2, *push(1, word("W B"), st("Z[F.F]")));
    CHECK(c == st("W[F.F].B[F.F]"));
    CHECK(d == st("W[F].B[F.F]"));
}

TEST_CASE("operations leave their argument untouched") {
    const Store s = st("X1[F.F].X2[F]");
    const std::string before = render(s);
    (void)push(1, word("A B C"), s);
    (void)push(2, word("G"), s);
    (void)pop(1, s);
    (void)pop(2, s);
    CHECK(render(s) == before);
}

TEST_CASE("properties on random stores") {
    std::mt19937_64 rng(7);
    const std::vector<Symbol> outer = word("A B C");
    const std::vector<Symbol> inner = word("F G");
    auto random_store = [&] {
        Store s(2);
        const int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) {
            Store flag(1);
            const int h = static_cast<int>(rng() % 4);
            for (int k = 0; k < h; ++k)
                flag = flag.cons(inner[rng() % inner.size()], Store(0));
            s = s.cons(outer[rng() % outer.size()], flag);
        }
        return s;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const Store s = random_store();
        CHECK(parse_store(render(s), 2) == s);
        for (int j = 1; j <= 2; ++j) {
            if (auto p = pop(j, s))
                CHECK(p->level() == 2);
        }
        // replacing the inner top by (gamma, old top) and popping restores s
        if (!s.top_flag().empty()) {
            const Symbol t = s.top_flag().top_symbol();
            const std::vector<Symbol> w{inner[rng() % inner.size()], t};
            auto pushed = push(2, w, s);
            REQUIRE(pushed);
            CHECK(pushed->level() == 2);
            CHECK(pop(2, *pushed) == s);
        }
        // level-1 push of w, |w|-1 pops, then the old top symbol restores s
        const std::vector<Symbol> w = word("B C A");
        auto pushed = push(1, w, s);
        REQUIRE(pushed);
        CHECK(topsym(*pushed).front() == w.front());
        Store back = *pushed;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            back = *pop(1, back);
        const std::vector<Symbol> top{s.top_symbol()};
        CHECK(*push(1, top, back) == s);
    }
}
