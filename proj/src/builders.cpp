#include "ipda/builders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ipda {

std::optional<Variant> parse_variant(std::string_view name) {
    if (name == "corrected")
        return Variant::corrected;
    if (name == "as-printed" || name == "as_printed")
        return Variant::as_printed;
    return std::nullopt;
}

std::string to_string(Variant v) { return v == Variant::corrected ? "corrected" : "as-printed"; }

namespace {

using Word = std::vector<std::string>;

struct Table {
    std::vector<Transition> transitions;

    static std::vector<Symbol> symbols(const Word& w) {
        std::vector<Symbol> out;
        for (const auto& s : w)
            out.emplace_back(s);
        return out;
    }

    void add(const std::string& from, std::optional<std::string> input, const Word& pattern, const std::string& to,
             Action action) {
        transitions.push_back({from, std::move(input), symbols(pattern), to, std::move(action)});
    }
    void push(const std::string& from, std::optional<std::string> input, const Word& pattern, const std::string& to,
              int level, const Word& w) {
        add(from, std::move(input), pattern, to, Action::push(level, symbols(w)));
    }
    void pop(const std::string& from, std::optional<std::string> input, const Word& pattern, const std::string& to,
             int level) {
        add(from, std::move(input), pattern, to, Action::pop(level));
    }
};

const std::optional<std::string> eps;

// Store names for the reserved symbols, moved out of the way of the labels.
struct Reserved {
    std::string Z, F, S, L, X;

    explicit Reserved(const std::vector<std::string>& labels) {
        std::set<std::string> taken(labels.begin(), labels.end());
        auto pick = [&](std::string name) {
            while (taken.contains(name))
                name = "_" + name;
            taken.insert(name);
            return name;
        };
        Z = pick("Z");
        F = pick("F");
        S = pick("S_r");
        L = pick("L");
        X = pick("X");
    }
};

Word rule_word(const SubstitutionSystem& sys, std::size_t label) {
    Word w;
    for (std::size_t c : sys.rule(label))
        w.push_back(sys.labels()[c]);
    return w;
}

std::vector<std::string> read_alphabet(const SubstitutionSystem& sys) { return sys.read_letters(); }

Automaton make(std::vector<std::string> states, std::vector<std::string> input, std::vector<std::string> store,
               const std::string& start, Table t) {
    std::vector<Symbol> gamma;
    for (const auto& s : store)
        gamma.emplace_back(s);
    return Automaton(2, std::move(states), "q0", std::move(input), std::move(gamma), Symbol(start),
                     std::move(t.transitions));
}

// Tree expansion: depth-first traversal that spends one F per level.
void add_tree(Table& t, const SubstitutionSystem& sys, const Reserved& r) {
    for (std::size_t a = 0; a < sys.size(); ++a) {
        const std::string& A = sys.labels()[a];
        const Word rules = rule_word(sys, a);
        t.pop("q0", eps, {A, r.F}, "q1", 2);
        t.pop("q0", sys.read_letter(a), {A}, "q0", 1);
        t.push("q1", eps, {A, r.F}, "q0", 1, rules);
        t.push("q1", eps, {A}, "q0", 1, rules);
    }
}

std::vector<std::string> store_alphabet(const SubstitutionSystem& sys, std::initializer_list<std::string> extra) {
    std::vector<std::string> out(extra);
    out.insert(out.end(), sys.labels().begin(), sys.labels().end());
    return out;
}

bool fibonacci_rules(const SubstitutionSystem& sys) {
    const auto f = fibonacci();
    if (sys.labels() != f.labels() || sys.read_letters() != f.read_letters())
        return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (sys.rule(i) != f.rule(i))
            return false;
    return true;
}

Automaton printed_sector(bool black) {
    // The published table; the black variant swaps the root symbol.
    const std::string root = black ? "B_r" : "W_r";
    Table t;
    t.push("q0", eps, {"Z"}, "q0", 2, {"F"});
    t.push("q0", eps, {"Z"}, "q0", 1, {root});
    t.push("q0", eps, {"Z", "F"}, "q0", 2, {"F", "F"});
    t.push("q0", eps, {"Z", "F"}, "q0", 1, {root});
    t.pop("q0", eps, {"W", "F"}, "q1", 2);
    t.pop("q0", eps, {"B", "F"}, "q1", 2);
    t.pop("q0", "r", {root, "F"}, "q1", 2);
    t.pop("q0", "r", {root}, "q1", 1);
    t.pop("q0", eps, {"W_b", "F"}, "q1", 2);
    t.pop("q0", "s", {"B_b", "F"}, "q1", 2);
    t.pop("q0", "b", {"B_b"}, "q0", 1);
    t.pop("q0", "b", {"B"}, "q0", 1);
    t.pop("q0", "w", {"W"}, "q0", 1);
    t.pop("q0", "w", {"W_b"}, "q0", 1);
    t.pop("q0", "s", {"X", "F"}, "q0", 1);
    if (black)
        t.push("q1", eps, {root, "F"}, "q0", 1, {"B_b", root});
    else
        t.push("q1", eps, {root, "F"}, "q0", 1, {"B_b", "W", "W_r"});
    t.push("q1", eps, {"W_b", "F"}, "q0", 1, {"B", "W", root, "X"});
    t.push("q1", eps, {"W", "F"}, "q0", 1, {"B", "W", "W"});
    t.push("q1", eps, {"B_b", "F"}, "q0", 1, {"B_b", "W"});
    t.push("q1", eps, {"B", "F"}, "q0", 1, {"B", "W"});
    return make({"q0", "q1"}, {"r", "s", "b", "w"}, {"Z", "B", "W", "B_b", "W_b", root, "X", "F"}, "Z",
                std::move(t));
}

} // namespace

Automaton fibonacci_automaton(Variant) {
    // Both variants guess the height with push_2(FF): on Z[F^k] it replaces
    // the top F by FF, so every loop adds exactly one F.
    Table t;
    t.push("q0", eps, {"Z"}, "q0", 2, {"F"});
    t.push("q0", eps, {"Z"}, "q0", 1, {"X2"});
    t.push("q0", eps, {"Z", "F"}, "q0", 2, {"F", "F"});
    t.push("q0", eps, {"Z", "F"}, "q0", 1, {"X2"});
    t.pop("q0", eps, {"X1", "F"}, "q1", 2);
    t.pop("q0", eps, {"X2", "F"}, "q2", 2);
    t.pop("q0", "a", {"X1"}, "q0", 1);
    t.pop("q0", "a", {"X2"}, "q0", 1);
    t.push("q1", eps, {"X1", "F"}, "q0", 1, {"X1", "X2"});
    t.push("q2", eps, {"X2", "F"}, "q0", 1, {"X1"});
    t.push("q1", eps, {"X1"}, "q0", 1, {"X1", "X2"});
    t.push("q2", eps, {"X2"}, "q0", 1, {"X1"});
    return make({"q0", "q1", "q2"}, {"a"}, {"Z", "X1", "X2", "F"}, "Z", std::move(t));
}

Automaton ball_automaton(const SubstitutionSystem& sys, std::size_t root, int sigma, Variant v) {
    if (root >= sys.size())
        throw std::out_of_range("root label index");
    if (sigma < 1)
        throw std::domain_error("ball multiplicity must be at least 1");
    if (v == Variant::as_printed && (!fibonacci_rules(sys) || sys.labels()[root] != "W"))
        throw std::invalid_argument("the printed ball table exists only for the Fibonacci tree rooted at W");

    const Reserved r(sys.labels());
    const Word start(static_cast<std::size_t>(sigma), sys.labels()[root]);
    Table t;
    t.push("q0", eps, {r.Z}, "q0", 2, {r.F});
    t.push("q0", eps, {r.Z}, "q0", 1, start);
    t.push("q0", eps, {r.Z, r.F}, "q0", 2, {r.F, r.F});
    t.push("q0", eps, {r.Z, r.F}, "q0", 1, start);
    add_tree(t, sys, r);
    return make({"q0", "q1"}, read_alphabet(sys), store_alphabet(sys, {r.Z, r.F}), r.Z, std::move(t));
}

Automaton sector_automaton(const SubstitutionSystem& sys, std::size_t root, Variant v) {
    if (root >= sys.size())
        throw std::out_of_range("root label index");
    if (v == Variant::as_printed) {
        if (!fibonacci_rules(sys))
            throw std::invalid_argument("the printed sector table exists only for the Fibonacci tree");
        return printed_sector(sys.labels()[root] == "B");
    }

    const Reserved r(sys.labels());
    const std::string& top = sys.labels()[root];
    Table t;
    if (!sys.side_markers()) {
        // Bare level words from level 1 on: the root may only be placed
        // once at least one F has been guessed.
        t.push("q0", eps, {r.Z}, "q0", 2, {r.F});
        t.push("q0", eps, {r.Z, r.F}, "q0", 2, {r.F, r.F});
        t.push("q0", eps, {r.Z, r.F}, "q0", 1, {top});
        add_tree(t, sys, r);
        return make({"q0", "q1"}, read_alphabet(sys), store_alphabet(sys, {r.Z, r.F}), r.Z, std::move(t));
    }

    for (const auto& letter : sys.read_letters())
        if (letter == kSectorRoot || letter == kSectorSide)
            throw std::invalid_argument("read letter '" + letter + "' collides with a sector marker");

    // S_r[F^(l+1)] reads r, then L root X share F^l: L and X each read s^l
    // around the level word of the root.
    t.push("q0", eps, {r.Z}, "q0", 2, {r.F});
    t.push("q0", eps, {r.Z}, "q0", 1, {r.S});
    t.push("q0", eps, {r.Z, r.F}, "q0", 2, {r.F, r.F});
    t.push("q0", eps, {r.Z, r.F}, "q0", 1, {r.S});
    t.pop("q0", kSectorRoot, {r.S, r.F}, "q1", 2);
    t.push("q1", eps, {r.S, r.F}, "q0", 1, {r.L, top, r.X});
    for (const auto& side : {r.L, r.X}) {
        t.pop("q0", kSectorSide, {side, r.F}, "q0", 2);
        t.pop("q0", eps, {side}, "q0", 1);
    }
    add_tree(t, sys, r);

    std::vector<std::string> input{kSectorRoot, kSectorSide};
    for (const auto& l : sys.read_letters())
        input.push_back(l);
    return make({"q0", "q1"}, std::move(input), store_alphabet(sys, {r.Z, r.F, r.S, r.L, r.X}), r.Z, std::move(t));
}

Automaton automaton_for(const ContourSpec& spec, Variant v) {
    switch (spec.kind) {
    case ContourKind::ball:
        return ball_automaton(spec.system, spec.root, spec.sigma, v);
    case ContourKind::level:
        return ball_automaton(spec.system, spec.root, 1, v);
    case ContourKind::sector:
        return sector_automaton(spec.system, spec.root, v);
    }
    throw std::logic_error("unknown contour kind");
}

} // namespace ipda
