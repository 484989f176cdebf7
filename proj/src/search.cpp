#include "ipda/search.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace ipda {

SearchBounds SearchBounds::defaults_for(std::size_t input_length) {
    SearchBounds b;
    b.max_store_symbols = 4 * (static_cast<std::uint64_t>(input_length) + 4);
    b.max_configurations = 10'000'000;
    return b;
}

std::string to_string(Verdict::Outcome o) {
    switch (o) {
    case Verdict::Outcome::accepted:
        return "Accepted";
    case Verdict::Outcome::rejected:
        return "Rejected";
    case Verdict::Outcome::inconclusive:
        return "Inconclusive";
    }
    return "?";
}

Configuration initial_configuration(const Automaton& a) {
    return {a.initial_index(), 0, Store::singleton(a.levels(), a.start_symbol())};
}

namespace {

std::optional<Store> apply(const Action& act, const Store& s) {
    if (act.kind == Action::Kind::pop)
        return pop(act.level, s);
    return push(act.level, act.word, s);
}

// `letter` is the next unread letter, if any; `epsilon` selects ε-transitions.
template <class Fn>
void for_each_successor(const Automaton& a, const Configuration& c, std::optional<std::uint32_t> letter, bool epsilon,
                        Fn&& fn) {
    const std::vector<Symbol> top = topsym(c.store);
    for (std::uint32_t id : a.candidates(c.state, top)) {
        const auto& comp = a.compiled(id);
        std::size_t next = c.position;
        if (comp.input == Automaton::kEpsilon) {
            if (!epsilon)
                continue;
        } else {
            if (!letter || *letter != static_cast<std::uint32_t>(comp.input))
                continue;
            ++next;
        }
        auto store = apply(a.transitions()[id].action, c.store);
        if (!store)
            continue;
        fn(Configuration{comp.to, next, std::move(*store)}, id);
    }
}

std::optional<std::uint32_t> next_letter(const Configuration& c, std::span<const std::uint32_t> input) {
    if (c.position < input.size())
        return input[c.position];
    return std::nullopt;
}

// What a search is looking for: a configuration at `position` whose store
// equals `store`, in `state` when given.
struct Goal {
    std::size_t position;
    Store store;
    std::optional<std::uint32_t> state;

    bool matches(const Configuration& c) const {
        return c.position == position && (!state || *state == c.state) && c.store == store;
    }
};

struct Node {
    Configuration config;
    std::size_t depth;
    std::uint32_t via; // transition id that produced the node (unused at depth 0)
    std::uint64_t below; // uncapped sum of element_any below the top
};

std::uint64_t second_element_any(const Automaton& a, const ErasureBound& eb, const Store& s) {
    Store rest = s.rest();
    if (rest.empty())
        return 0;
    return eb.element_any(a.symbol_index(rest.top_symbol()), rest.top_flag().length());
}

// Incremental update of Node::below across one transition.
std::uint64_t below_after(const Automaton& a, const ErasureBound& eb, const Node& parent, std::uint32_t id) {
    const Action& act = a.transitions()[id].action;
    if (!eb.enabled() || act.level != 1)
        return parent.below;
    const Store& s = parent.config.store;
    if (act.kind == Action::Kind::pop || act.word.empty())
        return parent.below - second_element_any(a, eb, s);
    const std::size_t h = s.empty() ? 0 : s.top_flag().length();
    std::uint64_t sum = parent.below;
    for (std::size_t i = 1; i < act.word.size(); ++i)
        sum += eb.element_any(a.symbol_index(act.word[i]), h);
    return sum;
}

Verdict search(const Automaton& a, const Configuration& from, const Goal& goal, std::span<const std::uint32_t> input,
               const SearchBounds& bounds, const SearchOptions& options) {
    if (from.store.level() != a.levels())
        throw std::invalid_argument("configuration store level does not match the automaton");
    if (goal.position > input.size() || from.position > input.size())
        throw std::invalid_argument("configuration position beyond the input");

    Verdict v;
    v.start = from;
    if (goal.position < from.position)
        return v;

    // Pruning is only sound when the goal is the empty store.
    const bool prune = options.prune && goal.store.empty();
    ErasureBound local;
    const ErasureBound* eb = &local;
    if (prune) {
        const std::uint64_t needed = goal.position - from.position + 1;
        if (options.bound != nullptr && options.bound->enabled() && options.bound->cap() >= needed)
            eb = options.bound;
        else
            local = ErasureBound(a, needed);
    }

    std::unordered_set<Configuration, ConfigurationHash> visited;
    std::vector<Node> stack;
    std::vector<std::uint32_t> path;
    bool bound_hit = false;

    stack.push_back({from, 0, 0, prune ? eb->below_top(a, from.store) : 0});
    std::vector<std::pair<Configuration, std::uint32_t>> succ;

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();

        if (options.memoize) {
            if (visited.contains(node.config))
                continue;
            if (bounds.max_configurations && visited.size() >= *bounds.max_configurations) {
                v.stats.configuration_limit_hit = true;
                bound_hit = true;
                break;
            }
            visited.insert(node.config);
        } else if (bounds.max_configurations && v.stats.expanded >= *bounds.max_configurations) {
            v.stats.configuration_limit_hit = true;
            bound_hit = true;
            break;
        }

        if (options.record_trace) {
            path.resize(node.depth > 0 ? node.depth - 1 : 0);
            if (node.depth > 0)
                path.push_back(node.via);
        }
        if (goal.matches(node.config)) {
            v.outcome = Verdict::Outcome::accepted;
            if (options.record_trace)
                v.transitions = path;
            return v;
        }
        ++v.stats.expanded;

        succ.clear();
        for_each_successor(a, node.config, next_letter(node.config, input), true,
                           [&](Configuration c, std::uint32_t id) { succ.emplace_back(std::move(c), id); });
        // Reverse order so the smallest transition id is explored first.
        for (auto it = succ.rbegin(); it != succ.rend(); ++it) {
            Configuration& c = it->first;
            if (c.position > goal.position)
                continue;
            std::uint64_t below = 0;
            if (prune) {
                below = below_after(a, *eb, node, it->second);
                std::uint64_t need = below;
                if (!c.store.empty())
                    need += eb->element(c.state, a.symbol_index(c.store.top_symbol()), c.store.top_flag().length());
                if (need > goal.position - c.position) {
                    ++v.stats.pruned;
                    continue;
                }
            }
            if (bounds.max_store_symbols && c.store.total_size() > *bounds.max_store_symbols) {
                ++v.stats.cut_by_store_bound;
                bound_hit = true;
                continue;
            }
            if (options.memoize && visited.contains(c))
                continue;
            stack.push_back({std::move(c), node.depth + 1, it->second, below});
        }
    }
    v.outcome = bound_hit ? Verdict::Outcome::inconclusive : Verdict::Outcome::rejected;
    return v;
}

} // namespace

std::vector<Successor> step(const Automaton& a, const Configuration& c, std::span<const std::uint32_t> input) {
    std::vector<Successor> out;
    for_each_successor(a, c, next_letter(c, input), true,
                       [&](Configuration next, std::uint32_t id) { out.push_back({std::move(next), id}); });
    return out;
}

std::vector<Successor> step_with(const Automaton& a, const Configuration& c, std::optional<std::uint32_t> letter) {
    std::vector<Successor> out;
    for_each_successor(a, c, letter, !letter.has_value(),
                       [&](Configuration next, std::uint32_t id) { out.push_back({std::move(next), id}); });
    return out;
}

Verdict accepts(const Automaton& a, std::span<const std::uint32_t> input, const SearchBounds& bounds,
                const SearchOptions& options) {
    Goal goal{input.size(), Store(a.levels()), std::nullopt};
    return search(a, initial_configuration(a), goal, input, bounds, options);
}

Verdict accepts(const Automaton& a, std::span<const std::string> word, std::optional<SearchBounds> bounds,
                const SearchOptions& options) {
    const auto input = a.encode_input(word);
    return accepts(a, input, bounds ? *bounds : SearchBounds::defaults_for(input.size()), options);
}

Verdict reachable(const Automaton& a, const Configuration& from, const Configuration& goal,
                  std::span<const std::uint32_t> input, const SearchBounds& bounds, const SearchOptions& options) {
    if (goal.store.level() != a.levels())
        throw std::invalid_argument("goal store level does not match the automaton");
    return search(a, from, Goal{goal.position, goal.store, goal.state}, input, bounds, options);
}

std::vector<Configuration> replay(const Automaton& a, const Verdict& v, std::span<const std::uint32_t> input) {
    std::vector<Configuration> out{v.start};
    for (std::uint32_t id : v.transitions) {
        bool found = false;
        for (auto& s : step(a, out.back(), input)) {
            if (s.transition == id) {
                out.push_back(std::move(s.configuration));
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("trace step " + std::to_string(out.size()) + " does not replay");
    }
    return out;
}

std::string render(const Automaton& a, const Configuration& c) {
    return "(" + a.states()[c.state] + ", " + std::to_string(c.position) + " read, " + render(c.store) + ")";
}

std::vector<std::string> tokenize_input(const Automaton& a, std::string_view text) {
    std::vector<std::string> out;
    if (!a.multichar_input()) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                out.emplace_back(1, ch);
        return out;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        if (j > i)
            out.emplace_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace ipda
