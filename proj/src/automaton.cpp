#include "ipda/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ipda {

AutomatonError::AutomatonError(AutomatonErrorKind kind, int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      kind_(kind), line_(line) {}

namespace {

bool is_plain_token(std::string_view t) {
    return !t.empty() && std::none_of(t.begin(), t.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '[' || c == ']';
    });
}

struct Declarations {
    int levels = 0;
    std::set<std::string, std::less<>> states;
    std::set<std::string, std::less<>> inputs;
    std::set<Symbol> store;
};

void check_transition(const Declarations& d, const Transition& t, int line) {
    auto undeclared = [&](const std::string& what) {
        throw AutomatonError(AutomatonErrorKind::undeclared_name, line, what);
    };
    if (!d.states.contains(t.from))
        undeclared("undeclared state '" + t.from + "'");
    if (!d.states.contains(t.to))
        undeclared("undeclared state '" + t.to + "'");
    if (t.input && !d.inputs.contains(*t.input))
        undeclared("undeclared input letter '" + *t.input + "'");
    for (Symbol s : t.pattern)
        if (!d.store.contains(s))
            undeclared("undeclared store symbol '" + std::string(s.name()) + "' in pattern");
    if (static_cast<int>(t.pattern.size()) > d.levels)
        throw AutomatonError(AutomatonErrorKind::level_violation, line,
                             "pattern longer than the iteration level");
    if (t.action.level < 1 || t.action.level > d.levels)
        throw AutomatonError(AutomatonErrorKind::level_violation, line,
                             "operation level " + std::to_string(t.action.level) +
                                 " outside 1.." + std::to_string(d.levels));
    if (t.action.kind == Action::Kind::pop && !t.action.word.empty())
        throw AutomatonError(AutomatonErrorKind::syntax, line, "pop takes no word");
    for (Symbol s : t.action.word)
        if (!d.store.contains(s))
            undeclared("undeclared store symbol '" + std::string(s.name()) + "' in push word");
}

} // namespace

Automaton::Automaton(int levels, std::vector<std::string> states, std::string initial_state,
                     std::vector<std::string> input_alphabet, std::vector<Symbol> store_alphabet,
                     Symbol start_symbol, std::vector<Transition> transitions)
    : levels_(levels), states_(std::move(states)), initial_(std::move(initial_state)),
      input_alphabet_(std::move(input_alphabet)), store_alphabet_(std::move(store_alphabet)),
      start_symbol_(start_symbol) {
    if (levels_ < 1)
        throw AutomatonError(AutomatonErrorKind::level_violation, 0, "iteration level must be at least 1");

    Declarations d;
    d.levels = levels_;
    for (const auto& q : states_) {
        if (!is_plain_token(q))
            throw AutomatonError(AutomatonErrorKind::syntax, 0, "invalid state name '" + q + "'");
        if (!d.states.insert(q).second)
            throw AutomatonError(AutomatonErrorKind::syntax, 0, "duplicate state '" + q + "'");
    }
    for (const auto& a : input_alphabet_) {
        if (!is_plain_token(a) || a == "eps")
            throw AutomatonError(AutomatonErrorKind::syntax, 0, "invalid input letter '" + a + "'");
        if (!d.inputs.insert(a).second)
            throw AutomatonError(AutomatonErrorKind::syntax, 0, "duplicate input letter '" + a + "'");
    }
    for (Symbol s : store_alphabet_)
        if (!d.store.insert(s).second)
            throw AutomatonError(AutomatonErrorKind::syntax, 0,
                                 "duplicate store symbol '" + std::string(s.name()) + "'");
    if (!d.states.contains(initial_))
        throw AutomatonError(AutomatonErrorKind::undeclared_name, 0, "undeclared initial state '" + initial_ + "'");
    if (!d.store.contains(start_symbol_))
        throw AutomatonError(AutomatonErrorKind::undeclared_name, 0, "start symbol not in the store alphabet");

    for (std::uint32_t i = 0; i < states_.size(); ++i)
        state_ids_.emplace(states_[i], i);
    for (std::uint32_t i = 0; i < input_alphabet_.size(); ++i)
        input_ids_.emplace(input_alphabet_[i], i);
    std::uint32_t max_id = 0;
    for (Symbol s : store_alphabet_)
        max_id = std::max(max_id, s.id());
    symbol_index_.assign(max_id + 1, -1);
    for (std::size_t i = 0; i < store_alphabet_.size(); ++i)
        symbol_index_[store_alphabet_[i].id()] = static_cast<int>(i);
    initial_index_ = state_ids_.at(initial_);

    for (auto& t : transitions) {
        check_transition(d, t, 0);
        if (std::find(transitions_.begin(), transitions_.end(), t) != transitions_.end())
            continue;
        auto id = static_cast<std::uint32_t>(transitions_.size());
        Compiled c{state_ids_.at(t.from), kEpsilon, state_ids_.at(t.to)};
        if (t.input)
            c.input = static_cast<std::int32_t>(input_ids_.at(*t.input));
        compiled_.push_back(c);
        by_key_[lookup_key(c.from, t.pattern)].push_back(id);
        transitions_.push_back(std::move(t));
    }
}

std::string Automaton::lookup_key(std::uint32_t state, std::span<const Symbol> pattern) const {
    std::string key;
    key.reserve(4 * (1 + pattern.size()));
    auto put = [&key](std::uint32_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
    put(state);
    for (Symbol s : pattern)
        put(static_cast<std::uint32_t>(symbol_index(s)));
    return key;
}

std::span<const std::uint32_t> Automaton::candidates(std::uint32_t state,
                                                     std::span<const Symbol> topsym) const {
    for (Symbol s : topsym)
        if (symbol_index(s) < 0)
            return {};
    auto it = by_key_.find(lookup_key(state, topsym));
    if (it == by_key_.end())
        return {};
    return it->second;
}

std::optional<std::uint32_t> Automaton::state_index(std::string_view name) const {
    auto it = state_ids_.find(std::string(name));
    if (it == state_ids_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> Automaton::input_index(std::string_view letter) const {
    auto it = input_ids_.find(std::string(letter));
    if (it == input_ids_.end())
        return std::nullopt;
    return it->second;
}

bool Automaton::multichar_store() const {
    return std::any_of(store_alphabet_.begin(), store_alphabet_.end(),
                       [](Symbol s) { return s.name().size() > 1; });
}

bool Automaton::multichar_input() const {
    return std::any_of(input_alphabet_.begin(), input_alphabet_.end(),
                       [](const std::string& a) { return a.size() > 1; });
}

std::vector<std::uint32_t> Automaton::encode_input(std::span<const std::string> word) const {
    std::vector<std::uint32_t> out;
    out.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto idx = input_index(word[i]);
        if (!idx)
            throw std::invalid_argument("undeclared input letter '" + word[i] + "' at position " +
                                        std::to_string(i));
        out.push_back(*idx);
    }
    return out;
}

bool operator==(const Automaton& a, const Automaton& b) {
    return a.levels_ == b.levels_ && a.states_ == b.states_ && a.initial_ == b.initial_ &&
           a.input_alphabet_ == b.input_alphabet_ && a.store_alphabet_ == b.store_alphabet_ &&
           a.start_symbol_ == b.start_symbol_ && a.transitions_ == b.transitions_;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

struct RawTransition {
    int line;
    std::string text;
};

class FormatReader {
public:
    Automaton read(std::string_view text) {
        std::size_t start = 0;
        int line_no = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            ++line_no;
            header_line(text.substr(start, end - start), line_no);
            start = end + 1;
        }
        require(levels_, "levels");
        require(states_, "states");
        require(initial_, "initial");
        require(input_, "input");
        require(store_, "store");
        require(start_symbol_, "start_symbol");

        Declarations d;
        d.levels = *levels_;
        d.states.insert(states_->begin(), states_->end());
        d.inputs.insert(input_->begin(), input_->end());
        for (const auto& s : *store_) {
            Symbol sym = symbol(s, store_line_);
            d.store.insert(sym);
            alphabet_.push_back(sym);
            by_name_.emplace(s, sym);
        }
        multichar_ = std::any_of(store_->begin(), store_->end(), [](const std::string& s) { return s.size() > 1; });

        std::vector<Transition> transitions;
        for (const auto& raw : raw_) {
            Transition t = transition(raw.text, raw.line);
            check_transition(d, t, raw.line);
            transitions.push_back(std::move(t));
        }
        Symbol start_sym = symbol(*start_symbol_, start_line_);
        if (!d.store.contains(start_sym))
            throw AutomatonError(AutomatonErrorKind::undeclared_name, start_line_,
                                 "start symbol '" + *start_symbol_ + "' not in the store alphabet");
        if (!d.states.contains(*initial_))
            throw AutomatonError(AutomatonErrorKind::undeclared_name, initial_line_,
                                 "undeclared initial state '" + *initial_ + "'");
        return Automaton(*levels_, *states_, *initial_, *input_, alphabet_, start_sym, std::move(transitions));
    }

private:
    template <class T>
    void require(const std::optional<T>& v, const char* name) {
        if (!v)
            throw AutomatonError(AutomatonErrorKind::syntax, 0, std::string("missing '") + name + ":' header");
    }

    [[noreturn]] static void syntax(int line, const std::string& what) {
        throw AutomatonError(AutomatonErrorKind::syntax, line, what);
    }

    static Symbol symbol(const std::string& token, int line) {
        if (!is_valid_symbol_token(token))
            syntax(line, "invalid store symbol '" + token + "'");
        return Symbol(token);
    }

    void header_line(std::string_view line, int no) {
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            return;
        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            syntax(no, "expected 'key: value'");
        std::string key(trim(line.substr(0, colon)));
        std::string_view value = trim(line.substr(colon + 1));
        auto once = [&](bool present) {
            if (present)
                syntax(no, "duplicate '" + key + ":' header");
        };
        if (key == "t") {
            raw_.push_back({no, std::string(value)});
        } else if (key == "levels") {
            once(levels_.has_value());
            try {
                std::size_t used = 0;
                int v = std::stoi(std::string(value), &used);
                if (used != value.size())
                    throw std::invalid_argument("trailing");
                levels_ = v;
            } catch (const std::exception&) {
                syntax(no, "levels must be an integer");
            }
            if (*levels_ < 1)
                throw AutomatonError(AutomatonErrorKind::level_violation, no, "levels must be at least 1");
        } else if (key == "states") {
            once(states_.has_value());
            states_ = split_ws(value);
        } else if (key == "initial") {
            once(initial_.has_value());
            auto v = split_ws(value);
            if (v.size() != 1)
                syntax(no, "expected one initial state");
            initial_ = v[0];
            initial_line_ = no;
        } else if (key == "input") {
            once(input_.has_value());
            input_ = split_ws(value);
        } else if (key == "store") {
            once(store_.has_value());
            store_ = split_ws(value);
            store_line_ = no;
        } else if (key == "start_symbol") {
            once(start_symbol_.has_value());
            auto v = split_ws(value);
            if (v.size() != 1)
                syntax(no, "expected one start symbol");
            start_symbol_ = v[0];
            start_line_ = no;
        } else {
            syntax(no, "unknown header '" + key + "'");
        }
    }

    std::vector<Symbol> pattern(std::string_view text, int line) const {
        text = trim(text);
        std::vector<Symbol> out;
        if (!text.empty() && text.front() == '[') {
            if (text.back() != ']')
                syntax(line, "unterminated pattern '" + std::string(text) + "'");
            for (const auto& tok : split_ws(text.substr(1, text.size() - 2)))
                out.push_back(known(tok, line));
            return out;
        }
        if (auto it = by_name_.find(std::string(text)); it != by_name_.end() && (multichar_ || text.size() == 1))
            return {it->second};
        if (multichar_)
            syntax(line, "pattern '" + std::string(text) + "' must be bracketed, e.g. [X1 F]");
        for (char c : text)
            out.push_back(known(std::string(1, c), line));
        return out;
    }

    Symbol known(const std::string& tok, int line) const {
        auto it = by_name_.find(tok);
        if (it == by_name_.end())
            throw AutomatonError(AutomatonErrorKind::undeclared_name, line, "undeclared store symbol '" + tok + "'");
        return it->second;
    }

    std::vector<Symbol> word(const std::vector<std::string>& toks, std::size_t from, int line) const {
        std::vector<Symbol> out;
        for (std::size_t i = from; i < toks.size(); ++i) {
            const auto& tok = toks[i];
            if (tok == "eps" && toks.size() == from + 1)
                return {};
            if (by_name_.contains(tok)) {
                out.push_back(by_name_.at(tok));
            } else if (!multichar_ && tok.size() > 1) {
                for (char c : tok)
                    out.push_back(known(std::string(1, c), line));
            } else {
                out.push_back(known(tok, line));
            }
        }
        return out;
    }

    Transition transition(const std::string& text, int line) const {
        auto arrow = text.find("->");
        if (arrow == std::string::npos)
            syntax(line, "transition needs '->'");
        std::string_view lhs = trim(std::string_view(text).substr(0, arrow));
        auto rhs = split_ws(std::string_view(text).substr(arrow + 2));

        Transition t;
        auto first_space = [](std::string_view s) {
            auto p = std::find_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
            return static_cast<std::size_t>(p - s.begin());
        };
        std::size_t p = first_space(lhs);
        if (p == lhs.size())
            syntax(line, "expected 'state input pattern' before '->'");
        t.from = std::string(lhs.substr(0, p));
        lhs = trim(lhs.substr(p));
        p = first_space(lhs);
        if (p == lhs.size())
            syntax(line, "expected 'state input pattern' before '->'");
        std::string input(lhs.substr(0, p));
        if (input != "eps")
            t.input = input;
        t.pattern = pattern(lhs.substr(p), line);

        if (rhs.size() < 3)
            syntax(line, "expected 'state pop|push level [word]' after '->'");
        t.to = rhs[0];
        int level = 0;
        try {
            std::size_t used = 0;
            level = std::stoi(rhs[2], &used);
            if (used != rhs[2].size())
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            syntax(line, "operation level must be an integer");
        }
        if (rhs[1] == "pop") {
            if (rhs.size() != 3)
                syntax(line, "pop takes no word");
            t.action = Action::pop(level);
        } else if (rhs[1] == "push") {
            t.action = Action::push(level, word(rhs, 3, line));
        } else {
            syntax(line, "unknown operation '" + rhs[1] + "'");
        }
        return t;
    }

    std::optional<int> levels_;
    std::optional<std::vector<std::string>> states_;
    std::optional<std::string> initial_;
    std::optional<std::vector<std::string>> input_;
    std::optional<std::vector<std::string>> store_;
    std::optional<std::string> start_symbol_;
    int initial_line_ = 0, store_line_ = 0, start_line_ = 0;
    std::vector<RawTransition> raw_;

    bool multichar_ = false;
    std::vector<Symbol> alphabet_;
    std::unordered_map<std::string, Symbol> by_name_;
};

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
        if (!out.empty())
            out += ' ';
        out += s;
    }
    return out;
}

std::string pattern_text(const Automaton& a, const std::vector<Symbol>& pattern) {
    std::string out;
    if (pattern.empty() || a.multichar_store()) {
        out += '[';
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            if (i)
                out += ' ';
            out += pattern[i].name();
        }
        out += ']';
        return out;
    }
    for (Symbol s : pattern)
        out += s.name();
    return out;
}

} // namespace

Automaton parse_automaton(std::string_view text) { return FormatReader().read(text); }

std::string describe(const Automaton& a, std::size_t id) {
    const Transition& t = a.transitions().at(id);
    std::string out = t.from + ' ' + (t.input ? *t.input : "eps") + ' ' + pattern_text(a, t.pattern) + " -> " + t.to;
    out += t.action.kind == Action::Kind::pop ? " pop " : " push ";
    out += std::to_string(t.action.level);
    if (t.action.kind == Action::Kind::push) {
        if (t.action.word.empty())
            out += " eps";
        for (Symbol s : t.action.word) {
            out += ' ';
            out += s.name();
        }
    }
    return out;
}

std::string render_automaton(const Automaton& a) {
    std::string out;
    out += "levels: " + std::to_string(a.levels()) + '\n';
    out += "states: " + join(a.states()) + '\n';
    out += "initial: " + a.initial_state() + '\n';
    out += "input: " + join(a.input_alphabet()) + '\n';
    std::vector<std::string> store;
    for (Symbol s : a.store_alphabet())
        store.emplace_back(s.name());
    out += "store: " + join(store) + '\n';
    out += "start_symbol: " + std::string(a.start_symbol().name()) + '\n';
    for (std::size_t i = 0; i < a.transitions().size(); ++i)
        out += "t: " + describe(a, i) + '\n';
    return out;
}

} // namespace ipda
