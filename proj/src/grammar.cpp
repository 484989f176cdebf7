#include "ipda/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

namespace ipda {

SubstitutionSystem::SubstitutionSystem(std::string name, std::vector<std::string> labels,
                                       std::vector<std::vector<std::string>> rules,
                                       std::vector<std::string> read_letters, std::vector<int> ball_multiplicities,
                                       bool side_markers)
    : name_(std::move(name)), labels_(std::move(labels)), read_letters_(std::move(read_letters)),
      ball_multiplicities_(std::move(ball_multiplicities)), side_markers_(side_markers) {
    if (labels_.empty())
        throw std::invalid_argument("substitution system without labels");
    if (rules.size() != labels_.size() || read_letters_.size() != labels_.size())
        throw std::invalid_argument("one rule and one read letter per label required");
    if (std::set(labels_.begin(), labels_.end()).size() != labels_.size())
        throw std::invalid_argument("duplicate label");
    if (std::set(read_letters_.begin(), read_letters_.end()).size() != read_letters_.size())
        throw std::invalid_argument("duplicate read letter");
    for (const auto& r : rules) {
        if (r.empty())
            throw std::invalid_argument("empty rule");
        std::vector<std::size_t> idx;
        for (const auto& l : r)
            idx.push_back(require(l));
        rules_.push_back(std::move(idx));
    }
}

std::optional<std::size_t> SubstitutionSystem::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t SubstitutionSystem::require(std::string_view label) const {
    auto i = index_of(label);
    if (!i)
        throw std::invalid_argument("unknown label '" + std::string(label) + "' in system " + name_);
    return *i;
}

CountMatrix SubstitutionSystem::count_matrix() const {
    CountMatrix m(size(), std::vector<BigInt>(size(), 0));
    for (std::size_t x = 0; x < size(); ++x)
        for (std::size_t y : rules_[x])
            ++m[x][y];
    return m;
}

namespace {

std::vector<std::string> repeat(const std::string& s, int n) { return std::vector<std::string>(n, s); }

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts) {
    std::vector<std::string> out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace

SubstitutionSystem fibonacci() {
    SubstitutionSystem s = polygonal(5);
    return SubstitutionSystem("fib", s.labels(), {{"B", "W"}, {"B", "W", "W"}}, s.read_letters(), {5, 7}, true);
}

SubstitutionSystem polygonal(int p) {
    if (p < 5)
        throw std::domain_error("polygonal tilings need p >= 5");
    return SubstitutionSystem("poly" + std::to_string(p), {"B", "W"},
                              {concat({{"B"}, repeat("W", p - 4)}), concat({{"B"}, repeat("W", p - 3)})}, {"b", "w"},
                              {p, p + 2}, true);
}

SubstitutionSystem dodecahedral() {
    return SubstitutionSystem("dodeca", {"O", "H", "C", "T"},
                              {
                                  concat({repeat("O", 5), repeat("C", 3), {"T"}}),
                                  concat({repeat("O", 4), repeat("C", 3), {"T"}}),
                                  concat({repeat("O", 3), repeat("C", 3), {"T"}}),
                                  concat({repeat("O", 2), {"H"}, repeat("C", 2), {"T"}}),
                              },
                              {"o", "h", "c", "t"}, {8}, false);
}

SubstitutionSystem cell120() {
    static const std::vector<std::string> labels{"9", "8", "7", "6a", "6b", "5", "4", "3", "2", "1", "0"};
    static const int table[11][11] = {
        {6, 10, 21, 35, 3, 19, 14, 5, 1, 1, 1}, // 9
        {5, 10, 21, 35, 3, 19, 14, 5, 1, 1, 1}, // 8
        {4, 10, 21, 35, 3, 19, 14, 5, 1, 1, 1}, // 7
        {3, 11, 20, 35, 3, 19, 14, 5, 1, 1, 1}, // 6a
        {2, 12, 20, 35, 3, 19, 14, 5, 1, 1, 1}, // 6b
        {2, 11, 20, 35, 3, 19, 14, 5, 1, 1, 1}, // 5
        {2, 10, 20, 35, 3, 19, 14, 5, 1, 1, 1}, // 4
        {1, 11, 19, 35, 3, 19, 14, 5, 1, 1, 1}, // 3
        {1, 10, 19, 35, 3, 19, 14, 5, 1, 1, 1}, // 2
        {1, 10, 18, 35, 3, 19, 14, 5, 1, 1, 1}, // 1
        {1, 10, 18, 34, 3, 19, 14, 5, 1, 1, 1}, // 0
    };
    std::vector<std::vector<std::string>> rules;
    for (const auto& row : table) {
        std::vector<std::string> r;
        for (std::size_t col = 0; col < labels.size(); ++col)
            r.insert(r.end(), row[col], labels[col]);
        rules.push_back(std::move(r));
    }
    return SubstitutionSystem("cell120", labels, std::move(rules), labels, {16}, false);
}

SubstitutionSystem system_by_name(std::string_view name) {
    if (name == "fib")
        return fibonacci();
    if (name == "dodeca")
        return dodecahedral();
    if (name == "cell120")
        return cell120();
    if (name.starts_with("poly")) {
        std::string_view digits = name.substr(4);
        int p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
            return polygonal(p);
    }
    throw std::invalid_argument("unknown system '" + std::string(name) + "' (expected fib, poly<p>, dodeca, cell120)");
}

void level_word(const SubstitutionSystem& sys, std::size_t root, std::size_t level,
                const std::function<void(std::size_t)>& emit) {
    if (root >= sys.size())
        throw std::out_of_range("root label index");
    struct Frame {
        std::size_t label;
        std::size_t next; // next child to visit
    };
    std::vector<Frame> stack{{root, 0}};
    stack.reserve(level + 1);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (stack.size() == level + 1) {
            emit(f.label);
            stack.pop_back();
            continue;
        }
        const auto& r = sys.rule(f.label);
        if (f.next == r.size()) {
            stack.pop_back();
            continue;
        }
        std::size_t child = r[f.next++];
        stack.push_back({child, 0});
    }
}

std::vector<std::size_t> level_word(const SubstitutionSystem& sys, std::size_t root, std::size_t level) {
    std::vector<std::size_t> out;
    level_word(sys, root, level, [&](std::size_t l) { out.push_back(l); });
    return out;
}

std::vector<std::string> read_word(const SubstitutionSystem& sys, const std::vector<std::size_t>& labels) {
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (std::size_t l : labels)
        out.push_back(sys.read_letter(l));
    return out;
}

std::vector<BigInt> level_counts(const SubstitutionSystem& sys, std::size_t root, std::size_t level) {
    if (root >= sys.size())
        throw std::out_of_range("root label index");
    const CountMatrix m = sys.count_matrix();
    std::vector<BigInt> v(sys.size(), 0);
    v[root] = 1;
    for (std::size_t step = 0; step < level; ++step) {
        std::vector<BigInt> next(sys.size(), 0);
        for (std::size_t x = 0; x < sys.size(); ++x) {
            if (v[x] == 0)
                continue;
            for (std::size_t y = 0; y < sys.size(); ++y)
                if (m[x][y] != 0)
                    next[y] += v[x] * m[x][y];
        }
        v = std::move(next);
    }
    return v;
}

BigInt level_total(const SubstitutionSystem& sys, std::size_t root, std::size_t level) {
    BigInt total = 0;
    for (const auto& c : level_counts(sys, root, level))
        total += c;
    return total;
}

std::string join_word(const std::vector<std::string>& tokens) {
    const bool single = std::all_of(tokens.begin(), tokens.end(), [](const std::string& t) { return t.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!single && i > 0)
            out += ' ';
        out += tokens[i];
    }
    return out;
}

} // namespace ipda
