#pragma once

// Label substitution systems spanning the tilings, with streaming level-word
// generation and exact level counts.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ipda {

using BigInt = boost::multiprecision::cpp_int;
using CountMatrix = std::vector<std::vector<BigInt>>;

class SubstitutionSystem {
public:
    /// Throws std::invalid_argument unless every rule letter is a declared
    /// label, every rule is nonempty and labels and read letters are unique.
    SubstitutionSystem(std::string name, std::vector<std::string> labels,
                       std::vector<std::vector<std::string>> rules, std::vector<std::string> read_letters,
                       std::vector<int> ball_multiplicities, bool side_markers);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    /// Rule of label i as label indices, in order.
    const std::vector<std::size_t>& rule(std::size_t i) const { return rules_[i]; }
    const std::string& read_letter(std::size_t i) const { return read_letters_[i]; }
    const std::vector<std::string>& read_letters() const { return read_letters_; }
    /// Sector multiplicities for which balls are defined.
    const std::vector<int>& ball_multiplicities() const { return ball_multiplicities_; }
    /// Whether sector contours carry the r/s side markers.
    bool side_markers() const { return side_markers_; }

    std::optional<std::size_t> index_of(std::string_view label) const;
    /// index_of or std::invalid_argument.
    std::size_t require(std::string_view label) const;

    /// M[x][y] = occurrences of label y in the rule of x.
    CountMatrix count_matrix() const;

    friend bool operator==(const SubstitutionSystem&, const SubstitutionSystem&) = default;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> rules_;
    std::vector<std::string> read_letters_;
    std::vector<int> ball_multiplicities_;
    bool side_markers_;
};

SubstitutionSystem fibonacci();
/// W -> B W^{p-3}, B -> B W^{p-4}. Throws std::domain_error for p < 5.
SubstitutionSystem polygonal(int p);
SubstitutionSystem dodecahedral();
SubstitutionSystem cell120();

/// `fib`, `poly<p>`, `dodeca` or `cell120`. Throws std::invalid_argument.
SubstitutionSystem system_by_name(std::string_view name);

/// Emits the labels of level `level` below `root`, left to right, by
/// depth-first expansion. Memory is O(level * longest rule).
void level_word(const SubstitutionSystem& sys, std::size_t root, std::size_t level,
                const std::function<void(std::size_t)>& emit);
std::vector<std::size_t> level_word(const SubstitutionSystem& sys, std::size_t root, std::size_t level);

std::vector<std::string> read_word(const SubstitutionSystem& sys, const std::vector<std::size_t>& labels);

/// Label counts after `level` substitutions from `root`, indexed like labels().
std::vector<BigInt> level_counts(const SubstitutionSystem& sys, std::size_t root, std::size_t level);
BigInt level_total(const SubstitutionSystem& sys, std::size_t root, std::size_t level);

/// Contiguous characters when every token is one character, space-separated otherwise.
std::string join_word(const std::vector<std::string>& tokens);

} // namespace ipda
