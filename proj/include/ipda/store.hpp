#pragma once

// Iterated pushdown stores.
//
// A level-0 store is the empty store. A level-(k+1) store is a sequence of
// elements, each a store symbol carrying a level-k store (its "flag"). Stores
// are immutable persistent values: operations return new stores that share
// structure with their inputs.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipda/symbol.hpp"

namespace ipda {

class Store {
public:
    /// The empty store of the given level.
    explicit Store(int level = 0);
    Store(const Store&) = default;
    Store(Store&&) noexcept = default;
    Store& operator=(const Store&) = default;
    Store& operator=(Store&&) noexcept = default;
    ~Store();

    /// `top[e]` at `level` with an empty flag of level `level - 1`.
    static Store singleton(int level, Symbol top);

    int level() const { return level_; }
    bool empty() const { return head_ == nullptr; }
    /// Number of elements in the outermost sequence.
    std::size_t length() const;
    /// Number of symbols at all levels.
    std::uint64_t total_size() const;
    std::size_t hash() const;

    /// Precondition for the accessors below: !empty().
    Symbol top_symbol() const;
    const Store& top_flag() const;
    Store rest() const;

    /// `symbol[flag].*this`; flag must have level `level() - 1`.
    Store cons(Symbol symbol, Store flag) const;

    friend bool operator==(const Store& a, const Store& b);

    /// Visits the outermost elements from the top down.
    template <class Fn>
    void for_each(Fn&& fn) const;

private:
    struct Node;

    Store(int level, std::shared_ptr<const Node> head) : head_(std::move(head)), level_(level) {}

    std::shared_ptr<const Node> head_;
    int level_ = 0;
};

struct Store::Node {
    Symbol symbol;
    Store flag;
    // mutable only so ~Store can unlink long chains without recursion
    mutable std::shared_ptr<const Node> next;
    std::size_t hash = 0;
    std::uint64_t total = 0;
    std::uint32_t length = 0;
};

template <class Fn>
void Store::for_each(Fn&& fn) const {
    for (const Node* n = head_.get(); n != nullptr; n = n->next.get())
        fn(n->symbol, n->flag);
}

/// Top symbols read down the chain of top elements; empty for an empty store.
std::vector<Symbol> topsym(const Store& s);

/// pop_j. Undefined (nullopt) when j is out of range or the chain meets an
/// empty store.
std::optional<Store> pop(int j, const Store& s);

/// push_j(w). At j = 1 the top element is replaced by one element per letter
/// of w (first letter on top), each carrying the old top's flag; an empty w
/// deletes the top. On an empty store push_1(w) builds w with empty flags.
/// For j > 1 the operation recurses into the top element's flag.
std::optional<Store> push(int j, std::span<const Symbol> w, const Store& s);

std::uint64_t total_size(const Store& s);

/// `e` for an empty store, elements as `SYM[flag]` joined by `.`; elements of
/// a level-1 store print as bare `SYM`.
std::string render(const Store& s);

/// Inverse of render() for a store of the given level. At levels above 1 a
/// bare `SYM` is accepted as `SYM[e]`. Throws std::invalid_argument.
Store parse_store(std::string_view text, int level);

/// Parses a whitespace- or dot-separated word of symbols.
std::vector<Symbol> parse_symbols(std::string_view text);

} // namespace ipda

template <>
struct std::hash<ipda::Store> {
    std::size_t operator()(const ipda::Store& s) const noexcept { return s.hash(); }
};
