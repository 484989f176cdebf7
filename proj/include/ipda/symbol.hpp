#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace ipda {

/// True when `token` may name a store symbol: nonempty, no whitespace, none
/// of the store rendering characters `[ ] .`, and not the empty-store mark `e`.
bool is_valid_symbol_token(std::string_view token);

/// Interned store-alphabet token. Copies are cheap; equal names share an id
/// for the lifetime of the process.
class Symbol {
public:
    Symbol() = default;
    /// Interns `name`; throws std::invalid_argument for an invalid token.
    explicit Symbol(std::string_view name);

    std::uint32_t id() const { return id_; }
    std::string_view name() const;
    bool valid() const { return id_ != kInvalid; }

    friend bool operator==(Symbol, Symbol) = default;
    friend auto operator<=>(Symbol, Symbol) = default;

    /// Upper bound on the ids handed out so far.
    static std::uint32_t id_limit();

private:
    static constexpr std::uint32_t kInvalid = 0xffffffffu;
    std::uint32_t id_ = kInvalid;
};

} // namespace ipda

template <>
struct std::hash<ipda::Symbol> {
    std::size_t operator()(ipda::Symbol s) const noexcept { return s.id(); }
};
