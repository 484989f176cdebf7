#include "ipda/symbol.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace ipda {

namespace {

struct Interner {
    std::shared_mutex mutex;
    std::deque<std::string> names;
    std::unordered_map<std::string_view, std::uint32_t> ids;
};

Interner& interner() {
    static Interner instance;
    return instance;
}

} // namespace

bool is_valid_symbol_token(std::string_view token) {
    if (token.empty() || token == "e")
        return false;
    for (char c : token) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']' || c == '.')
            return false;
    }
    return true;
}

Symbol::Symbol(std::string_view name) {
    if (!is_valid_symbol_token(name))
        throw std::invalid_argument("invalid store symbol '" + std::string(name) + "'");
    auto& table = interner();
    {
        std::shared_lock lock(table.mutex);
        if (auto it = table.ids.find(name); it != table.ids.end()) {
            id_ = it->second;
            return;
        }
    }
    std::unique_lock lock(table.mutex);
    if (auto it = table.ids.find(name); it != table.ids.end()) {
        id_ = it->second;
        return;
    }
    id_ = static_cast<std::uint32_t>(table.names.size());
    table.names.emplace_back(name);
    table.ids.emplace(table.names.back(), id_);
}

std::string_view Symbol::name() const {
    if (!valid())
        return "<invalid>";
    auto& table = interner();
    std::shared_lock lock(table.mutex);
    return table.names[id_];
}

std::uint32_t Symbol::id_limit() {
    auto& table = interner();
    std::shared_lock lock(table.mutex);
    return static_cast<std::uint32_t>(table.names.size());
}

} // namespace ipda
