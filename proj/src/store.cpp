#include "ipda/store.hpp"

#include <cctype>
#include <stdexcept>

namespace ipda {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    // boost::hash_combine, widened
    return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 12) + (seed >> 4));
}

} // namespace

Store::Store(int level) : level_(level) {
    if (level < 0)
        throw std::invalid_argument("store level must be nonnegative");
}

Store::~Store() {
    // Release a uniquely owned chain iteratively; recursive destruction of a
    // long sequence would exhaust the call stack.
    std::shared_ptr<const Node> cur = std::move(head_);
    while (cur && cur.use_count() == 1) {
        std::shared_ptr<const Node> next = std::move(cur->next);
        cur = std::move(next);
    }
}

Store Store::singleton(int level, Symbol top) {
    if (level < 1)
        throw std::invalid_argument("a level-0 store holds no symbols");
    return Store(level).cons(top, Store(level - 1));
}

std::size_t Store::length() const { return head_ ? head_->length : 0; }

std::uint64_t Store::total_size() const { return head_ ? head_->total : 0; }

std::size_t Store::hash() const {
    return head_ ? head_->hash : mix(0x51ed27u, static_cast<std::size_t>(level_));
}

Symbol Store::top_symbol() const { return head_->symbol; }

const Store& Store::top_flag() const { return head_->flag; }

Store Store::rest() const { return Store(level_, head_->next); }

Store Store::cons(Symbol symbol, Store flag) const {
    if (level_ < 1 || flag.level() != level_ - 1)
        throw std::invalid_argument("flag level does not match store level");
    auto node = std::make_shared<Node>();
    node->symbol = symbol;
    node->hash = mix(mix(hash(), symbol.id()), flag.hash());
    node->total = 1 + flag.total_size() + total_size();
    node->length = static_cast<std::uint32_t>(length() + 1);
    node->flag = std::move(flag);
    node->next = head_;
    return Store(level_, std::move(node));
}

bool operator==(const Store& a, const Store& b) {
    if (a.level_ != b.level_)
        return false;
    const Store::Node* x = a.head_.get();
    const Store::Node* y = b.head_.get();
    while (x != y) {
        if (x == nullptr || y == nullptr)
            return false;
        if (x->hash != y->hash || x->length != y->length || x->total != y->total ||
            x->symbol != y->symbol || !(x->flag == y->flag))
            return false;
        x = x->next.get();
        y = y->next.get();
    }
    return true;
}

std::vector<Symbol> topsym(const Store& s) {
    std::vector<Symbol> out;
    const Store* cur = &s;
    while (!cur->empty()) {
        out.push_back(cur->top_symbol());
        cur = &cur->top_flag();
    }
    return out;
}

std::optional<Store> pop(int j, const Store& s) {
    if (j < 1 || j > s.level() || s.empty())
        return std::nullopt;
    if (j == 1)
        return s.rest();
    auto inner = pop(j - 1, s.top_flag());
    if (!inner)
        return std::nullopt;
    return s.rest().cons(s.top_symbol(), std::move(*inner));
}

std::optional<Store> push(int j, std::span<const Symbol> w, const Store& s) {
    if (j < 1 || j > s.level())
        return std::nullopt;
    if (j == 1) {
        if (s.empty()) {
            if (w.empty())
                return std::nullopt;
            Store out(s.level());
            Store flag(s.level() - 1);
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                out = out.cons(*it, flag);
            return out;
        }
        Store out = s.rest();
        const Store& flag = s.top_flag();
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            out = out.cons(*it, flag);
        return out;
    }
    if (s.empty())
        return std::nullopt;
    auto inner = push(j - 1, w, s.top_flag());
    if (!inner)
        return std::nullopt;
    return s.rest().cons(s.top_symbol(), std::move(*inner));
}

std::uint64_t total_size(const Store& s) { return s.total_size(); }

namespace {

void render_into(const Store& s, std::string& out) {
    if (s.empty()) {
        out += 'e';
        return;
    }
    bool first = true;
    s.for_each([&](Symbol sym, const Store& flag) {
        if (!first)
            out += '.';
        first = false;
        out += sym.name();
        if (s.level() > 1) {
            out += '[';
            render_into(flag, out);
            out += ']';
        }
    });
}

class StoreParser {
public:
    explicit StoreParser(std::string_view text) : text_(text) {}

    Store parse(int level) {
        Store s = parse_store(level);
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return s;
    }

private:
    Store parse_store(int level) {
        skip_space();
        if (at_empty_mark()) {
            ++pos_;
            return Store(level);
        }
        if (level == 0)
            fail("a level-0 store must be 'e'");
        std::vector<std::pair<Symbol, Store>> elements;
        while (true) {
            skip_space();
            std::string_view token = read_token();
            if (token.empty())
                fail("expected a store symbol");
            Store flag(level - 1);
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '[') {
                ++pos_;
                flag = parse_store(level - 1);
                skip_space();
                if (pos_ >= text_.size() || text_[pos_] != ']')
                    fail("expected ']'");
                ++pos_;
            }
            elements.emplace_back(Symbol(token), std::move(flag));
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '.') {
                ++pos_;
                continue;
            }
            break;
        }
        Store out(level);
        for (auto it = elements.rbegin(); it != elements.rend(); ++it)
            out = out.cons(it->first, std::move(it->second));
        return out;
    }

    bool at_empty_mark() const {
        if (pos_ >= text_.size() || text_[pos_] != 'e')
            return false;
        std::size_t next = pos_ + 1;
        return next == text_.size() || is_delimiter(text_[next]);
    }

    static bool is_delimiter(char c) {
        return c == '[' || c == ']' || c == '.' || std::isspace(static_cast<unsigned char>(c));
    }

    std::string_view read_token() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && !is_delimiter(text_[pos_]))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("store text '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string render(const Store& s) {
    std::string out;
    render_into(s, out);
    return out;
}

Store parse_store(std::string_view text, int level) { return StoreParser(text).parse(level); }

std::vector<Symbol> parse_symbols(std::string_view text) {
    std::vector<Symbol> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '.') {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '.')
            ++pos;
        out.emplace_back(text.substr(start, pos - start));
    }
    return out;
}

} // namespace ipda
