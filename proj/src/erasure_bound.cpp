#include "ipda/erasure_bound.hpp"

#include <algorithm>

namespace ipda {

namespace {

constexpr int kFirstHorizon = 8;
constexpr int kMaxHorizon = 1024;
constexpr int kMaxSweeps = 1000;

} // namespace

ErasureBound::ErasureBound(const Automaton& a, std::uint64_t cap) : levels_(a.levels()), cap_(cap) {
    if (levels_ > 2 || cap_ == 0)
        return;
    states_ = a.states().size();
    symbols_ = a.store_alphabet().size();
    empty_flag_.assign(states_ * symbols_, {});
    nonempty_flag_.assign(states_ * symbols_, {});
    for (std::size_t id = 0; id < a.transitions().size(); ++id) {
        const Transition& t = a.transitions()[id];
        const auto& c = a.compiled(id);
        if (t.pattern.empty())
            continue;
        Option o{c.to, c.input == Automaton::kEpsilon ? 0u : 1u, t.action.kind, t.action.level, {}};
        for (Symbol s : t.action.word)
            o.word.push_back(a.symbol_index(s));
        std::size_t slot = c.from * symbols_ + static_cast<std::size_t>(a.symbol_index(t.pattern[0]));
        (t.pattern.size() == 1 ? empty_flag_ : nonempty_flag_)[slot].push_back(std::move(o));
    }

    if (levels_ == 1) {
        enabled_ = solve(0, false);
        return;
    }
    const int limit = static_cast<int>(std::clamp<std::uint64_t>(cap_ + 1, kFirstHorizon, kMaxHorizon));
    for (int h = kFirstHorizon;; h *= 2) {
        h = std::min(h, limit);
        if (!solve(h, true)) {
            enabled_ = solve(h, false);
            return;
        }
        bool saturated = true;
        for (std::uint32_t q = 0; q < states_ && saturated; ++q)
            for (std::size_t s = 0; s < symbols_ && saturated; ++s)
                saturated = cost_[cell(q, static_cast<int>(s), static_cast<std::size_t>(h))] >= cap_;
        if (saturated || h >= limit) {
            enabled_ = true;
            return;
        }
    }
}

std::uint64_t ErasureBound::at(std::uint32_t q, int sym, std::size_t h) const {
    if (h > static_cast<std::size_t>(horizon_)) {
        if (!tail_verified_)
            return 0;
        h = static_cast<std::size_t>(horizon_);
    }
    return cost_[cell(q, sym, h)];
}

std::uint64_t ErasureBound::any_at(int sym, std::size_t h) const {
    if (h > static_cast<std::size_t>(horizon_)) {
        if (!tail_verified_)
            return 0;
        h = static_cast<std::size_t>(horizon_);
    }
    return any_cost_[h * symbols_ + static_cast<std::size_t>(sym)];
}

std::uint64_t ErasureBound::evaluate(const Option& o, int symbol, std::size_t h) const {
    std::uint64_t c = o.consumed;
    if (o.kind == Action::Kind::pop) {
        if (o.level == 1)
            return c;
        if (h == 0)
            return cap_;
        return std::min(cap_, c + at(o.to, symbol, h - 1));
    }
    if (o.level == 1) {
        if (o.word.empty())
            return c;
        c += at(o.to, o.word[0], h);
        for (std::size_t i = 1; i < o.word.size() && c < cap_; ++i)
            c += any_at(o.word[i], h);
        return std::min(cap_, c);
    }
    if (h == 0 && o.word.empty())
        return cap_;
    std::size_t next = h == 0 ? o.word.size() : h - 1 + o.word.size();
    return std::min(cap_, c + at(o.to, symbol, next));
}

bool ErasureBound::solve(int horizon, bool verified_tail) {
    horizon_ = horizon;
    tail_verified_ = verified_tail;
    const std::size_t heights = static_cast<std::size_t>(horizon) + 1;
    cost_.assign(heights * states_ * symbols_, cap_);
    any_cost_.assign(heights * symbols_, cap_);

    auto relax_height = [&](std::size_t h) {
        bool changed_any = false;
        for (int pass = 0; pass < kMaxSweeps; ++pass) {
            bool changed = false;
            for (std::uint32_t q = 0; q < states_; ++q) {
                for (std::size_t s = 0; s < symbols_; ++s) {
                    const auto& opts = (h == 0 ? empty_flag_ : nonempty_flag_)[q * symbols_ + s];
                    std::uint64_t best = cap_;
                    for (const auto& o : opts)
                        best = std::min(best, evaluate(o, static_cast<int>(s), h));
                    auto& slot = cost_[cell(q, static_cast<int>(s), h)];
                    if (best < slot) {
                        slot = best;
                        auto& any = any_cost_[h * symbols_ + s];
                        any = std::min(any, best);
                        changed = true;
                    }
                }
            }
            if (!changed)
                return changed_any;
            changed_any = true;
        }
        return changed_any;
    };

    // Values only decrease from the cap; alternate directions because flag
    // pops look down one height while flag pushes look up.
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool changed = false;
        if (sweep % 2 == 0) {
            for (std::size_t h = 0; h < heights; ++h)
                changed |= relax_height(h);
        } else {
            for (std::size_t h = heights; h-- > 0;)
                changed |= relax_height(h);
        }
        if (!changed) {
            converged = true;
            break;
        }
    }
    if (!converged)
        return false;
    if (!verified_tail || levels_ < 2)
        return true;

    // Heights above the horizon reuse the horizon's values; that is sound iff
    // the equations still hold one level up with every reference clamped.
    const std::size_t above = static_cast<std::size_t>(horizon) + 1;
    for (std::uint32_t q = 0; q < states_; ++q) {
        for (std::size_t s = 0; s < symbols_; ++s) {
            std::uint64_t best = cap_;
            for (const auto& o : nonempty_flag_[q * symbols_ + s])
                best = std::min(best, evaluate(o, static_cast<int>(s), above));
            if (best < cost_[cell(q, static_cast<int>(s), static_cast<std::size_t>(horizon))])
                return false;
        }
    }
    return true;
}

std::uint64_t ErasureBound::element(std::uint32_t state, int symbol, std::size_t height) const {
    if (!enabled_)
        return 0;
    if (symbol < 0)
        return cap_;
    return at(state, symbol, height);
}

std::uint64_t ErasureBound::element_any(int symbol, std::size_t height) const {
    if (!enabled_)
        return 0;
    if (symbol < 0)
        return cap_;
    return any_at(symbol, height);
}

std::uint64_t ErasureBound::below_top(const Automaton& a, const Store& s) const {
    if (!enabled_ || s.empty())
        return 0;
    std::uint64_t total = 0;
    bool first = true;
    s.for_each([&](Symbol sym, const Store& flag) {
        if (first) {
            first = false;
            return;
        }
        if (total < cap_)
            total += element_any(a.symbol_index(sym), flag.length());
    });
    return std::min(total, cap_);
}

std::uint64_t ErasureBound::store(const Automaton& a, std::uint32_t state, const Store& s) const {
    if (!enabled_ || s.empty())
        return 0;
    std::uint64_t top = element(state, a.symbol_index(s.top_symbol()), s.top_flag().length());
    return std::min(cap_, top + below_top(a, s));
}

} // namespace ipda
