#include "ipda/contour.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ipda {

bool ContourSpec::standard_sigma() const {
    if (kind != ContourKind::ball)
        return true;
    const auto& m = system.ball_multiplicities();
    return std::find(m.begin(), m.end(), sigma) != m.end();
}

std::size_t ContourSpec::first_level() const { return kind == ContourKind::sector ? 1 : 0; }

std::optional<ContourKind> parse_contour_kind(std::string_view name) {
    if (name == "ball")
        return ContourKind::ball;
    if (name == "sector")
        return ContourKind::sector;
    if (name == "level")
        return ContourKind::level;
    return std::nullopt;
}

std::string to_string(ContourKind k) {
    switch (k) {
    case ContourKind::ball:
        return "ball";
    case ContourKind::sector:
        return "sector";
    case ContourKind::level:
        return "level";
    }
    return "?";
}

void contour_word(const ContourSpec& spec, std::size_t level, const std::function<void(const std::string&)>& emit) {
    const auto& sys = spec.system;
    auto body = [&] { ipda::level_word(sys, spec.root, level, [&](std::size_t l) { emit(sys.read_letter(l)); }); };
    switch (spec.kind) {
    case ContourKind::level:
        body();
        return;
    case ContourKind::ball:
        if (spec.sigma < 1)
            throw std::domain_error("ball multiplicity must be at least 1");
        for (int i = 0; i < spec.sigma; ++i)
            body();
        return;
    case ContourKind::sector:
        if (level == 0)
            throw std::domain_error("sector contours start at level 1");
        if (!sys.side_markers()) {
            body();
            return;
        }
        emit(kSectorRoot);
        for (std::size_t i = 0; i < level; ++i)
            emit(kSectorSide);
        body();
        for (std::size_t i = 0; i < level; ++i)
            emit(kSectorSide);
        return;
    }
}

std::vector<std::string> contour_word(const ContourSpec& spec, std::size_t level) {
    std::vector<std::string> out;
    contour_word(spec, level, [&](const std::string& t) { out.push_back(t); });
    return out;
}

std::vector<std::string> ball_contour(const ContourSpec& spec, std::size_t level) {
    if (spec.kind != ContourKind::ball)
        throw std::invalid_argument("ball_contour needs a ball specification");
    return contour_word(spec, level);
}

std::vector<std::string> sector_contour(const ContourSpec& spec, std::size_t level) {
    if (spec.kind != ContourKind::sector)
        throw std::invalid_argument("sector_contour needs a sector specification");
    return contour_word(spec, level);
}

BigInt contour_length(const ContourSpec& spec, std::size_t level) {
    BigInt lw = level_total(spec.system, spec.root, level);
    switch (spec.kind) {
    case ContourKind::level:
        return lw;
    case ContourKind::ball:
        return lw * spec.sigma;
    case ContourKind::sector:
        if (level == 0)
            throw std::domain_error("sector contours start at level 1");
        return spec.system.side_markers() ? lw + 1 + 2 * level : lw;
    }
    return 0;
}

std::optional<std::size_t> oracle_level(const ContourSpec& spec, const std::vector<std::string>& word) {
    const BigInt n = word.size();
    for (std::size_t level = spec.first_level();; ++level) {
        BigInt len = contour_length(spec, level);
        if (len > n)
            return std::nullopt;
        if (len == n)
            return contour_word(spec, level) == word ? std::optional(level) : std::nullopt;
    }
}

std::vector<std::string> terminal_alphabet(const ContourSpec& spec) {
    std::vector<std::string> out;
    if (spec.kind == ContourKind::sector && spec.system.side_markers())
        out = {kSectorRoot, kSectorSide};
    for (const auto& l : spec.system.read_letters())
        out.push_back(l);
    return out;
}

std::vector<std::vector<std::string>> mutate(const std::vector<std::string>& word,
                                             const std::vector<std::string>& alphabet, std::uint64_t seed,
                                             std::size_t count) {
    if (alphabet.empty())
        throw std::invalid_argument("mutation alphabet is empty");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::string>> out;
    out.reserve(count);
    while (out.size() < count) {
        std::vector<std::string> m = word;
        switch (rng() % 3) {
        case 0: { // substitution
            if (word.empty())
                continue;
            const std::size_t pos = rng() % word.size();
            std::vector<const std::string*> others;
            for (const auto& a : alphabet)
                if (a != word[pos])
                    others.push_back(&a);
            if (others.empty())
                continue;
            m[pos] = *others[rng() % others.size()];
            break;
        }
        case 1: { // insertion
            const std::size_t pos = rng() % (word.size() + 1);
            m.insert(m.begin() + static_cast<std::ptrdiff_t>(pos), alphabet[rng() % alphabet.size()]);
            break;
        }
        default: { // deletion
            if (word.empty())
                continue;
            m.erase(m.begin() + static_cast<std::ptrdiff_t>(rng() % word.size()));
            break;
        }
        }
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace ipda
