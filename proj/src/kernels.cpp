#include "ipda/kernels.hpp"

#include <algorithm>
#include <unordered_set>

namespace ipda {

namespace {

std::size_t longest(const std::vector<EncodedWord>& inputs) {
    std::size_t n = 0;
    for (const auto& w : inputs)
        n = std::max(n, w.size());
    return n;
}

Verdict::Outcome accept_one(const Automaton& a, const EncodedWord& w, const ErasureBound& eb) {
    SearchOptions opt;
    opt.record_trace = false;
    opt.bound = &eb;
    return accepts(a, w, SearchBounds::defaults_for(w.size()), opt).outcome;
}

void sort_words(std::vector<EncodedWord>& words) {
    std::sort(words.begin(), words.end(), [](const EncodedWord& x, const EncodedWord& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
}

constexpr std::size_t kMaxClosure = 1'000'000;

class Sweeper {
public:
    Sweeper(const Automaton& a, std::size_t max_length)
        : a_(a), m_(max_length), eb_(a, max_length + 1), letters_(a.input_alphabet().size()),
          store_limit_(*SearchBounds::defaults_for(max_length).max_store_symbols) {
        // subtree_[d]: words of length <= m extending a fixed prefix of length d
        subtree_.assign(m_ + 2, 0);
        for (std::size_t d = m_ + 1; d-- > 0;)
            subtree_[d] = 1 + (d < m_ ? subtree_[d + 1] * letters_ : 0);
    }

    struct Task {
        EncodedWord prefix;
        std::vector<Configuration> set;
    };

    std::uint64_t subtree(std::size_t d) const { return subtree_[d]; }

    bool viable(const Configuration& c) const { return eb_.store(a_, c.state, c.store) <= m_ - c.position; }

    // ε-closure of `seeds`; false when a bound cut it short.
    bool closure(std::vector<Configuration> seeds, std::vector<Configuration>& out) const {
        std::unordered_set<Configuration, ConfigurationHash> seen;
        out.clear();
        for (auto& c : seeds)
            if (seen.insert(c).second)
                out.push_back(std::move(c));
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (auto& s : step_with(a_, out[i], std::nullopt)) {
                if (!viable(s.configuration))
                    continue;
                if (s.configuration.store.total_size() > store_limit_ || out.size() >= kMaxClosure)
                    return false;
                if (seen.insert(s.configuration).second)
                    out.push_back(std::move(s.configuration));
            }
        }
        return true;
    }

    // Visits the prefix whose configuration set is `set`; prefixes of length
    // `split` are handed to `tasks` instead when it is given.
    void explore(EncodedWord& prefix, const std::vector<Configuration>& set, SweepResult& r, std::size_t split,
                 std::vector<Task>* tasks) const {
        const std::size_t d = prefix.size();
        if (set.empty()) {
            r.rejected += subtree(d);
            return;
        }
        if (tasks != nullptr && d == split) {
            tasks->push_back({prefix, set});
            return;
        }
        if (std::any_of(set.begin(), set.end(), [](const Configuration& c) { return c.store.empty(); }))
            r.accepted.push_back(prefix);
        else
            ++r.rejected;
        if (d == m_)
            return;
        std::vector<Configuration> next;
        for (std::uint32_t x = 0; x < letters_; ++x) {
            std::vector<Configuration> seeds;
            for (const auto& c : set)
                for (auto& s : step_with(a_, c, x))
                    if (viable(s.configuration))
                        seeds.push_back(std::move(s.configuration));
            if (!closure(std::move(seeds), next)) {
                r.inconclusive += subtree(d + 1);
                continue;
            }
            prefix.push_back(x);
            explore(prefix, next, r, split, tasks);
            prefix.pop_back();
        }
    }

    SweepResult run(bool parallel) const {
        SweepResult r;
        r.words = subtree(0);
        std::vector<Configuration> start;
        if (!closure({initial_configuration(a_)}, start)) {
            r.inconclusive = r.words;
            return r;
        }
        EncodedWord prefix;
        std::vector<Task> tasks;
        const std::size_t split = std::min<std::size_t>(m_, 2);
        explore(prefix, start, r, split, &tasks);

        std::vector<SweepResult> partial(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            EncodedWord p = tasks[i].prefix;
            explore(p, tasks[i].set, partial[i], 0, nullptr);
        }
        for (auto& p : partial) {
            r.rejected += p.rejected;
            r.inconclusive += p.inconclusive;
            r.accepted.insert(r.accepted.end(), p.accepted.begin(), p.accepted.end());
        }
        sort_words(r.accepted);
        return r;
    }

private:
    const Automaton& a_;
    std::size_t m_;
    ErasureBound eb_;
    std::uint32_t letters_;
    std::uint64_t store_limit_;
    std::vector<std::uint64_t> subtree_;
};

} // namespace

std::vector<Verdict::Outcome> accept_batch_serial(const Automaton& a, const std::vector<EncodedWord>& inputs) {
    const ErasureBound eb(a, longest(inputs) + 1);
    std::vector<Verdict::Outcome> out;
    out.reserve(inputs.size());
    for (const auto& w : inputs)
        out.push_back(accept_one(a, w, eb));
    return out;
}

std::vector<Verdict::Outcome> accept_batch(const Automaton& a, const std::vector<EncodedWord>& inputs) {
    const ErasureBound eb(a, longest(inputs) + 1);
    std::vector<Verdict::Outcome> out(inputs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < inputs.size(); ++i)
        out[i] = accept_one(a, inputs[i], eb);
    return out;
}

SweepResult sweep_serial(const Automaton& a, std::size_t max_length) {
    const ErasureBound eb(a, max_length + 1);
    const auto letters = static_cast<std::uint32_t>(a.input_alphabet().size());
    SweepResult r;
    EncodedWord w;
    for (std::size_t len = 0; len <= max_length; ++len) {
        w.assign(len, 0);
        while (true) {
            ++r.words;
            switch (accept_one(a, w, eb)) {
            case Verdict::Outcome::accepted:
                r.accepted.push_back(w);
                break;
            case Verdict::Outcome::rejected:
                ++r.rejected;
                break;
            case Verdict::Outcome::inconclusive:
                ++r.inconclusive;
                break;
            }
            // next word of this length in lexicographic order
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == letters)
                w[--i] = 0;
            if (i == 0)
                break;
            ++w[i - 1];
        }
    }
    sort_words(r.accepted);
    return r;
}

SweepResult sweep(const Automaton& a, std::size_t max_length) { return Sweeper(a, max_length).run(true); }

} // namespace ipda
