#include "ipda/check.hpp"

#include <chrono>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "ipda/kernels.hpp"

namespace ipda {

namespace {

double millis_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

SearchBounds bounds_for(const CheckOptions& o, std::size_t n) {
    SearchBounds b = SearchBounds::defaults_for(n);
    if (o.max_store_symbols)
        b.max_store_symbols = o.max_store_symbols;
    if (o.max_configurations)
        b.max_configurations = o.max_configurations;
    return b;
}

Verdict::Outcome decide(const Automaton& a, const std::vector<std::string>& word, const CheckOptions& o) {
    const auto input = a.encode_input(word);
    SearchOptions opt;
    opt.record_trace = false;
    return accepts(a, input, bounds_for(o, input.size()), opt).outcome;
}

SweepRow run_sweep(const ContourSpec& spec, const Automaton& a, std::size_t m) {
    const auto t0 = std::chrono::steady_clock::now();
    const SweepResult s = sweep(a, m);

    std::set<EncodedWord> expected;
    for (std::size_t l = spec.first_level(); contour_length(spec, l) <= m; ++l)
        expected.insert(a.encode_input(contour_word(spec, l)));

    SweepRow row;
    row.max_length = m;
    row.words = s.words;
    row.accepted = s.accepted.size();
    row.inconclusive = s.inconclusive;
    std::set<EncodedWord> got(s.accepted.begin(), s.accepted.end());
    for (const auto& w : got)
        row.mismatches += expected.contains(w) ? 0 : 1;
    for (const auto& w : expected)
        row.mismatches += got.contains(w) ? 0 : 1;
    row.millis = millis_since(t0);
    return row;
}

} // namespace

std::uint64_t mutation_seed(std::uint64_t seed, std::size_t level) {
    return seed ^ (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(level) + 1));
}

CheckReport run_check(const ContourSpec& spec, Variant variant, const CheckOptions& options) {
    const Automaton a = automaton_for(spec, variant);
    const auto alphabet = a.input_alphabet();
    const std::size_t from = std::max(options.level_from, spec.first_level());

    CheckReport report;
    report.pass = true;
    for (std::size_t level = from; level <= options.level_to; ++level) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckRow row;
        row.level = level;
        const auto word = contour_word(spec, level);
        row.length = word.size();
        row.positive = decide(a, word, options);

        if (!options.mutate_up_to || level <= *options.mutate_up_to) {
            const auto mutants = mutate(word, alphabet, mutation_seed(options.seed, level), options.mutations);
            std::vector<EncodedWord> inputs;
            inputs.reserve(mutants.size());
            for (const auto& m : mutants)
                inputs.push_back(a.encode_input(m));
            const auto verdicts = accept_batch(a, inputs);
            row.mutations = mutants.size();
            for (std::size_t i = 0; i < mutants.size(); ++i) {
                const bool oracle = is_oracle(spec, mutants[i]);
                row.rejected += verdicts[i] == Verdict::Outcome::rejected ? 1 : 0;
                const auto want = oracle ? Verdict::Outcome::accepted : Verdict::Outcome::rejected;
                row.mismatches += verdicts[i] == want ? 0 : 1;
            }
        }
        row.millis = millis_since(t0);
        report.pass = report.pass && row.positive == Verdict::Outcome::accepted && row.mismatches == 0;
        report.rows.push_back(row);
    }
    if (options.exhaustive_length) {
        report.sweep = run_sweep(spec, a, *options.exhaustive_length);
        report.pass = report.pass && report.sweep->mismatches == 0 && report.sweep->inconclusive == 0;
    }
    return report;
}

std::string render_text(const CheckReport& r) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%6s %12s %-13s %9s %9s %10s\n", "level", "len", "positive", "mutations",
                  "rejected", "millis");
    out += line;
    for (const auto& row : r.rows) {
        std::snprintf(line, sizeof line, "%6zu %12llu %-13s %9zu %9zu %10.1f\n", row.level,
                      static_cast<unsigned long long>(row.length), to_string(row.positive).c_str(), row.mutations,
                      row.rejected, row.millis);
        out += line;
    }
    if (r.sweep) {
        std::snprintf(line, sizeof line,
                      "sweep: all words up to length %zu: %llu words, %llu accepted, %llu mismatches, "
                      "%llu inconclusive, %.1f ms\n",
                      r.sweep->max_length, static_cast<unsigned long long>(r.sweep->words),
                      static_cast<unsigned long long>(r.sweep->accepted),
                      static_cast<unsigned long long>(r.sweep->mismatches),
                      static_cast<unsigned long long>(r.sweep->inconclusive), r.sweep->millis);
        out += line;
    }
    out += r.pass ? "PASS\n" : "FAIL\n";
    return out;
}

std::string render_json(const CheckReport& r) {
    nlohmann::json j;
    j["pass"] = r.pass;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        j["rows"].push_back({{"level", row.level},
                             {"len", row.length},
                             {"positive", to_string(row.positive)},
                             {"mutations", row.mutations},
                             {"rejected", row.rejected},
                             {"millis", row.millis}});
    }
    if (r.sweep) {
        j["sweep"] = {{"max_length", r.sweep->max_length},
                      {"words", r.sweep->words},
                      {"accepted", r.sweep->accepted},
                      {"mismatches", r.sweep->mismatches},
                      {"inconclusive", r.sweep->inconclusive},
                      {"millis", r.sweep->millis}};
    }
    return j.dump(2) + "\n";
}

} // namespace ipda
