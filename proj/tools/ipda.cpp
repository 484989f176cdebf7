// Command-line front end: generate words and counts, build recognizers, run
// them and check them against the contour oracle.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "ipda/builders.hpp"
#include "ipda/check.hpp"
#include "ipda/contour.hpp"
#include "ipda/grammar.hpp"
#include "ipda/search.hpp"

namespace {

using namespace ipda;

constexpr int kExitError = 3;

struct Family {
    std::string system = "fib";
    std::string root;
    std::string kind = "ball";
    std::optional<int> sigma;

    void add_options(CLI::App* cmd, bool with_kind) {
        cmd->add_option("--system", system, "fib, poly<p> (p >= 5), dodeca or cell120")->capture_default_str();
        cmd->add_option("--root", root, "Root label (default W, or O for dodeca; required for cell120)");
        if (with_kind)
            cmd->add_option("--kind", kind, "ball, sector or level")->capture_default_str();
        cmd->add_option("--sigma", sigma, "Sectors per ball (default: the system's first multiplicity)");
    }

    ContourSpec spec() const {
        SubstitutionSystem sys = system_by_name(system);
        std::string r = root;
        if (r.empty()) {
            if (sys.name() == "cell120")
                throw std::invalid_argument("--root is required for cell120");
            r = sys.name() == "dodeca" ? "O" : "W";
        }
        auto k = parse_contour_kind(kind);
        if (!k)
            throw std::invalid_argument("unknown kind '" + kind + "' (expected ball, sector or level)");
        ContourSpec s{sys, sys.require(r), 1, *k};
        if (*k == ContourKind::ball) {
            s.sigma = sigma.value_or(sys.ball_multiplicities().front());
            if (!s.standard_sigma())
                std::cerr << "warning: sigma " << s.sigma << " is not a ball multiplicity of " << sys.name() << "\n";
        }
        return s;
    }
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    return read_all(in);
}

std::pair<std::size_t, std::size_t> parse_levels(const std::string& text) {
    auto number = [&](std::string_view s) {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(std::string(s), &pos);
        if (pos != s.size())
            throw std::invalid_argument("bad level range '" + text + "'");
        return static_cast<std::size_t>(v);
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto l = number(text);
        return {l, l};
    }
    const auto a = number(std::string_view(text).substr(0, dots));
    const auto b = number(std::string_view(text).substr(dots + 2));
    if (b < a)
        throw std::invalid_argument("empty level range '" + text + "'");
    return {a, b};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterated pushdown automata for contour words of hyperbolic tilings"};
    app.require_subcommand(1);

    // word
    Family word_family;
    std::size_t word_level = 0;
    std::string word_out;
    auto* word = app.add_subcommand("word", "Print a level, ball or sector contour word");
    word_family.add_options(word, true);
    word->add_option("--level", word_level, "Tree level")->required();
    word->add_option("--out", word_out, "Write to a file instead of stdout");

    // count
    Family count_family;
    std::size_t count_level = 0;
    auto* count = app.add_subcommand("count", "Print exact label counts of a tree level");
    count->add_option("--system", count_family.system, "fib, poly<p>, dodeca or cell120")->capture_default_str();
    count->add_option("--root", count_family.root, "Root label");
    count->add_option("--level", count_level, "Tree level")->required();

    // build
    Family build_family;
    std::string build_variant = "corrected";
    std::string build_out;
    auto* build = app.add_subcommand("build", "Write a recognizer in the automaton file format");
    build_family.add_options(build, false);
    build->add_option("--kind", build_family.kind, "fibonacci, ball, sector or level")->capture_default_str();
    build->add_option("--variant", build_variant, "corrected or as-printed")->capture_default_str();
    build->add_option("--out", build_out, "Write to a file instead of stdout");

    // run
    std::string run_file;
    std::string run_word_file;
    std::optional<std::string> run_word;
    std::optional<std::uint64_t> run_max_store;
    std::optional<std::uint64_t> run_max_configs;
    bool run_trace = false;
    auto* run = app.add_subcommand("run", "Decide whether an automaton accepts a word");
    run->add_option("automaton", run_file, "Automaton file")->required();
    run->add_option("--word-file", run_word_file, "File holding the word (default: stdin)");
    run->add_option("--word", run_word, "The word itself");
    run->add_option("--max-store", run_max_store, "Store size bound (default 4(n+4))");
    run->add_option("--max-configs", run_max_configs, "Configuration bound (default 10^7)");
    run->add_flag("--trace", run_trace, "Print the accepting derivation");

    // check
    Family check_family;
    std::string check_variant = "corrected";
    std::string check_levels = "0..4";
    CheckOptions check_options;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "Verify a recognizer against the contour oracle");
    check_family.add_options(check, true);
    check->add_option("--variant", check_variant, "corrected or as-printed")->capture_default_str();
    check->add_option("--levels", check_levels, "Inclusive level range a..b")->capture_default_str();
    check->add_option("--mutations", check_options.mutations, "Mutants per level")->capture_default_str();
    check->add_option("--mutate-up-to", check_options.mutate_up_to, "Last level that gets mutants");
    check->add_option("--seed", check_options.seed, "Mutation seed")->capture_default_str();
    check->add_option("--exhaustive-len", check_options.exhaustive_length, "Sweep all words up to this length");
    check->add_option("--max-store", check_options.max_store_symbols, "Store size bound");
    check->add_option("--max-configs", check_options.max_configurations, "Configuration bound");
    check->add_flag("--json", check_json, "Machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : std::max(code, kExitError);
    }

    try {
        if (*word) {
            const ContourSpec spec = word_family.spec();
            std::ostringstream text;
            const bool single = std::all_of(spec.system.read_letters().begin(), spec.system.read_letters().end(),
                                            [](const std::string& l) { return l.size() == 1; });
            bool first = true;
            contour_word(spec, word_level, [&](const std::string& t) {
                if (!single && !first)
                    text << ' ';
                text << t;
                first = false;
            });
            text << '\n';
            write_output(word_out, text.str());
            return 0;
        }
        if (*count) {
            const SubstitutionSystem sys = system_by_name(count_family.system);
            std::string root = count_family.root;
            if (root.empty()) {
                if (sys.name() == "cell120")
                    throw std::invalid_argument("--root is required for cell120");
                root = sys.name() == "dodeca" ? "O" : "W";
            }
            const auto counts = level_counts(sys, sys.require(root), count_level);
            BigInt total = 0;
            for (std::size_t i = 0; i < counts.size(); ++i) {
                std::cout << sys.labels()[i] << ": " << counts[i] << '\n';
                total += counts[i];
            }
            std::cout << "total: " << total << '\n';
            return 0;
        }
        if (*build) {
            const auto variant = parse_variant(build_variant);
            if (!variant)
                throw std::invalid_argument("unknown variant '" + build_variant + "'");
            if (build_family.kind == "fibonacci") {
                write_output(build_out, render_automaton(fibonacci_automaton(*variant)));
                return 0;
            }
            write_output(build_out, render_automaton(automaton_for(build_family.spec(), *variant)));
            return 0;
        }
        if (*run) {
            const Automaton a = parse_automaton(read_file(run_file));
            std::string text;
            if (run_word)
                text = *run_word;
            else if (!run_word_file.empty())
                text = read_file(run_word_file);
            else
                text = read_all(std::cin);
            const auto tokens = tokenize_input(a, text);
            const auto input = a.encode_input(tokens);
            SearchBounds bounds = SearchBounds::defaults_for(input.size());
            if (run_max_store)
                bounds.max_store_symbols = run_max_store;
            if (run_max_configs)
                bounds.max_configurations = run_max_configs;
            SearchOptions opt;
            opt.record_trace = run_trace;
            const Verdict v = accepts(a, input, bounds, opt);
            if (run_trace && v.accepted()) {
                const auto configs = replay(a, v, input);
                std::cout << render(a, configs[0]) << '\n';
                for (std::size_t i = 0; i < v.transitions.size(); ++i) {
                    std::cout << "  " << describe(a, v.transitions[i]) << '\n';
                    std::cout << render(a, configs[i + 1]) << '\n';
                }
            }
            std::cout << to_string(v.outcome) << '\n';
            switch (v.outcome) {
            case Verdict::Outcome::accepted:
                return 0;
            case Verdict::Outcome::rejected:
                return 1;
            case Verdict::Outcome::inconclusive:
                return 2;
            }
        }
        if (*check) {
            const auto variant = parse_variant(check_variant);
            if (!variant)
                throw std::invalid_argument("unknown variant '" + check_variant + "'");
            std::tie(check_options.level_from, check_options.level_to) = parse_levels(check_levels);
            const CheckReport report = run_check(check_family.spec(), *variant, check_options);
            std::cout << (check_json ? render_json(report) : render_text(report));
            return report.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
