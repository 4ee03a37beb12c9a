#include "ecogen_tools/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "ecogen/catalog.hpp"
#include "ecogen/generator.hpp"
#include "ecogen/json_export.hpp"
#include "ecogen/pattern_set.hpp"
#include "ecogen/verify.hpp"
#include "ecogen_tools/sequences.hpp"

namespace ecogen::tools {

namespace {

struct UsageError : std::runtime_error {
    UsageError(const std::string& flag, const std::string& message) : std::runtime_error(flag + ": " + message) {}
};

struct Params {
    std::optional<int> p;
    std::optional<int> m;
};

Params parse_params(const std::string& text)
{
    Params out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("--params", "expected key=value, got '" + item + "'");
        const auto key = item.substr(0, eq);
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1)
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw UsageError("--params", "'" + item.substr(eq + 1) + "' is not an integer");
        }
        if (key == "p")
            out.p = value;
        else if (key == "m")
            out.m = value;
        else
            throw UsageError("--params", "unknown parameter '" + key + "' (expected p or m)");
    }
    return out;
}

CatalogEntry resolve_entry(const std::string& id, const std::string& params_text)
{
    const auto params = parse_params(params_text);
    try {
        return make_entry(id, params.p, params.m);
    } catch (const std::out_of_range& e) {
        throw UsageError("--params", e.what());
    } catch (const std::exception& e) {
        throw UsageError("--entry", e.what());
    }
}

PatternSet resolve_patterns(const std::string& text)
{
    try {
        return parse_pattern_set(text);
    } catch (const std::exception& e) {
        throw UsageError("--patterns", e.what());
    }
}

int default_max_n(std::ostream&)
{
    const char* env = std::getenv(kMaxNEnv);
    if (env == nullptr || *env == '\0')
        return kDefaultOracleMaxN;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (env[used] == '\0')
            return v;
    } catch (const std::exception&) {
    }
    throw UsageError(kMaxNEnv, std::string("'") + env + "' is not an integer");
}

int check_max_n(int max_n, int lowest, std::ostream& err)
{
    if (max_n < lowest || max_n > kHardOracleMaxN)
        throw UsageError("--max-n", "must be in " + std::to_string(lowest) + ".." + std::to_string(kHardOracleMaxN) +
                                        " (got " + std::to_string(max_n) + ")");
    if (max_n > 8)
        err << "note: oracle cost grows exponentially; max-n " << max_n << " may take a while\n";
    return max_n;
}

// Buffered writer for permutation streams.
class Emitter {
public:
    Emitter(std::ostream& out, bool json) : out_(out), json_(json)
    {
        if (json_)
            buf_ += "[";
    }

    void operator()(std::span<const int> perm)
    {
        if (json_) {
            buf_ += first_ ? "\n[" : ",\n[";
            for (std::size_t i = 0; i < perm.size(); ++i) {
                if (i)
                    buf_ += ',';
                buf_ += std::to_string(perm[i]);
            }
            buf_ += ']';
        } else {
            for (std::size_t i = 0; i < perm.size(); ++i) {
                if (i)
                    buf_ += ' ';
                buf_ += std::to_string(perm[i]);
            }
            buf_ += '\n';
        }
        first_ = false;
        if (buf_.size() > (1u << 16))
            flush();
    }

    void finish()
    {
        if (json_)
            buf_ += first_ ? "]\n" : "\n]\n";
        flush();
    }

private:
    void flush()
    {
        out_ << buf_;
        buf_.clear();
    }

    std::ostream& out_;
    bool json_;
    bool first_ = true;
    std::string buf_;
};

std::string sequence_text(const CatalogEntry& e)
{
    if (!e.sequence)
        return "-";
    return e.sequence->oeis.empty() ? e.sequence->name : e.sequence->oeis + " " + e.sequence->name;
}

void print_report(const VerificationReport& r, std::ostream& out)
{
    out << r.entry_id;
    if (r.p)
        out << " p=" << *r.p;
    if (r.m)
        out << " m=" << *r.m;
    out << ": " << to_string(r.status) << " (max_n=" << r.max_n << ")\n";
    out << "level counts:";
    for (auto c : r.level_counts)
        out << ' ' << c;
    out << '\n';
    if (r.counterexample) {
        const auto& cx = *r.counterexample;
        out << "counterexample: n=" << cx.n << " permutation=[" << to_string(cx.permutation) << "]";
        if (cx.site)
            out << " site=" << *cx.site;
        out << " expected " << cx.expected << ", actual " << cx.actual << '\n';
    }
}

void print_inference(const InferenceResult& result, std::ostream& out)
{
    if (const auto* ok = std::get_if<InferredSuccession>(&result)) {
        out << "regular (empirical up to n=" << ok->max_n << ")\n";
        out << "root child " << to_string(ok->root_child) << '\n';
        std::map<int, std::vector<int>> productions;  // k -> children in site order
        for (const auto& [key, child] : ok->table)
            productions[key.second].push_back(child);
        for (const auto& [k, children] : productions) {
            out << "(" << k << ") ->";
            for (int child : children)
                out << " (" << child << ")";
            out << '\n';
        }
    } else if (const auto* nrj = std::get_if<NotRightJustified>(&result)) {
        out << "not right-justified; witness " << to_string(nrj->witness) << '\n';
    } else {
        const auto& nr = std::get<NotRegular>(result);
        out << "not regular: " << nr.reason << '\n';
        out << "witness: [" << to_string(nr.first) << "] site " << nr.site << " -> k'=" << nr.first_k;
        if (nr.second)
            out << "; [" << to_string(*nr.second) << "] site " << nr.site << " -> k'=" << nr.second_k;
        out << '\n';
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generate and check pattern-avoiding permutations via succession rules", "ecogen"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    std::string entry_id, patterns_text, params_text, format = "lines", transform_name = "none";
    int n = -1;
    int max_n = 0;
    int depth = 0;
    int repetitions = 3;
    bool force_oracle = false;
    bool list_verify = true;

    auto* list = app.add_subcommand("list", "Print the catalog");
    list->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json", "lines"}));
    list->add_option("--params", params_text, "Parameters for family entries, e.g. p=3,m=4");
    list->add_option("--max-n", max_n, "Verification depth for the verified flag");
    list->add_flag("!--no-verify", list_verify, "Skip verification");

    auto* gen = app.add_subcommand("generate", "Stream S_n(P)");
    auto* gen_entry = gen->add_option("--entry", entry_id, "Catalog entry id");
    auto* gen_patterns = gen->add_option("--patterns", patterns_text, "Pattern set, e.g. \"312;2431\"");
    gen_entry->excludes(gen_patterns);
    gen->add_option("--params", params_text, "Parameters, e.g. p=3,m=4");
    gen->add_option("--n", n, "Length")->required()->check(CLI::Range(0, 64));
    gen->add_option("--format", format, "lines or json")->check(CLI::IsMember({"lines", "json"}));
    gen->add_option("--transform", transform_name, "reverse or complement")
        ->check(CLI::IsMember({"none", "reverse", "complement"}));
    gen->add_flag("--oracle", force_oracle, "Use brute force instead of the succession rule");

    auto* cnt = app.add_subcommand("count", "Count S_n(P) from the succession rule");
    cnt->add_option("--entry", entry_id, "Catalog entry id")->required();
    cnt->add_option("--params", params_text, "Parameters, e.g. p=3,m=4");
    cnt->add_option("--n", n, "Length")->required()->check(CLI::Range(0, 1000));

    auto* rj = app.add_subcommand("check-rj", "Right-justified test");
    rj->add_option("--patterns", patterns_text, "Pattern set")->required();

    auto* ver = app.add_subcommand("verify", "Check an entry against the brute-force oracle");
    ver->add_option("--entry", entry_id, "Catalog entry id")->required();
    ver->add_option("--params", params_text, "Parameters, e.g. p=3,m=4");
    ver->add_option("--max-n", max_n, "Deepest level checked (default $ECOGEN_MAX_N or 7, at most 10)");
    ver->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json", "lines"}));

    auto* inf = app.add_subcommand("infer", "Empirical regular succession table");
    inf->add_option("--patterns", patterns_text, "Pattern set")->required();
    inf->add_option("--max-n", max_n, "Deepest level inspected (default $ECOGEN_MAX_N or 7, at most 10)");
    inf->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json", "lines"}));

    auto* tree = app.add_subcommand("tree", "Labelled generating tree");
    tree->add_option("--entry", entry_id, "Catalog entry id")->required();
    tree->add_option("--params", params_text, "Parameters, e.g. p=3,m=4");
    tree->add_option("--depth", depth, "Depth (at most 6)")->required();

    auto* bench = app.add_subcommand("bench", "Constant amortized time metrics");
    bench->add_option("--entry", entry_id, "Catalog entry id")->required();
    bench->add_option("--params", params_text, "Parameters, e.g. p=3,m=4");
    bench->add_option("--n", n, "Length")->required()->check(CLI::Range(1, 20));
    bench->add_option("--repetitions", repetitions, "Runs; the fastest is reported")->check(CLI::Range(1, 100));
    bench->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json", "lines"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ecogen: " << e.what() << '\n';
        return 2;
    }

    const bool json = (format == "json");

    try {
        if (list->parsed()) {
            const auto params = parse_params(params_text);
            const int depth_n = max_n ? check_max_n(max_n, 1, err) : default_max_n(err);
            std::vector<CatalogEntry> entries;
            try {
                entries = catalog(params.p.value_or(kDefaultP), params.m.value_or(kDefaultM));
            } catch (const std::exception& e) {
                throw UsageError("--params", e.what());
            }
            std::map<std::string, bool> verified;
            if (list_verify)
                for (const auto& e : entries)
                    verified[display_id(e)] = verify_entry(e, depth_n).passed();
            if (json) {
                out << catalog_json(entries, verified) << '\n';
                return 0;
            }
            for (const auto& e : entries) {
                out << display_id(e) << '\t' << to_string(e.patterns) << '\t' << sequence_text(e) << '\t';
                if (!list_verify)
                    out << "unchecked";
                else
                    out << (verified[display_id(e)] ? "verified n<=" + std::to_string(depth_n) : "FAILED");
                out << '\n';
            }
            return 0;
        }

        if (gen->parsed()) {
            if (entry_id.empty() && patterns_text.empty())
                throw UsageError("--entry", "one of --entry or --patterns is required");
            const auto transform = *parse_transform(transform_name);
            Emitter emit(out, json);

            std::optional<CatalogEntry> entry;
            PatternSet patterns;
            if (!entry_id.empty()) {
                entry = resolve_entry(entry_id, params_text);
                patterns = entry->patterns;
            } else {
                if (!params_text.empty())
                    throw UsageError("--params", "only meaningful with --entry");
                patterns = resolve_patterns(patterns_text);
                if (!force_oracle) {
                    entry = find_entry_for(patterns);
                    if (!entry)
                        err << "note: no catalog rule for {" << to_string(patterns)
                            << "}; using the brute-force oracle\n";
                }
            }

            if (entry && !force_oracle) {
                generate_transformed(n, *entry, transform, emit);
            } else {
                if (n > kHardOracleMaxN + 2)
                    throw UsageError("--n", "brute force is limited to n <= " + std::to_string(kHardOracleMaxN + 2));
                std::vector<int> scratch(static_cast<std::size_t>(n));
                for (const auto& perm : oracle_generate(n, patterns)) {
                    apply_transform(transform, perm.entries(), scratch);
                    emit(std::span<const int>(scratch));
                }
            }
            emit.finish();
            return 0;
        }

        if (cnt->parsed()) {
            const auto entry = resolve_entry(entry_id, params_text);
            out << count(n, entry) << '\n';
            return 0;
        }

        if (rj->parsed()) {
            const auto patterns = resolve_patterns(patterns_text);
            const auto verdict = is_right_justified(patterns);
            if (verdict.right_justified) {
                out << "right-justified\n";
                return 0;
            }
            out << "not right-justified; witness " << to_string(verdict.witness.value_or(Permutation{})) << '\n';
            return 1;
        }

        if (ver->parsed()) {
            const auto entry = resolve_entry(entry_id, params_text);
            const int depth_n = check_max_n(max_n ? max_n : default_max_n(err), 1, err);
            const auto report = verify_entry(entry, depth_n);
            if (json)
                out << report_json(report) << '\n';
            else
                print_report(report, out);
            return report.passed() ? 0 : 1;
        }

        if (inf->parsed()) {
            const auto patterns = resolve_patterns(patterns_text);
            const int depth_n = check_max_n(max_n ? max_n : default_max_n(err), 2, err);
            const auto result = infer_regular(patterns, depth_n);
            if (json)
                out << inference_json(result) << '\n';
            else
                print_inference(result, out);
            return std::holds_alternative<InferredSuccession>(result) ? 0 : 1;
        }

        if (tree->parsed()) {
            const auto entry = resolve_entry(entry_id, params_text);
            if (depth < 0 || depth > kDefaultTreeDepthCap)
                throw UsageError("--depth", "must be in 0.." + std::to_string(kDefaultTreeDepthCap));
            out << format_tree(generate_tree(depth, entry.succession));
            return 0;
        }

        if (bench->parsed()) {
            const auto entry = resolve_entry(entry_id, params_text);
            const auto r = measure(entry, n, repetitions);
            if (json) {
                std::ostringstream js;
                js << "{\"entry\": \"" << r.entry << "\", \"n\": " << r.n
                   << ", \"recursive_calls\": " << r.counters.recursive_calls
                   << ", \"transpositions\": " << r.counters.transpositions
                   << ", \"emitted\": " << r.counters.emitted << ", \"seconds\": " << r.seconds
                   << ", \"empty\": " << (r.empty ? "true" : "false")
                   << ", \"calls_per_emitted\": " << r.calls_per_emitted
                   << ", \"transpositions_per_emitted\": " << r.transpositions_per_emitted
                   << ", \"ns_per_emitted\": " << r.ns_per_emitted << ", \"excluded_pattern\": "
                   << (r.excluded_pattern ? "\"" + to_string(*r.excluded_pattern) + "\"" : std::string("null"))
                   << "}\n";
                out << js.str();
                return 0;
            }
            out << "entry " << r.entry << " n=" << r.n << '\n'
                << "emitted " << r.counters.emitted << '\n'
                << "recursive calls " << r.counters.recursive_calls << '\n'
                << "transpositions " << r.counters.transpositions << '\n'
                << "seconds " << r.seconds << '\n';
            if (r.empty) {
                out << "empty run; ratios undefined\n";
            } else {
                out << "calls/emitted " << r.calls_per_emitted << '\n'
                    << "transpositions/emitted " << r.transpositions_per_emitted << '\n'
                    << "ns/emitted " << r.ns_per_emitted << '\n';
            }
            if (r.excluded_pattern)
                out << "note: pattern " << to_string(*r.excluded_pattern)
                    << " ends in k,k-1; no constant amortized time claim\n";
            return 0;
        }
    } catch (const UsageError& e) {
        err << "ecogen: " << e.what() << '\n';
        return 2;
    } catch (const std::overflow_error& e) {
        err << "ecogen: --n: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        err << "ecogen: --depth: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "ecogen: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace ecogen::tools
