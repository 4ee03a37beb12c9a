#include "ecogen/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ecogen/generator.hpp"
#include "ecogen/sites.hpp"

namespace ecogen {

std::vector<Permutation> oracle_generate(int n, const PatternSet& patterns)
{
    if (n < 0)
        throw std::invalid_argument("n must be >= 0");
    std::vector<Permutation> level{Permutation{}};
    if (!patterns.avoided_by(level.front()))
        return {};
    for (int len = 0; len < n; ++len) {
        std::vector<Permutation> next;
        for (const auto& alpha : level)
            for (int site : active_sites_unchecked(alpha, patterns))
                next.push_back(insert_at_site(alpha, site));
        level = std::move(next);
    }
    return level;
}

std::vector<Permutation> oracle_filter(int n, const PatternSet& patterns)
{
    if (n < 0)
        throw std::invalid_argument("n must be >= 0");
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation perm(values);
        if (patterns.avoided_by(perm))
            out.push_back(std::move(perm));
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

OracleTree oracle_tree(int max_n, const PatternSet& patterns, const ColorOracle& color)
{
    if (max_n < 0)
        throw std::invalid_argument("max_n must be >= 0");
    OracleTree tree;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<OracleNode> level;
        for (auto& perm : oracle_generate(n, patterns)) {
            OracleNode node{std::move(perm), 0, std::nullopt};
            node.active_sites = static_cast<int>(active_sites_unchecked(node.perm, patterns).size());
            if (color && n > 0)
                node.color = color(node.perm);
            level.push_back(std::move(node));
        }
        tree.levels.push_back(std::move(level));
    }
    return tree;
}

std::string to_string(VerificationStatus status)
{
    switch (status) {
    case VerificationStatus::pass: return "pass";
    case VerificationStatus::count_mismatch: return "count_mismatch";
    case VerificationStatus::set_mismatch: return "set_mismatch";
    case VerificationStatus::label_mismatch: return "label_mismatch";
    }
    return "unknown";
}

namespace {

struct LabelledNode {
    Permutation perm;
    Label label;
    std::optional<int> site;  // site the maximum was inserted at
};

void fail(VerificationReport& report, VerificationStatus status, Counterexample cx)
{
    report.status = status;
    report.counterexample = std::move(cx);
}

// Checks k against the active sites and c against the color oracle.
bool check_labels(const CatalogEntry& entry, const std::vector<LabelledNode>& level, int n,
                  VerificationReport& report)
{
    for (const auto& node : level) {
        const int active = static_cast<int>(active_sites_unchecked(node.perm, entry.patterns).size());
        if (node.label.k != active) {
            fail(report, VerificationStatus::label_mismatch,
                 {n, node.perm, node.site, "k=" + std::to_string(active), "k=" + std::to_string(node.label.k)});
            return false;
        }
        if (entry.color_oracle && n > 0 && !entry.succession.is_regular()) {
            const int expected = entry.color_oracle(node.perm);
            if (node.label.c != expected) {
                fail(report, VerificationStatus::label_mismatch,
                     {n, node.perm, node.site, "c=" + std::to_string(expected), "c=" + std::to_string(node.label.c)});
                return false;
            }
        }
    }
    return true;
}

std::vector<LabelledNode> expand(const SuccessionFunction& f, const std::vector<LabelledNode>& level, int length)
{
    std::vector<LabelledNode> next;
    for (const auto& node : level)
        for (int site = 1; site <= node.label.k; ++site)
            next.push_back({insert_at_site(node.perm, site), f.child(length, site, node.label), site});
    return next;
}

}  // namespace

VerificationReport verify_entry(const CatalogEntry& entry, int max_n)
{
    if (max_n < 1 || max_n > kHardOracleMaxN)
        throw std::invalid_argument("max_n must be in 1.." + std::to_string(kHardOracleMaxN) + " (got " +
                                    std::to_string(max_n) + ")");
    VerificationReport report;
    report.entry_id = entry.id;
    if (entry.family) {
        report.p = entry.family->p;
        report.m = entry.family->m;
    }
    report.max_n = max_n;

    // Pass 1: generated levels against the oracle.
    for (int n = 0; n <= max_n; ++n) {
        auto want = oracle_generate(n, entry.patterns);
        report.level_counts.push_back(want.size());

        std::vector<Permutation> got;
        try {
            got = generate_all(n, entry.succession);
        } catch (const std::exception& e) {
            fail(report, VerificationStatus::label_mismatch, {n, Permutation{}, std::nullopt, "complete run", e.what()});
            return report;
        }
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want == got)
            continue;

        std::vector<Permutation> extra, missing;
        std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
        std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
        const auto status =
            got.size() != want.size() ? VerificationStatus::count_mismatch : VerificationStatus::set_mismatch;
        Counterexample cx{n, {}, std::nullopt, "|S_n(P)|=" + std::to_string(want.size()),
                          "generated " + std::to_string(got.size())};
        if (const auto dup = std::adjacent_find(got.begin(), got.end()); dup != got.end()) {
            cx.permutation = *dup;
            cx.actual += ", duplicate";
        } else if (!extra.empty()) {
            cx.permutation = extra.front();
            cx.actual += ", not in class";
        } else if (!missing.empty()) {
            cx.permutation = missing.front();
            cx.actual += ", missing";
        }
        if (!cx.permutation.empty())
            cx.site = static_cast<int>(cx.permutation.size()) - cx.permutation.max_position();
        fail(report, status, std::move(cx));
        return report;
    }

    // Pass 2: labels along the tree.
    std::vector<LabelledNode> level{{Permutation{}, kSeedLabel, std::nullopt}};
    for (int n = 0; n <= max_n; ++n) {
        if (n > 0) {
            try {
                level = expand(entry.succession, level, n - 1);
            } catch (const std::exception& e) {
                fail(report, VerificationStatus::label_mismatch,
                     {n, Permutation{}, std::nullopt, "defined label", e.what()});
                return report;
            }
        }
        if (!check_labels(entry, level, n, report))
            return report;
    }
    return report;
}

SuccessionFunction InferredSuccession::to_function() const
{
    auto table_copy = table;
    const int depth = max_n;
    return SuccessionFunction::regular(
        [table_copy, depth](int i, int k) {
            auto it = table_copy.find({i, k});
            if (it == table_copy.end())
                throw std::domain_error("(i=" + std::to_string(i) + ", k=" + std::to_string(k) +
                                        ") not observed up to n=" + std::to_string(depth));
            return it->second;
        },
        root_child);
}

InferenceResult infer_regular(const PatternSet& patterns, int max_n)
{
    if (max_n < 2 || max_n > kHardOracleMaxN)
        throw std::invalid_argument("max_n must be in 2.." + std::to_string(kHardOracleMaxN) + " (got " +
                                    std::to_string(max_n) + ")");
    const auto rj = is_right_justified(patterns);
    if (!rj.right_justified)
        return NotRightJustified{rj.witness.value_or(Permutation{})};

    InferredSuccession result;
    result.max_n = max_n;
    std::map<std::pair<int, int>, Permutation> witness;

    std::vector<Permutation> level{Permutation{1}};
    if (!patterns.avoided_by(level.front()))
        return NotRegular{"the class has no permutation of length 1", Permutation{}, std::nullopt, 0, 0, 0, 0};
    result.root_child = {static_cast<int>(active_sites_unchecked(level.front(), patterns).size()), 0};

    for (int len = 1; len < max_n; ++len) {
        std::vector<Permutation> next;
        for (const auto& alpha : level) {
            const auto sites = active_sites_unchecked(alpha, patterns);
            const int k = static_cast<int>(sites.size());
            for (int j = 0; j < k; ++j) {
                if (sites[static_cast<std::size_t>(j)] != j + 1)
                    return NotRegular{"active sites of " + to_string(alpha) + " are not 1.." + std::to_string(k),
                                      alpha, std::nullopt, sites[static_cast<std::size_t>(j)], k, 0, 0};
            }
            for (int i = 1; i <= k; ++i) {
                Permutation child = insert_at_site(alpha, i);
                const int child_k = static_cast<int>(active_sites_unchecked(child, patterns).size());
                auto [it, inserted] = result.table.try_emplace({i, k}, child_k);
                if (inserted) {
                    witness.emplace(std::pair{i, k}, alpha);
                } else if (it->second != child_k) {
                    const auto& first = witness.at({i, k});
                    return NotRegular{"site " + std::to_string(i) + " of a node with k=" + std::to_string(k) +
                                          " has children with different k",
                                      first, alpha, i, k, it->second, child_k};
                }
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    return result;
}

std::vector<std::string> compare_with(const InferredSuccession& inferred, const SuccessionFunction& f)
{
    std::vector<std::string> diffs;
    if (inferred.root_child != f.root_child())
        diffs.push_back("root child: observed " + to_string(inferred.root_child) + ", function gives " +
                        to_string(f.root_child()));
    for (const auto& [key, observed] : inferred.table) {
        const auto [i, k] = key;
        std::string got;
        try {
            const Label child = f(i, Label{k, 0});
            if (child.k == observed)
                continue;
            got = std::to_string(child.k);
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
        }
        diffs.push_back("chi(" + std::to_string(i) + "," + std::to_string(k) + "): observed " +
                        std::to_string(observed) + ", function gives " + got);
    }
    return diffs;
}

}  // namespace ecogen
