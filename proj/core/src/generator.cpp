#include "ecogen/generator.hpp"

#include <chrono>
#include <limits>
#include <map>

namespace ecogen {

std::vector<Permutation> generate_all(int n, const SuccessionFunction& succession)
{
    std::vector<Permutation> out;
    generate(n, succession, [&](std::span<const int> perm) { out.push_back(Permutation::from_span(perm)); });
    return out;
}

std::vector<Permutation> generate_all(int n, const CatalogEntry& entry)
{
    return generate_all(n, entry.succession);
}

std::optional<Transform> parse_transform(std::string_view name)
{
    if (name == "none")
        return Transform::none;
    if (name == "reverse")
        return Transform::reverse;
    if (name == "complement")
        return Transform::complement;
    return std::nullopt;
}

void apply_transform(Transform t, std::span<const int> in, std::span<int> out)
{
    const auto n = in.size();
    switch (t) {
    case Transform::none:
        std::copy(in.begin(), in.end(), out.begin());
        break;
    case Transform::reverse:
        std::reverse_copy(in.begin(), in.end(), out.begin());
        break;
    case Transform::complement:
        for (std::size_t pos = 0; pos < n; ++pos)
            out[pos] = static_cast<int>(n) + 1 - in[pos];
        break;
    }
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw std::overflow_error("count exceeds 64-bit range");
    return a + b;
}

}  // namespace

std::vector<std::uint64_t> count_levels(int n, const SuccessionFunction& succession)
{
    if (n < 0)
        throw std::invalid_argument("n must be >= 0");
    std::vector<std::uint64_t> totals{1};
    std::map<Label, std::uint64_t> level{{kSeedLabel, 1}};
    for (int length = 0; length < n; ++length) {
        std::map<Label, std::uint64_t> next;
        for (const auto& [label, weight] : level) {
            for (int site = 1; site <= label.k; ++site) {
                const Label child = succession.child(length, site, label);
                auto& slot = next[child];
                slot = checked_add(slot, weight);
            }
        }
        level = std::move(next);
        std::uint64_t total = 0;
        for (const auto& [label, weight] : level)
            total = checked_add(total, weight);
        totals.push_back(total);
    }
    return totals;
}

std::uint64_t count(int n, const SuccessionFunction& succession)
{
    return count_levels(n, succession).back();
}

std::uint64_t count(int n, const CatalogEntry& entry)
{
    return count(n, entry.succession);
}

namespace {

void grow(GenTreeNode& node, int remaining, const SuccessionFunction& f)
{
    if (remaining == 0)
        return;
    const int length = node.perm.size();
    if (node.label.k > length + 1)
        throw std::logic_error("label " + to_string(node.label) + " does not fit '" + to_string(node.perm) + "'");
    for (int site = 1; site <= node.label.k; ++site) {
        std::vector<int> entries(node.perm.begin(), node.perm.end());
        entries.insert(entries.begin() + (length + 1 - site), length + 1);
        GenTreeNode child{Permutation(std::move(entries)), f.child(length, site, node.label), {}};
        grow(child, remaining - 1, f);
        node.children.push_back(std::move(child));
    }
}

void format_node(const GenTreeNode& node, int depth, std::string& out)
{
    out.append(static_cast<std::size_t>(2 * depth), ' ');
    out += node.perm.empty() ? std::string("ε") : to_string(node.perm);
    out += ' ';
    out += to_string(node.label);
    out += '\n';
    for (const auto& child : node.children)
        format_node(child, depth + 1, out);
}

}  // namespace

GenTreeNode generate_tree(int depth, const SuccessionFunction& succession, int depth_cap)
{
    if (depth < 0)
        throw std::invalid_argument("depth must be >= 0");
    if (depth > depth_cap)
        throw std::length_error("tree depth " + std::to_string(depth) + " exceeds the cap of " +
                                std::to_string(depth_cap));
    GenTreeNode root{Permutation{}, kSeedLabel, {}};
    grow(root, depth, succession);
    return root;
}

std::size_t tree_size(const GenTreeNode& root)
{
    std::size_t total = 1;
    for (const auto& child : root.children)
        total += tree_size(child);
    return total;
}

std::string format_tree(const GenTreeNode& root)
{
    std::string out;
    format_node(root, 0, out);
    return out;
}

CatReport cat_metrics(const GenerationCounters& counters, double seconds)
{
    CatReport report;
    report.counters = counters;
    report.seconds = seconds;
    report.empty = counters.emitted == 0;
    if (!report.empty) {
        const auto emitted = static_cast<double>(counters.emitted);
        report.calls_per_emitted = static_cast<double>(counters.recursive_calls) / emitted;
        report.transpositions_per_emitted = static_cast<double>(counters.transpositions) / emitted;
        report.ns_per_emitted = seconds * 1e9 / emitted;
    }
    return report;
}

CatReport measure(const CatalogEntry& entry, int n, int repetitions)
{
    GenerationCounters counters;
    double best = std::numeric_limits<double>::infinity();
    std::uint64_t sink = 0;
    for (int rep = 0; rep < std::max(1, repetitions); ++rep) {
        const auto start = std::chrono::steady_clock::now();
        counters = generate(n, entry, [&](std::span<const int> perm) { sink += perm.empty() ? 1u : perm[0]; });
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    // Keeps the sink observable so the visitor is not optimized away.
    volatile std::uint64_t keep = sink;
    (void)keep;

    auto report = cat_metrics(counters, best);
    report.entry = display_id(entry);
    report.n = n;
    report.excluded_pattern = cat_excluded_pattern(entry.patterns);
    return report;
}

}  // namespace ecogen
