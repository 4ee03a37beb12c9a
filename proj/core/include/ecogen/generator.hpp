#pragma once

/**
 * @file generator.hpp
 * @brief Exhaustive generation of S_n(P) driven by a succession function.
 *
 * The current permutation lives in a single buffer of capacity n. Going one
 * level down appends the next maximum (site 1); each further site is reached
 * by one adjacent transposition moving the maximum one step left, and the
 * same transpositions are undone in reverse before returning. With a
 * succession function computable in O(1) and no dead ends, the work per call
 * is proportional to its number of children, which gives constant amortized
 * time per permutation.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "ecogen/catalog.hpp"
#include "ecogen/permutation.hpp"
#include "ecogen/succession.hpp"

namespace ecogen {

struct GenerationCounters {
    std::uint64_t recursive_calls = 0;  // calls below the initial one
    std::uint64_t transpositions = 0;
    std::uint64_t emitted = 0;
};

struct GenerationOptions {
    /// Snapshot the buffer around every call and throw std::logic_error if
    /// the unwind loop does not restore it. Test builds only; O(n) per call.
    bool audit_restoration = false;
};

/// Visitor signature: void(std::span<const int>). The span is valid only
/// during the call.
template <class Visitor>
class GenerationRun {
public:
    GenerationRun(int n, const SuccessionFunction& succession, Visitor& visit, GenerationOptions options = {})
        : n_(n), succession_(succession), visit_(visit), options_(options),
          buffer_(static_cast<std::size_t>(n > 0 ? n : 0))
    {
        if (n < 0)
            throw std::invalid_argument("n must be >= 0");
    }

    GenerationCounters run()
    {
        counters_ = {};
        if (succession_.is_regular())
            regular(0, kSeedLabel.k);
        else
            colored(0, kSeedLabel);
        return counters_;
    }

private:
    // Moves the maximum at 1-based position length-site+2 one step left.
    void transpose(int length, int site)
    {
        std::swap(buffer_[static_cast<std::size_t>(length - site + 1)],
                  buffer_[static_cast<std::size_t>(length - site)]);
        ++counters_.transpositions;
    }

    void emit()
    {
        ++counters_.emitted;
        visit_(std::span<const int>(buffer_.data(), buffer_.size()));
    }

    void check_capacity(int length, int k) const
    {
        if (k < 1 || k > length + 1)
            throw std::logic_error("label k=" + std::to_string(k) + " does not fit a permutation of length " +
                                   std::to_string(length));
    }

    std::vector<int> snapshot(int length) const
    {
        return {buffer_.begin(), buffer_.begin() + length};
    }

    void verify_snapshot(const std::vector<int>& before, int length) const
    {
        if (!std::equal(before.begin(), before.end(), buffer_.begin(), buffer_.begin() + length))
            throw std::logic_error("buffer not restored after expanding a node of length " + std::to_string(length));
    }

    // Regular rule: Gen_Avoid(length, k).
    void regular(int length, int k)
    {
        if (length == n_) {
            emit();
            return;
        }
        check_capacity(length, k);
        std::vector<int> before;
        if (options_.audit_restoration)
            before = snapshot(length);

        const int parent_length = length;
        ++length;
        buffer_[static_cast<std::size_t>(length - 1)] = length;
        ++counters_.recursive_calls;
        regular(length, succession_.child(parent_length, 1, Label{k, 0}).k);
        for (int site = 2; site <= k; ++site) {
            transpose(length, site);
            ++counters_.recursive_calls;
            regular(length, succession_(site, Label{k, 0}).k);
        }
        for (int site = k; site >= 2; --site)
            transpose(length, site);

        if (options_.audit_restoration)
            verify_snapshot(before, parent_length);
    }

    // Colored rule: Gen_Avoid(length, k, c).
    void colored(int length, Label label)
    {
        if (length == n_) {
            emit();
            return;
        }
        check_capacity(length, label.k);
        std::vector<int> before;
        if (options_.audit_restoration)
            before = snapshot(length);

        const int parent_length = length;
        ++length;
        buffer_[static_cast<std::size_t>(length - 1)] = length;
        ++counters_.recursive_calls;
        colored(length, succession_.child(parent_length, 1, label));
        for (int site = 2; site <= label.k; ++site) {
            transpose(length, site);
            ++counters_.recursive_calls;
            colored(length, succession_(site, label));
        }
        for (int site = label.k; site >= 2; --site)
            transpose(length, site);

        if (options_.audit_restoration)
            verify_snapshot(before, parent_length);
    }

    int n_;
    const SuccessionFunction& succession_;
    Visitor& visit_;
    GenerationOptions options_;
    std::vector<int> buffer_;
    GenerationCounters counters_;
};

/// Calls `visit` once per element of S_n(P), in generating-tree order: a
/// permutation precedes another when its parent (maximum removed) does, or,
/// for equal parents, when its maximum sits in a lower site.
template <class Visitor>
GenerationCounters generate(int n, const SuccessionFunction& succession, Visitor&& visit,
                            GenerationOptions options = {})
{
    GenerationRun<std::remove_reference_t<Visitor>> run(n, succession, visit, options);
    return run.run();
}

template <class Visitor>
GenerationCounters generate(int n, const CatalogEntry& entry, Visitor&& visit, GenerationOptions options = {})
{
    return generate(n, entry.succession, std::forward<Visitor>(visit), options);
}

/// Collects the whole level; for tests and small n.
std::vector<Permutation> generate_all(int n, const SuccessionFunction& succession);
std::vector<Permutation> generate_all(int n, const CatalogEntry& entry);

enum class Transform { none, reverse, complement };

std::optional<Transform> parse_transform(std::string_view name);

/// Writes the reversed or complemented permutation into `out` (same length).
void apply_transform(Transform t, std::span<const int> in, std::span<int> out);

/// Emits transform(pi) for every pi that `generate` emits; the result is
/// S_n(P^r) or S_n(P^c) respectively.
template <class Visitor>
GenerationCounters generate_transformed(int n, const CatalogEntry& entry, Transform transform, Visitor&& visit)
{
    if (transform == Transform::none)
        return generate(n, entry, std::forward<Visitor>(visit));
    std::vector<int> scratch(static_cast<std::size_t>(n > 0 ? n : 0));
    auto wrapped = [&](std::span<const int> perm) {
        apply_transform(transform, perm, scratch);
        visit(std::span<const int>(scratch.data(), scratch.size()));
    };
    return generate(n, entry, wrapped);
}

/// Exact |S_n(P)| from the label multiset recurrence. Throws
/// std::overflow_error if the count exceeds 64 bits.
std::uint64_t count(int n, const SuccessionFunction& succession);
std::uint64_t count(int n, const CatalogEntry& entry);

/// Counts for every level 0..n.
std::vector<std::uint64_t> count_levels(int n, const SuccessionFunction& succession);

struct GenTreeNode {
    Permutation perm;
    Label label;
    std::vector<GenTreeNode> children;
};

inline constexpr int kDefaultTreeDepthCap = 6;

/// Materializes the labelled generating tree down to `depth`.
/// Throws std::length_error when depth exceeds `depth_cap`.
GenTreeNode generate_tree(int depth, const SuccessionFunction& succession, int depth_cap = kDefaultTreeDepthCap);

std::size_t tree_size(const GenTreeNode& root);

/// Indented text, one node per line: "<perm> (k,c)", the root printed as "ε".
std::string format_tree(const GenTreeNode& root);

struct CatReport {
    std::string entry;
    int n = 0;
    GenerationCounters counters;
    double seconds = 0.0;
    bool empty = true;
    double calls_per_emitted = 0.0;
    double transpositions_per_emitted = 0.0;
    double ns_per_emitted = 0.0;
    /// Pattern of the form tau(1)...tau(k-2) k (k-1), when present.
    std::optional<Permutation> excluded_pattern;
};

/// Derives the per-permutation ratios; a run with nothing emitted is marked empty.
CatReport cat_metrics(const GenerationCounters& counters, double seconds);

/// Runs the generator with a sink visitor, timing the whole run with a
/// monotonic clock. `repetitions` runs are made and the fastest is reported.
CatReport measure(const CatalogEntry& entry, int n, int repetitions = 1);

}  // namespace ecogen
