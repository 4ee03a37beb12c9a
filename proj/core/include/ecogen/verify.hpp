#pragma once

/**
 * @file verify.hpp
 * @brief Brute-force oracles and checks of succession functions against them.
 *
 * Two oracles are provided and cross-checked in the tests: level-by-level
 * insertion of the next maximum (sound because S(P) is closed under deleting
 * the maximum) and direct filtering of all n! permutations.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ecogen/catalog.hpp"
#include "ecogen/pattern_set.hpp"
#include "ecogen/permutation.hpp"
#include "ecogen/succession.hpp"

namespace ecogen {

inline constexpr int kDefaultOracleMaxN = 7;
inline constexpr int kHardOracleMaxN = 10;

/// S_n(P) by inserting the next maximum at every active site of every
/// member of S_{n-1}(P). Members appear in generating-tree order.
std::vector<Permutation> oracle_generate(int n, const PatternSet& patterns);

/// S_n(P) by filtering all n! permutations, in lexicographic order.
std::vector<Permutation> oracle_filter(int n, const PatternSet& patterns);

struct OracleNode {
    Permutation perm;
    int active_sites = 0;
    std::optional<int> color;  // set when a color oracle was supplied
};

struct OracleTree {
    std::vector<std::vector<OracleNode>> levels;  // levels[n] = S_n(P)
};

OracleTree oracle_tree(int max_n, const PatternSet& patterns, const ColorOracle& color = {});

enum class VerificationStatus { pass, count_mismatch, set_mismatch, label_mismatch };

std::string to_string(VerificationStatus status);

struct Counterexample {
    int n = 0;
    Permutation permutation;
    std::optional<int> site;  // site of the last insertion, when relevant
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string entry_id;
    std::optional<int> p;
    std::optional<int> m;
    int max_n = 0;
    VerificationStatus status = VerificationStatus::pass;
    std::optional<Counterexample> counterexample;
    std::vector<std::uint64_t> level_counts;  // oracle |S_n(P)|, n = 0..max_n

    bool passed() const noexcept { return status == VerificationStatus::pass; }
};

/// Compares generate() with the oracle for n = 0..max_n, then walks the
/// labelled tree checking every node's k against its oracle active-site count
/// and, when the entry has a color oracle, its color. The first failure (by
/// level) is reported. Throws std::invalid_argument unless 1 <= max_n <= 10.
VerificationReport verify_entry(const CatalogEntry& entry, int max_n);

/// Observed regular succession table. Valid only up to the depth it was
/// inferred from.
struct InferredSuccession {
    std::map<std::pair<int, int>, int> table;  // (i, k) -> k'
    Label root_child{2, 0};
    int max_n = 0;

    /// A regular function that throws std::domain_error outside the table.
    SuccessionFunction to_function() const;
};

struct NotRightJustified {
    Permutation witness;
};

struct NotRegular {
    std::string reason;
    Permutation first;
    std::optional<Permutation> second;
    int site = 0;
    int k = 0;
    int first_k = 0;   // k' observed for `first`
    int second_k = 0;  // k' observed for `second`
};

using InferenceResult = std::variant<InferredSuccession, NotRightJustified, NotRegular>;

/// Empirical regularity test over all tree nodes of length < max_n.
/// Throws std::invalid_argument unless 2 <= max_n <= 10.
InferenceResult infer_regular(const PatternSet& patterns, int max_n);

/// Differences between an inferred table and a succession function on the
/// observed (i, k) pairs, plus the root child; empty when they agree.
std::vector<std::string> compare_with(const InferredSuccession& inferred, const SuccessionFunction& f);

}  // namespace ecogen
