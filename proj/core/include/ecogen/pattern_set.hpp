#pragma once

/**
 * @file pattern_set.hpp
 * @brief Sets of forbidden patterns, the max-shift operators and the
 *        right-justified decision procedure.
 *
 * A set P is right-justified when moving the maximum of any P-avoider one
 * position to the right keeps it P-avoiding. This holds exactly when, for
 * every pattern tau in P whose maximum is not in front, the shifted pattern
 * tau^<- (maximum moved one position left) itself contains some pattern of P.
 */

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecogen/permutation.hpp"

namespace ecogen {

/// Identifies one of the parameterized pattern families.
struct FamilyDescriptor {
    std::string family_id;
    std::optional<int> p;
    std::optional<int> m;

    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

class PatternSet {
public:
    PatternSet() = default;
    PatternSet(std::initializer_list<Permutation> patterns);
    explicit PatternSet(std::vector<Permutation> patterns, std::optional<FamilyDescriptor> origin = {});

    std::span<const Permutation> patterns() const noexcept { return patterns_; }
    const std::optional<FamilyDescriptor>& origin() const noexcept { return origin_; }

    std::size_t size() const noexcept { return patterns_.size(); }
    bool empty() const noexcept { return patterns_.empty(); }
    bool has(const Permutation& pattern) const;

    bool avoided_by(std::span<const int> host) const;
    bool avoided_by(const Permutation& host) const { return avoided_by(host.entries()); }

    /// Set equality, ignoring insertion order and origin.
    bool same_patterns(const PatternSet& other) const;

    /// Patterns sorted by (length, lexicographic).
    std::vector<Permutation> sorted() const;

private:
    std::vector<Permutation> patterns_;
    std::vector<PatternMatcher> matchers_;
    std::optional<FamilyDescriptor> origin_;
};

bool avoids_all(const Permutation& host, const PatternSet& patterns);

/// "312, 2431, 4321"; multi-digit entries fall back to "(1 2 10 ...)".
std::string to_string(const PatternSet& set);

/// Patterns are separated by ';'. Inside a pattern, entries are comma or space
/// separated; a pattern without separators is read as compact single digits.
/// Throws std::invalid_argument on malformed input.
PatternSet parse_pattern_set(std::string_view text);

/// tau^<-: the maximum moved one position to the left; nullopt when it is already first.
std::optional<Permutation> shift_max_left(const Permutation& tau);
/// tau^->: the maximum moved one position to the right; nullopt when it is already last.
std::optional<Permutation> shift_max_right(const Permutation& tau);

struct RightJustifiedVerdict {
    bool right_justified = true;
    /// A pattern whose left shift avoids every pattern of the set.
    std::optional<Permutation> witness;
};

/// Uses the equal-length shortcut (tau^<- must itself be in P) when every
/// pattern has the same length, otherwise the general containment test.
RightJustifiedVerdict is_right_justified(const PatternSet& set);
/// Always the general test: tau^<- must contain some pattern of P.
RightJustifiedVerdict is_right_justified_general(const PatternSet& set);

PatternSet reverse_set(const PatternSet& set);
PatternSet complement_set(const PatternSet& set);

/// Building blocks of the variable-length families; each has length p + 1.
namespace family_patterns {
Permutation top_then_increasing(int p);    // (p+1) 1 2 ... p
Permutation pair_then_increasing(int p);   // p (p+1) 1 2 ... (p-1)
Permutation decreasing(int p);             // (p+1) p ... 2 1
Permutation increasing_then_one(int p);    // 2 3 ... (p+1) 1
Permutation increasing_then_one_two(int p);  // 3 4 ... (p+1) 1 2
}  // namespace family_patterns

struct FamilyInfo {
    std::string id;
    std::string notation;   // human-readable set, e.g. "{321, (p+1)12...p}"
    bool uses_p = false;
    bool uses_m = false;
    int min_p = 2;
    int min_m = 2;
};

const std::vector<FamilyInfo>& families();
const FamilyInfo& family_info(std::string_view family_id);

/// Expands a family with its parameters; duplicates arising at small
/// parameters are dropped. Throws std::out_of_range naming the violated bound,
/// std::invalid_argument for unknown families or missing parameters.
PatternSet instantiate_family(const FamilyDescriptor& desc);

}  // namespace ecogen
