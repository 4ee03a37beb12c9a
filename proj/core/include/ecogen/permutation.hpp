#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations in one-line notation and classical pattern containment.
 *
 * Values are 1-based: a permutation of length n holds each of 1..n exactly
 * once. The empty permutation (n = 0) is a valid value and occurs in every
 * permutation.
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecogen {

class Permutation {
public:
    Permutation() = default;
    Permutation(std::initializer_list<int> entries);
    explicit Permutation(std::vector<int> entries);

    /// Copies a buffer that is already known to hold a permutation of 1..n.
    static Permutation from_span(std::span<const int> entries);
    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Value at 0-based position `pos`.
    int operator[](std::size_t pos) const { return entries_[pos]; }

    std::span<const int> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// 0-based position of the maximum entry n, or -1 for the empty permutation.
    int max_position() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

bool is_permutation_of_1n(std::span<const int> entries) noexcept;

/// Space separated, e.g. "4 6 1 5 3 2". The empty permutation prints as "".
std::string to_string(const Permutation& perm);

/// Accepts "4 6 1 5 3 2", "4,6,1,5,3,2" and, for n <= 9, the compact "461532".
/// Throws std::invalid_argument on malformed text or a non-permutation.
Permutation parse_permutation(std::string_view text);

Permutation reverse(const Permutation& perm);
Permutation complement(const Permutation& perm);

/// Order-isomorphic reduction of distinct integers onto 1..size.
Permutation standardize(std::span<const int> values);

/// Deletes the maximum entry, keeping the relative order of the others.
Permutation remove_max(const Permutation& perm);

/// Precomputed matcher for one pattern.
///
/// Backtracks over pattern positions, choosing host positions left to right.
/// A candidate host value is rejected as soon as it breaks the relative order
/// with the already chosen prefix; only the nearest smaller and nearest larger
/// earlier pattern values need to be compared, since the prefix is already
/// order-isomorphic to the pattern prefix.
class PatternMatcher {
public:
    explicit PatternMatcher(const Permutation& pattern);

    bool occurs_in(std::span<const int> host) const;
    const Permutation& pattern() const noexcept { return pattern_; }

private:
    bool extend(std::span<const int> host, int depth, int start, std::span<int> chosen) const;

    Permutation pattern_;
    std::vector<int> below_;  // earlier position with the nearest smaller value, or -1
    std::vector<int> above_;  // earlier position with the nearest larger value, or -1
};

bool contains(std::span<const int> host, const Permutation& pattern);
bool contains(const Permutation& host, const Permutation& pattern);

/// True iff no pattern in `patterns` occurs in `host`.
bool avoids_all(std::span<const int> host, std::span<const Permutation> patterns);
bool avoids_all(const Permutation& host, std::span<const Permutation> patterns);

}  // namespace ecogen
