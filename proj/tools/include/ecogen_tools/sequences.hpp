#pragma once

// Reference counting sequences. Every term is computed from a recurrence or
// from the brute-force oracle when requested; nothing is stored by hand.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecogen/catalog.hpp"
#include "ecogen/pattern_set.hpp"

namespace ecogen::tools {

struct SequenceRef {
    std::string oeis_id;
    std::string name;
    std::string provenance;             // how `values` were computed
    std::vector<std::uint64_t> values;  // values[j] = |S_{j+1}(P)|
};

SequenceRef powers_of_two(int terms);
SequenceRef pell(int terms);
SequenceRef fibonacci(int terms);
SequenceRef generalized_fibonacci(int p, int terms);
SequenceRef catalan(int terms);
SequenceRef large_schroeder(int terms);
SequenceRef fibonacci_bisection(int terms);

/// Terms |S_1(P)|, ..., |S_terms(P)| from the level-insertion oracle.
SequenceRef from_oracle(std::string oeis_id, std::string name, const PatternSet& patterns, int terms);

SequenceRef padovan_binomial_transform(int terms);  // oracle on {312, 2431, 4321}
SequenceRef central_binomial(int terms);            // oracle on {2134, 2143, 2413, 4213}

/// Reference sequence for a catalog entry, when one is known.
std::optional<SequenceRef> reference_for(const CatalogEntry& entry, int terms);

}  // namespace ecogen::tools
