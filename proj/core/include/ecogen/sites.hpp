#pragma once

// Sites are the n + 1 gaps of a length-n permutation, numbered from the right:
// site 1 follows the last entry, site n + 1 precedes the first. The empty
// permutation has exactly one site.

#include <vector>

#include "ecogen/errors.hpp"
#include "ecogen/pattern_set.hpp"
#include "ecogen/permutation.hpp"

namespace ecogen {

/// alpha with n + 1 inserted into `site`; the new maximum lands at 1-based
/// position n + 2 - site. Throws std::out_of_range unless 1 <= site <= n + 1.
Permutation insert_at_site(const Permutation& alpha, int site);

/// Sites whose insertion keeps alpha avoiding `patterns`, ascending.
/// Throws PreconditionViolation if alpha itself does not avoid `patterns`.
std::vector<int> active_sites(const Permutation& alpha, const PatternSet& patterns);

/// Same as active_sites without the precondition check.
std::vector<int> active_sites_unchecked(const Permutation& alpha, const PatternSet& patterns);

}  // namespace ecogen
