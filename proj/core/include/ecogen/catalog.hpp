#pragma once

/**
 * @file catalog.hpp
 * @brief Known regular and colored-regular pattern classes with their
 *        succession functions.
 *
 * Rules are transcribed as printed in the literature. Where a printed rule
 * disagrees with brute force the entry is kept as printed and the
 * disagreement is left for verify_entry to report (see docs/catalog.md).
 */

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecogen/pattern_set.hpp"
#include "ecogen/succession.hpp"

namespace ecogen {

struct SequenceInfo {
    std::string oeis;  // e.g. "A000129", empty when none is known
    std::string name;
};

enum class CatalogTable { regular, colored };

/// Reference coloring of the class, used to check the colors a succession
/// function assigns along the tree.
using ColorOracle = std::function<int(const Permutation&)>;

struct CatalogEntry {
    std::string id;
    CatalogTable table = CatalogTable::regular;
    PatternSet patterns;
    std::optional<FamilyDescriptor> family;
    SuccessionFunction succession;
    std::optional<SequenceInfo> sequence;
    std::string rule_text;  // the succession function as printed
    std::string note;
    ColorOracle color_oracle;
    LabelGraph label_graph;
};

/// Static description of an entry, before parameters are bound.
struct CatalogSpec {
    std::string id;
    CatalogTable table;
    std::string family_id;  // empty for concrete sets
    std::string notation;
    std::string rule_text;
    SequenceInfo sequence;
    std::string note;
};

const std::vector<CatalogSpec>& catalog_specs();
const CatalogSpec& catalog_spec(std::string_view id);

inline constexpr int kDefaultP = 3;
inline constexpr int kDefaultM = 3;

/// Builds one entry. Parameterized entries use p (and m) when given, otherwise
/// kDefaultP / kDefaultM. Throws std::invalid_argument for unknown ids and
/// std::out_of_range for parameters outside the family bounds.
CatalogEntry make_entry(std::string_view id, std::optional<int> p = std::nullopt,
                        std::optional<int> m = std::nullopt);

/// Every entry, parameterized ones instantiated at (p, m).
std::vector<CatalogEntry> catalog(int p = kDefaultP, int m = kDefaultM);

/// Every entry for every admissible parameter combination in
/// [lo, hi] x [lo, hi]; concrete entries appear once.
std::vector<CatalogEntry> catalog_sweep(int lo, int hi);

/// Entry whose pattern set equals `patterns`, if any (first match).
std::optional<CatalogEntry> find_entry_for(const PatternSet& patterns, int max_param = 6);

/// Display name including parameters, e.g. "avoid321-pm[p=3,m=4]".
std::string display_id(const CatalogEntry& entry);

/// True for a pattern of length k >= 2 ending in k, k-1; such patterns fall
/// outside the constant amortized time guarantee.
bool has_cat_excluded_shape(const Permutation& tau);
std::optional<Permutation> cat_excluded_pattern(const PatternSet& patterns);

}  // namespace ecogen
