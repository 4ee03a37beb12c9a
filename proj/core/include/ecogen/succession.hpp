#pragma once

/**
 * @file succession.hpp
 * @brief Succession functions of generating trees for pattern classes.
 *
 * Every node of the generating tree of S(P) carries a label (k, c): k is its
 * number of active sites and c an auxiliary color. A succession function maps
 * (site i, parent label) with 1 <= i <= k to the label of the child obtained by
 * inserting the next maximum at site i. Regular functions ignore the color
 * (it stays 0); colored functions update it.
 *
 * The root is the empty permutation with label (1, 0). Its single child is the
 * permutation 1, whose label is stored separately as `root_child`: ECO rules
 * are usually stated for nonempty objects, and several printed rules are only
 * valid from the axiom "1" onward.
 */

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ecogen/permutation.hpp"

namespace ecogen {

struct Label {
    int k = 1;  // active sites
    int c = 0;  // color

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;
};

inline constexpr Label kSeedLabel{1, 0};

/// "(k,c)"
std::string to_string(Label label);

enum class SuccessionKind { regular, colored };

using SuccessionRule = std::function<Label(int site, Label parent)>;

class SuccessionFunction {
public:
    SuccessionFunction(SuccessionKind kind, SuccessionRule rule, std::vector<int> colors,
                       Label root_child = Label{2, 0});

    /// Regular function from a map (i, k) -> k'.
    static SuccessionFunction regular(std::function<int(int site, int k)> chi, Label root_child = Label{2, 0});

    SuccessionKind kind() const noexcept { return kind_; }
    bool is_regular() const noexcept { return kind_ == SuccessionKind::regular; }
    const std::vector<int>& colors() const noexcept { return colors_; }
    Label root_child() const noexcept { return root_child_; }

    /// Label of the child at `site` of a node labelled `parent`; regular
    /// functions always return color 0.
    Label operator()(int site, Label parent) const
    {
        Label out = rule_(site, parent);
        if (kind_ == SuccessionKind::regular)
            out.c = 0;
        return out;
    }

    /// As operator(), but the child of the empty permutation gets `root_child`.
    Label child(int parent_length, int site, Label parent) const
    {
        return parent_length == 0 ? root_child_ : (*this)(site, parent);
    }

private:
    SuccessionKind kind_;
    SuccessionRule rule_;
    std::vector<int> colors_;
    Label root_child_;
};

// Closed forms. All throw std::domain_error outside their stated domain.

/// {321, p(p+1)12...(p-1), (m+1)12...m}, p, m >= 2, 1 <= i <= k <= m.
int chi_avoid321_pm(int i, int k, int p, int m);

/// {312, 2431, (p+1)p...21}, p >= 2, colors {0, 1}.
Label chi_padovan_family(int i, Label parent, int p);

/// {312, 2431, 4321}; coincides with chi_padovan_family at p = 3 on reachable labels.
Label chi_padovan(int i, Label parent);

/// {312, 2431}, colors {0, 1}.
Label chi_bisection_colored(int i, Label parent);

/// Color of a {312, 2431, (p+1)p...21}-avoider alpha of length n >= 1:
/// 0 iff n is not the '3' of any 231 occurrence, or the length-p suffix of
/// alpha is decreasing. With p = nullopt the suffix clause is dropped, which
/// gives the coloring of the p -> infinity case {312, 2431}.
/// Throws PreconditionViolation if alpha is empty or not an avoider.
int color_d(const Permutation& alpha, std::optional<int> p);

/// True when n plays the role of 3 in some occurrence of 231 in alpha.
bool max_in_231(const Permutation& alpha);

struct LabelTransition {
    int site;
    Label parent;
    Label child;
};

/// Labels reachable from the seed, explored breadth first for at most
/// `max_depth` levels.
struct LabelGraph {
    std::vector<Label> labels;                 // sorted, unique
    std::vector<LabelTransition> transitions;  // one per (parent label, site)
    bool closed = false;                       // no new labels appeared before the depth cap
    int depth = 0;
    std::vector<std::string> issues;           // dead ends, colors outside the color set, overfull labels
};

LabelGraph reachable_labels(const SuccessionFunction& f, int max_depth = 16);

}  // namespace ecogen
