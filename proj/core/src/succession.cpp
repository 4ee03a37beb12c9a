#include "ecogen/succession.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ecogen/errors.hpp"
#include "ecogen/pattern_set.hpp"

namespace ecogen {

std::string to_string(Label label)
{
    return "(" + std::to_string(label.k) + "," + std::to_string(label.c) + ")";
}

SuccessionFunction::SuccessionFunction(SuccessionKind kind, SuccessionRule rule, std::vector<int> colors,
                                       Label root_child)
    : kind_(kind), rule_(std::move(rule)), colors_(std::move(colors)), root_child_(root_child)
{
    if (!rule_)
        throw std::invalid_argument("succession function without a rule");
    if (kind_ == SuccessionKind::regular)
        colors_ = {0};
    std::sort(colors_.begin(), colors_.end());
    colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
    if (root_child_.k < 1)
        throw std::invalid_argument("root child label must have k >= 1");
}

SuccessionFunction SuccessionFunction::regular(std::function<int(int, int)> chi, Label root_child)
{
    return SuccessionFunction(
        SuccessionKind::regular,
        [chi = std::move(chi)](int site, Label parent) { return Label{chi(site, parent.k), 0}; }, {0},
        root_child);
}

namespace {

void require_site(int i, int k)
{
    if (k < 1 || i < 1 || i > k)
        throw std::domain_error("site " + std::to_string(i) + " outside 1.." + std::to_string(k));
}

void require_binary_color(int c)
{
    if (c != 0 && c != 1)
        throw std::domain_error("color " + std::to_string(c) + " outside {0,1}");
}

}  // namespace

int chi_avoid321_pm(int i, int k, int p, int m)
{
    require_site(i, k);
    if (p < 2 || m < 2)
        throw std::domain_error("p and m must be >= 2");
    if (k > m)
        throw std::domain_error("k = " + std::to_string(k) + " exceeds m = " + std::to_string(m));
    if (i == 1)
        return k < m ? k + 1 : m;
    if (i < p)
        return i;
    return p - 1;
}

Label chi_padovan_family(int i, Label parent, int p)
{
    require_site(i, parent.k);
    require_binary_color(parent.c);
    if (p < 2)
        throw std::domain_error("p must be >= 2");
    const int k = parent.k;
    const bool last_uncolored = (i == k && parent.c == 0);
    const int count = (i == 1 || (last_uncolored && k < p)) ? i + 1 : i;
    const int color = (i == 1 || last_uncolored) ? 0 : 1;
    return {count, color};
}

Label chi_padovan(int i, Label parent)
{
    require_site(i, parent.k);
    require_binary_color(parent.c);
    const int k = parent.k;
    const int count = (i == 1 || (i == 2 && (parent.c == 1 || k == 3))) ? 2 : 3;
    const int color = (i == 1 || (i == k && parent.c == 0)) ? 0 : 1;
    return {count, color};
}

Label chi_bisection_colored(int i, Label parent)
{
    require_site(i, parent.k);
    require_binary_color(parent.c);
    const bool grow = (i == 1 || (i == parent.k && parent.c == 0));
    return {grow ? i + 1 : i, grow ? 0 : 1};
}

bool max_in_231(const Permutation& alpha)
{
    const int at = alpha.max_position();
    if (at < 0)
        return false;
    // Need a < n before the max and c < a after it.
    int smallest_after = alpha.size() + 1;
    for (int pos = at + 1; pos < alpha.size(); ++pos)
        smallest_after = std::min(smallest_after, alpha[static_cast<std::size_t>(pos)]);
    for (int pos = 0; pos < at; ++pos)
        if (alpha[static_cast<std::size_t>(pos)] > smallest_after)
            return true;
    return false;
}

int color_d(const Permutation& alpha, std::optional<int> p)
{
    if (alpha.empty())
        throw PreconditionViolation("color_d is defined for nonempty permutations");
    std::vector<Permutation> forbidden{Permutation{3, 1, 2}, Permutation{2, 4, 3, 1}};
    if (p) {
        if (*p < 2)
            throw std::domain_error("p must be >= 2");
        forbidden.push_back(family_patterns::decreasing(*p));
    }
    if (!avoids_all(alpha, forbidden))
        throw PreconditionViolation("color_d: '" + to_string(alpha) + "' is not in the class");

    if (!max_in_231(alpha))
        return 0;
    if (p && alpha.size() >= *p) {
        const auto entries = alpha.entries();
        const auto suffix = entries.subspan(entries.size() - static_cast<std::size_t>(*p));
        if (std::adjacent_find(suffix.begin(), suffix.end(), std::less<>{}) == suffix.end())
            return 0;
    }
    return 1;
}

LabelGraph reachable_labels(const SuccessionFunction& f, int max_depth)
{
    LabelGraph graph;
    std::set<Label> seen{kSeedLabel};
    std::set<Label> expanded;
    const auto& colors = f.colors();

    auto admit = [&](Label parent, int site, Label child, int depth, std::vector<Label>& next) {
        graph.transitions.push_back({site, parent, child});
        if (child.k < 1)
            graph.issues.push_back("dead end: site " + std::to_string(site) + " of " + to_string(parent) +
                                   " gives " + to_string(child));
        if (!std::binary_search(colors.begin(), colors.end(), child.c))
            graph.issues.push_back("color " + std::to_string(child.c) + " outside the color set (site " +
                                   std::to_string(site) + " of " + to_string(parent) + ")");
        if (child.k > depth + 1)
            graph.issues.push_back("label " + to_string(child) + " at length " + std::to_string(depth) +
                                   " exceeds the " + std::to_string(depth + 1) + " available sites");
        seen.insert(child);
        if (!expanded.contains(child) && std::find(next.begin(), next.end(), child) == next.end())
            next.push_back(child);
    };

    std::vector<Label> frontier;
    admit(kSeedLabel, 1, f.root_child(), 1, frontier);
    int depth = 1;
    while (!frontier.empty() && depth < max_depth) {
        std::vector<Label> next;
        for (Label parent : frontier) {
            if (!expanded.insert(parent).second || parent.k < 1)
                continue;
            for (int site = 1; site <= parent.k; ++site) {
                try {
                    admit(parent, site, f(site, parent), depth + 1, next);
                } catch (const std::exception& e) {
                    graph.issues.push_back("undefined at site " + std::to_string(site) + " of " +
                                           to_string(parent) + ": " + e.what());
                }
            }
        }
        frontier.clear();
        for (Label l : next)
            if (!expanded.contains(l))
                frontier.push_back(l);
        ++depth;
    }
    graph.closed = frontier.empty();
    graph.depth = depth;
    graph.labels.assign(seen.begin(), seen.end());
    std::sort(graph.issues.begin(), graph.issues.end());
    graph.issues.erase(std::unique(graph.issues.begin(), graph.issues.end()), graph.issues.end());
    return graph;
}

}  // namespace ecogen
