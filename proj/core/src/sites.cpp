#include "ecogen/sites.hpp"

#include <stdexcept>
#include <string>

namespace ecogen {

Permutation insert_at_site(const Permutation& alpha, int site)
{
    const int n = alpha.size();
    if (site < 1 || site > n + 1)
        throw std::out_of_range("site " + std::to_string(site) + " outside 1.." + std::to_string(n + 1));
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    const int before = n + 1 - site;  // entries left of the new maximum
    out.insert(out.end(), alpha.begin(), alpha.begin() + before);
    out.push_back(n + 1);
    out.insert(out.end(), alpha.begin() + before, alpha.end());
    return Permutation(std::move(out));
}

std::vector<int> active_sites_unchecked(const Permutation& alpha, const PatternSet& patterns)
{
    const int n = alpha.size();
    std::vector<int> buffer(static_cast<std::size_t>(n + 1));
    std::vector<int> sites;
    for (int site = 1; site <= n + 1; ++site) {
        const int before = n + 1 - site;
        for (int pos = 0, src = 0; pos <= n; ++pos)
            buffer[static_cast<std::size_t>(pos)] = (pos == before) ? n + 1 : alpha[static_cast<std::size_t>(src++)];
        if (patterns.avoided_by(buffer))
            sites.push_back(site);
    }
    return sites;
}

std::vector<int> active_sites(const Permutation& alpha, const PatternSet& patterns)
{
    if (!patterns.avoided_by(alpha))
        throw PreconditionViolation("active_sites: '" + to_string(alpha) + "' does not avoid {" +
                                    to_string(patterns) + "}");
    return active_sites_unchecked(alpha, patterns);
}

}  // namespace ecogen
