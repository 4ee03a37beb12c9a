#include "ecogen/permutation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ecogen {

namespace {

void require_permutation(std::span<const int> entries)
{
    if (!is_permutation_of_1n(entries))
        throw std::invalid_argument("entries are not a permutation of 1..n");
}

}  // namespace

Permutation::Permutation(std::initializer_list<int> entries) : entries_(entries)
{
    require_permutation(entries_);
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries))
{
    require_permutation(entries_);
}

Permutation Permutation::from_span(std::span<const int> entries)
{
    return Permutation(std::vector<int>(entries.begin(), entries.end()));
}

Permutation Permutation::identity(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative permutation length");
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    return Permutation(std::move(entries));
}

int Permutation::max_position() const noexcept
{
    if (entries_.empty())
        return -1;
    auto it = std::max_element(entries_.begin(), entries_.end());
    return static_cast<int>(it - entries_.begin());
}

bool is_permutation_of_1n(std::span<const int> entries) noexcept
{
    const auto n = entries.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : entries) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

std::string to_string(const Permutation& perm)
{
    std::string out;
    for (int v : perm) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(v);
    }
    return out;
}

Permutation parse_permutation(std::string_view text)
{
    auto is_sep = [](char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); };

    // Trim.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    std::vector<int> entries;
    if (text.empty() || text == "e" || text == "ε")
        return Permutation{};

    const bool has_sep = std::any_of(text.begin(), text.end(), is_sep);
    if (!has_sep) {
        // Compact digit form; only meaningful when every entry is a single digit.
        if (text.size() > 9)
            throw std::invalid_argument("compact form is limited to n <= 9: '" + std::string(text) + "'");
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("bad character in permutation '" + std::string(text) + "'");
            entries.push_back(ch - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && is_sep(text[pos]))
                ++pos;
            if (pos >= text.size())
                break;
            std::size_t end = pos;
            while (end < text.size() && !is_sep(text[end]))
                ++end;
            int value = 0;
            auto token = text.substr(pos, end - pos);
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw std::invalid_argument("bad entry '" + std::string(token) + "' in permutation");
            entries.push_back(value);
            pos = end;
        }
    }
    if (!is_permutation_of_1n(entries))
        throw std::invalid_argument("'" + std::string(text) + "' is not a permutation of 1..n");
    return Permutation(std::move(entries));
}

Permutation reverse(const Permutation& perm)
{
    std::vector<int> out(perm.begin(), perm.end());
    std::reverse(out.begin(), out.end());
    return Permutation(std::move(out));
}

Permutation complement(const Permutation& perm)
{
    const int n = perm.size();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int v : perm)
        out.push_back(n + 1 - v);
    return Permutation(std::move(out));
}

Permutation standardize(std::span<const int> values)
{
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    std::vector<int> out(values.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        out[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
    return Permutation(std::move(out));
}

Permutation remove_max(const Permutation& perm)
{
    if (perm.empty())
        throw std::invalid_argument("remove_max of the empty permutation");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(perm.size() - 1));
    for (int v : perm)
        if (v != perm.size())
            out.push_back(v);
    return Permutation(std::move(out));
}

PatternMatcher::PatternMatcher(const Permutation& pattern)
    : pattern_(pattern),
      below_(static_cast<std::size_t>(pattern.size()), -1),
      above_(static_cast<std::size_t>(pattern.size()), -1)
{
    for (int j = 0; j < pattern.size(); ++j) {
        for (int l = 0; l < j; ++l) {
            if (pattern[l] < pattern[j]) {
                if (below_[j] < 0 || pattern[l] > pattern[below_[j]])
                    below_[j] = l;
            } else if (above_[j] < 0 || pattern[l] < pattern[above_[j]]) {
                above_[j] = l;
            }
        }
    }
}

bool PatternMatcher::extend(std::span<const int> host, int depth, int start, std::span<int> chosen) const
{
    const int k = pattern_.size();
    if (depth == k)
        return true;
    const int n = static_cast<int>(host.size());
    const int lo = below_[depth];
    const int hi = above_[depth];
    for (int h = start; h <= n - (k - depth); ++h) {
        const int v = host[h];
        if (lo >= 0 && v < chosen[lo])
            continue;
        if (hi >= 0 && v > chosen[hi])
            continue;
        chosen[depth] = v;
        if (extend(host, depth + 1, h + 1, chosen))
            return true;
    }
    return false;
}

bool PatternMatcher::occurs_in(std::span<const int> host) const
{
    const int k = pattern_.size();
    if (k == 0)
        return true;
    if (k > static_cast<int>(host.size()))
        return false;
    std::array<int, 32> small{};
    std::vector<int> large;
    std::span<int> chosen;
    if (k <= static_cast<int>(small.size())) {
        chosen = std::span<int>(small.data(), static_cast<std::size_t>(k));
    } else {
        large.resize(static_cast<std::size_t>(k));
        chosen = large;
    }
    return extend(host, 0, 0, chosen);
}

bool contains(std::span<const int> host, const Permutation& pattern)
{
    return PatternMatcher(pattern).occurs_in(host);
}

bool contains(const Permutation& host, const Permutation& pattern)
{
    return contains(host.entries(), pattern);
}

bool avoids_all(std::span<const int> host, std::span<const Permutation> patterns)
{
    return std::none_of(patterns.begin(), patterns.end(),
                        [&](const Permutation& tau) { return contains(host, tau); });
}

bool avoids_all(const Permutation& host, std::span<const Permutation> patterns)
{
    return avoids_all(host.entries(), patterns);
}

}  // namespace ecogen
