#include "ecogen/pattern_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ecogen {

PatternSet::PatternSet(std::initializer_list<Permutation> patterns)
    : PatternSet(std::vector<Permutation>(patterns))
{
}

PatternSet::PatternSet(std::vector<Permutation> patterns, std::optional<FamilyDescriptor> origin)
    : origin_(std::move(origin))
{
    for (auto& tau : patterns) {
        if (tau.empty())
            throw std::invalid_argument("the empty permutation cannot be a forbidden pattern");
        if (std::find(patterns_.begin(), patterns_.end(), tau) != patterns_.end())
            continue;
        matchers_.emplace_back(tau);
        patterns_.push_back(std::move(tau));
    }
}

bool PatternSet::has(const Permutation& pattern) const
{
    return std::find(patterns_.begin(), patterns_.end(), pattern) != patterns_.end();
}

bool PatternSet::avoided_by(std::span<const int> host) const
{
    return std::none_of(matchers_.begin(), matchers_.end(),
                        [&](const PatternMatcher& m) { return m.occurs_in(host); });
}

bool PatternSet::same_patterns(const PatternSet& other) const
{
    return sorted() == other.sorted();
}

std::vector<Permutation> PatternSet::sorted() const
{
    auto out = patterns_;
    std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool avoids_all(const Permutation& host, const PatternSet& patterns)
{
    return patterns.avoided_by(host);
}

std::string to_string(const PatternSet& set)
{
    std::string out;
    for (const auto& tau : set.patterns()) {
        if (!out.empty())
            out += ", ";
        if (tau.size() <= 9) {
            for (int v : tau)
                out += static_cast<char>('0' + v);
        } else {
            out += '(' + to_string(tau) + ')';
        }
    }
    return out;
}

PatternSet parse_pattern_set(std::string_view text)
{
    std::vector<Permutation> patterns;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(';', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto piece = text.substr(pos, end - pos);
        const bool blank = std::all_of(piece.begin(), piece.end(),
                                       [](char ch) { return ch == ' ' || ch == '\t'; });
        if (!blank) {
            auto tau = parse_permutation(piece);
            if (tau.empty())
                throw std::invalid_argument("the empty permutation cannot be a forbidden pattern");
            patterns.push_back(std::move(tau));
        }
        pos = end + 1;
    }
    return PatternSet(std::move(patterns));
}

std::optional<Permutation> shift_max_left(const Permutation& tau)
{
    const int at = tau.max_position();
    if (at <= 0)
        return std::nullopt;
    std::vector<int> out(tau.begin(), tau.end());
    std::swap(out[static_cast<std::size_t>(at)], out[static_cast<std::size_t>(at - 1)]);
    return Permutation(std::move(out));
}

std::optional<Permutation> shift_max_right(const Permutation& tau)
{
    const int at = tau.max_position();
    if (at < 0 || at == tau.size() - 1)
        return std::nullopt;
    std::vector<int> out(tau.begin(), tau.end());
    std::swap(out[static_cast<std::size_t>(at)], out[static_cast<std::size_t>(at + 1)]);
    return Permutation(std::move(out));
}

RightJustifiedVerdict is_right_justified_general(const PatternSet& set)
{
    for (const auto& tau : set.patterns()) {
        auto left = shift_max_left(tau);
        if (left && set.avoided_by(*left))
            return {false, tau};
    }
    return {};
}

RightJustifiedVerdict is_right_justified(const PatternSet& set)
{
    const auto pats = set.patterns();
    const bool equal_lengths = std::all_of(pats.begin(), pats.end(), [&](const Permutation& tau) {
        return tau.size() == pats.front().size();
    });
    if (!equal_lengths)
        return is_right_justified_general(set);
    for (const auto& tau : pats) {
        auto left = shift_max_left(tau);
        if (left && !set.has(*left))
            return {false, tau};
    }
    return {};
}

PatternSet reverse_set(const PatternSet& set)
{
    std::vector<Permutation> out;
    for (const auto& tau : set.patterns())
        out.push_back(reverse(tau));
    return PatternSet(std::move(out));
}

PatternSet complement_set(const PatternSet& set)
{
    std::vector<Permutation> out;
    for (const auto& tau : set.patterns())
        out.push_back(complement(tau));
    return PatternSet(std::move(out));
}

namespace family_patterns {

Permutation top_then_increasing(int p)
{
    std::vector<int> v{p + 1};
    for (int x = 1; x <= p; ++x)
        v.push_back(x);
    return Permutation(std::move(v));
}

Permutation pair_then_increasing(int p)
{
    std::vector<int> v{p, p + 1};
    for (int x = 1; x < p; ++x)
        v.push_back(x);
    return Permutation(std::move(v));
}

Permutation decreasing(int p)
{
    std::vector<int> v;
    for (int x = p + 1; x >= 1; --x)
        v.push_back(x);
    return Permutation(std::move(v));
}

Permutation increasing_then_one(int p)
{
    std::vector<int> v;
    for (int x = 2; x <= p + 1; ++x)
        v.push_back(x);
    v.push_back(1);
    return Permutation(std::move(v));
}

Permutation increasing_then_one_two(int p)
{
    std::vector<int> v;
    for (int x = 3; x <= p + 1; ++x)
        v.push_back(x);
    v.push_back(1);
    v.push_back(2);
    return Permutation(std::move(v));
}

}  // namespace family_patterns

const std::vector<FamilyInfo>& families()
{
    static const std::vector<FamilyInfo> table{
        {"321-inc", "{321, (p+1)12...p}", true, false, 2, 2},
        {"321-pp", "{321, p(p+1)12...(p-1)}", true, false, 2, 2},
        {"312-dec", "{312, (p+1)p...21}", true, false, 2, 2},
        {"321-3412-inc", "{321, 3412, (p+1)12...p}", true, false, 2, 2},
        {"321-231-inc", "{321, 231, (p+1)12...p}", true, false, 2, 2},
        {"321-pp-inc", "{321, p(p+1)12...(p-1), (p+1)12...p}", true, false, 2, 2},
        {"321-pp-incm", "{321, p(p+1)12...(p-1), (m+1)12...m}", true, true, 2, 2},
        {"321-312-gf", "{321, 312, 23...(p+1)1}", true, false, 2, 2},
        {"321-4123-var", "{321, 4123, 34...(p+1)12}", true, false, 3, 2},
        {"312-2431-dec", "{312, 2431, (p+1)p...21}", true, false, 2, 2},
    };
    return table;
}

const FamilyInfo& family_info(std::string_view family_id)
{
    for (const auto& f : families())
        if (f.id == family_id)
            return f;
    throw std::invalid_argument("unknown pattern family '" + std::string(family_id) + "'");
}

PatternSet instantiate_family(const FamilyDescriptor& desc)
{
    const auto& info = family_info(desc.family_id);
    if (info.uses_p && !desc.p)
        throw std::invalid_argument("family " + info.id + " requires parameter p");
    if (info.uses_m && !desc.m)
        throw std::invalid_argument("family " + info.id + " requires parameter m");
    if (info.uses_p && *desc.p < info.min_p)
        throw std::out_of_range("family " + info.id + ": p must be >= " + std::to_string(info.min_p) +
                                " (got " + std::to_string(*desc.p) + ")");
    if (info.uses_m && *desc.m < info.min_m)
        throw std::out_of_range("family " + info.id + ": m must be >= " + std::to_string(info.min_m) +
                                " (got " + std::to_string(*desc.m) + ")");

    namespace fp = family_patterns;
    const Permutation p321{3, 2, 1};
    const Permutation p312{3, 1, 2};
    const Permutation p231{2, 3, 1};
    const int p = desc.p.value_or(0);
    const int m = desc.m.value_or(0);

    std::vector<Permutation> pats;
    const auto& id = info.id;
    if (id == "321-inc")
        pats = {p321, fp::top_then_increasing(p)};
    else if (id == "321-pp")
        pats = {p321, fp::pair_then_increasing(p)};
    else if (id == "312-dec")
        pats = {p312, fp::decreasing(p)};
    else if (id == "321-3412-inc")
        pats = {p321, Permutation{3, 4, 1, 2}, fp::top_then_increasing(p)};
    else if (id == "321-231-inc")
        pats = {p321, p231, fp::top_then_increasing(p)};
    else if (id == "321-pp-inc")
        pats = {p321, fp::pair_then_increasing(p), fp::top_then_increasing(p)};
    else if (id == "321-pp-incm")
        pats = {p321, fp::pair_then_increasing(p), fp::top_then_increasing(m)};
    else if (id == "321-312-gf")
        pats = {p321, p312, fp::increasing_then_one(p)};
    else if (id == "321-4123-var")
        pats = {p321, Permutation{4, 1, 2, 3}, fp::increasing_then_one_two(p)};
    else if (id == "312-2431-dec")
        pats = {p312, Permutation{2, 4, 3, 1}, fp::decreasing(p)};

    FamilyDescriptor origin{info.id, info.uses_p ? desc.p : std::nullopt, info.uses_m ? desc.m : std::nullopt};
    return PatternSet(std::move(pats), std::move(origin));
}

}  // namespace ecogen
