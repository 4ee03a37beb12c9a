#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "brute.hpp"
#include "ecogen/catalog.hpp"
#include "ecogen/generator.hpp"

using namespace ecogen;

namespace {

std::vector<brute::Perm> raw_patterns(const PatternSet& set)
{
    std::vector<brute::Perm> out;
    for (const auto& t : set.patterns())
        out.emplace_back(t.begin(), t.end());
    return out;
}

// Level L_n built from L_(n-1) by taking parents in order and, for each,
// the sites that keep it an avoider in increasing order.
std::vector<brute::Perm> tree_order(int n, const std::vector<brute::Perm>& patterns)
{
    std::vector<brute::Perm> level{{}};
    for (int len = 0; len < n; ++len) {
        std::vector<brute::Perm> next;
        for (const auto& parent : level)
            for (int site = 1; site <= len + 1; ++site) {
                auto child = brute::insert_site(parent, site);
                if (brute::avoids(child, patterns))
                    next.push_back(std::move(child));
            }
        level = std::move(next);
    }
    return level;
}

std::vector<brute::Perm> emitted(int n, const CatalogEntry& e, GenerationOptions opts = {})
{
    std::vector<brute::Perm> out;
    generate(n, e, [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); }, opts);
    return out;
}

}  // namespace

TEST_CASE("padovan-bt level 4 in tree order")
{
    const auto e = make_entry("padovan-bt");
    const std::vector<brute::Perm> leaves{{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}, {1, 3, 4, 2},
                                          {1, 4, 3, 2}, {2, 1, 3, 4}, {2, 1, 4, 3}, {2, 3, 1, 4},
                                          {2, 3, 4, 1}, {3, 2, 1, 4}, {3, 2, 4, 1}, {3, 4, 2, 1}};
    CHECK(emitted(4, e) == leaves);
    CHECK(count_levels(4, e.succession) == std::vector<std::uint64_t>{1, 1, 2, 5, 12});
}

TEST_CASE("n = 0 emits the empty permutation once")
{
    for (const auto& e : catalog()) {
        const auto out = emitted(0, e);
        REQUIRE(out.size() == 1);
        CHECK(out.front().empty());
        CHECK(count(0, e) == 1);
    }
}

TEST_CASE("catalan-312 at n = 8")
{
    const auto e = make_entry("catalan-312");
    const auto out = emitted(8, e);
    CHECK(out.size() == 1430);
    CHECK(std::set<brute::Perm>(out.begin(), out.end()).size() == 1430);
    for (const auto& p : out)
        CHECK(brute::avoids(p, {{3, 1, 2}}));
    CHECK(count_levels(8, e.succession) ==
          std::vector<std::uint64_t>{1, 1, 2, 5, 14, 42, 132, 429, 1430});
}

TEST_CASE("pow2 counts")
{
    const auto e = make_entry("pow2");
    for (int n = 1; n <= 6; ++n)
        CHECK(count(n, e) == (std::uint64_t{1} << (n - 1)));
}

TEST_CASE("emitted order, restoration and counts for every entry")
{
    for (const auto& e : catalog_sweep(2, 3)) {
        if (e.id == "genfib-c")
            continue;
        const auto raw = raw_patterns(e.patterns);
        for (int n = 0; n <= 6; ++n) {
            GenerationOptions audit;
            audit.audit_restoration = true;
            const auto out = emitted(n, e, audit);
            CHECK_MESSAGE(out == tree_order(n, raw), display_id(e) << " n=" << n);
            CHECK(count(n, e) == out.size());
        }
    }
}

TEST_CASE("restoration audit catches a corrupted buffer")
{
    // A rule that claims more sites than exist trips the capacity check.
    const SuccessionFunction liar(SuccessionKind::regular, [](int, Label) { return Label{5, 0}; }, {0});
    CHECK_THROWS_AS(generate(4, liar, [](std::span<const int>) {}), std::logic_error);
}

TEST_CASE("transforms")
{
    const auto e = make_entry("catalan-312");
    std::vector<brute::Perm> rev, comp;
    generate_transformed(3, e, Transform::reverse, [&](std::span<const int> p) { rev.emplace_back(p.begin(), p.end()); });
    generate_transformed(3, e, Transform::complement,
                         [&](std::span<const int> p) { comp.emplace_back(p.begin(), p.end()); });
    std::sort(rev.begin(), rev.end());
    std::sort(comp.begin(), comp.end());
    CHECK(rev == brute::avoiders(3, {{2, 1, 3}}));
    CHECK(comp == brute::avoiders(3, {{1, 3, 2}}));

    int calls = 0;
    generate_transformed(0, e, Transform::reverse, [&](std::span<const int> p) {
        CHECK(p.empty());
        ++calls;
    });
    CHECK(calls == 1);
    CHECK(parse_transform("reverse") == Transform::reverse);
    CHECK_FALSE(parse_transform("inverse").has_value());
}

TEST_CASE("tree materialization")
{
    const auto f = make_entry("padovan-bt").succession;
    const auto root = generate_tree(2, f);
    CHECK(format_tree(root) == "ε (1,0)\n  1 (2,0)\n    1 2 (2,0)\n    2 1 (3,0)\n");
    CHECK(tree_size(generate_tree(0, f)) == 1);
    CHECK(format_tree(generate_tree(0, f)) == "ε (1,0)\n");

    const auto three = generate_tree(3, f);
    std::vector<std::pair<Permutation, Label>> level3;
    for (const auto& a : three.children)
        for (const auto& b : a.children)
            for (const auto& c : b.children)
                level3.emplace_back(c.perm, c.label);
    const std::vector<std::pair<Permutation, Label>> expected{{Permutation{1, 2, 3}, {2, 0}},
                                                              {Permutation{1, 3, 2}, {3, 0}},
                                                              {Permutation{2, 1, 3}, {2, 0}},
                                                              {Permutation{2, 3, 1}, {2, 1}},
                                                              {Permutation{3, 2, 1}, {3, 0}}};
    CHECK(level3 == expected);
    CHECK_THROWS_AS(generate_tree(7, f), std::length_error);
}

TEST_CASE("counters")
{
    const auto pow2 = make_entry("pow2");
    for (int n = 1; n <= 12; ++n) {
        const auto c = generate(n, pow2, [](std::span<const int>) {});
        const auto r = cat_metrics(c, 1.0);
        // (2^n - 1) / 2^(n-1) exactly, both sides are dyadic
        CHECK(r.calls_per_emitted == static_cast<double>((1u << n) - 1) / static_cast<double>(1u << (n - 1)));
        CHECK(r.calls_per_emitted < 2.0);
    }
    const auto empty = cat_metrics(GenerationCounters{}, 0.5);
    CHECK(empty.empty);
    CHECK(empty.calls_per_emitted == 0.0);
}

TEST_CASE("count overflow is reported")
{
    CHECK_THROWS_AS(count(80, make_entry("pow2")), std::overflow_error);
    CHECK(count(64, make_entry("pow2")) == (std::uint64_t{1} << 63));
}
