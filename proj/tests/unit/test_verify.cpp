#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "brute.hpp"
#include "ecogen/catalog.hpp"
#include "ecogen/verify.hpp"

using namespace ecogen;

TEST_CASE("oracle examples")
{
    const auto leaves = oracle_generate(4, parse_pattern_set("312;2431;4321"));
    CHECK(leaves.size() == 12);
    CHECK(leaves.front() == Permutation{1, 2, 3, 4});
    CHECK(leaves.back() == Permutation{3, 4, 2, 1});
    CHECK(oracle_generate(5, parse_pattern_set("321;231")).size() == 16);
    CHECK(oracle_generate(3, PatternSet{}).size() == 6);
    CHECK(oracle_generate(0, parse_pattern_set("1")).size() == 1);
    CHECK(oracle_generate(1, parse_pattern_set("1")).empty());
}

TEST_CASE("the two oracles agree")
{
    const std::vector<std::string> sets{"312", "321", "132", "312;2431", "4123;4213", "2134;2143;2413;4213",
                                        "123;321", "1342;2413"};
    for (const auto& text : sets) {
        const auto P = parse_pattern_set(text);
        for (int n = 0; n <= 6; ++n) {
            auto a = oracle_generate(n, P);
            std::sort(a.begin(), a.end());
            CHECK_MESSAGE(a == oracle_filter(n, P), text << " n=" << n);
        }
    }
}

TEST_CASE("oracle tree annotations")
{
    const auto entry = make_entry("padovan-bt");
    const auto tree = oracle_tree(4, entry.patterns, entry.color_oracle);
    REQUIRE(tree.levels.size() == 5);
    CHECK(tree.levels[4].size() == 12);
    const auto& n231 = tree.levels[3][3];
    CHECK(n231.perm == Permutation{2, 3, 1});
    CHECK(n231.active_sites == 2);
    CHECK(n231.color == 1);
    CHECK_FALSE(tree.levels[0][0].color.has_value());
}

TEST_CASE("verify_entry")
{
    const auto bt = verify_entry(make_entry("padovan-bt"), 7);
    CHECK(bt.passed());
    CHECK_FALSE(bt.counterexample.has_value());

    const auto cat = verify_entry(make_entry("catalan-312"), 8);
    CHECK(cat.passed());
    CHECK(cat.level_counts == std::vector<std::uint64_t>{1, 1, 2, 5, 14, 42, 132, 429, 1430});

    CHECK_THROWS_AS(verify_entry(make_entry("pow2"), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_entry(make_entry("pow2"), 11), std::invalid_argument);
}

TEST_CASE("mutation: chi(1,k) = k for {321}")
{
    auto entry = make_entry("catalan-321");
    entry.succession = SuccessionFunction::regular([](int i, int k) { return i == 1 ? k : i; });
    const auto r = verify_entry(entry, 5);
    CHECK(r.status == VerificationStatus::count_mismatch);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->n <= 4);
}

TEST_CASE("mutation: a flipped coloring is caught by the label walk")
{
    auto entry = make_entry("padovan-bt");
    entry.color_oracle = [](const Permutation& a) { return 1 - color_d(a, 3); };
    const auto r = verify_entry(entry, 5);
    CHECK(r.status == VerificationStatus::label_mismatch);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->n == 1);
}

TEST_CASE("mutation: same level sizes, different sets")
{
    // Reversing the child labels of the Catalan rule keeps every level size.
    auto entry = make_entry("catalan-312");
    entry.succession = SuccessionFunction::regular([](int i, int k) { return k - i + 2; });
    const auto r = verify_entry(entry, 6);
    CHECK(r.status == VerificationStatus::set_mismatch);
}

TEST_CASE("genfib-c as printed fails, amended passes")
{
    for (int p = 3; p <= 4; ++p) {
        const auto r = verify_entry(make_entry("genfib-c", p), 8);
        CHECK(r.status == VerificationStatus::count_mismatch);
        REQUIRE(r.counterexample.has_value());
        CHECK(verify_entry(make_entry("genfib-c-amended", p), 8).passed());
    }
    CHECK(verify_entry(make_entry("genfib-c", 2), 8).passed());
}

TEST_CASE("infer_regular")
{
    const auto catalan = infer_regular(parse_pattern_set("312"), 7);
    REQUIRE(std::holds_alternative<InferredSuccession>(catalan));
    const auto& table = std::get<InferredSuccession>(catalan).table;
    for (const auto& [key, child] : table)
        CHECK(child == key.first + 1);

    const auto rj = infer_regular(parse_pattern_set("132"), 4);
    REQUIRE(std::holds_alternative<NotRightJustified>(rj));
    CHECK(std::get<NotRightJustified>(rj).witness == Permutation{1, 3, 2});

    const auto bis = infer_regular(parse_pattern_set("312;2431"), 6);
    REQUIRE(std::holds_alternative<NotRegular>(bis));
    const auto& w = std::get<NotRegular>(bis);
    REQUIRE(w.second.has_value());
    CHECK(w.first_k != w.second_k);

    CHECK_THROWS_AS(infer_regular(parse_pattern_set("312"), 1), std::invalid_argument);
}

TEST_CASE("inferred tables reproduce every regular entry")
{
    for (const auto& e : catalog_sweep(2, 4)) {
        if (e.table != CatalogTable::regular)
            continue;
        const auto result = infer_regular(e.patterns, 7);
        REQUIRE_MESSAGE(std::holds_alternative<InferredSuccession>(result), display_id(e));
        const auto diffs = compare_with(std::get<InferredSuccession>(result), e.succession);
        CHECK_MESSAGE(diffs.empty(), display_id(e) << ": " << (diffs.empty() ? "" : diffs.front()));
    }
}

TEST_CASE("an inferred table drives the generator within its depth")
{
    const auto inferred = std::get<InferredSuccession>(infer_regular(parse_pattern_set("4123;4213"), 7));
    auto entry = make_entry("schroeder");
    entry.succession = inferred.to_function();
    CHECK(verify_entry(entry, 7).passed());
}

TEST_CASE("padovan-p: the compact color rule miscolors, counts unaffected")
{
    // nu resets the color at i = k, c = 0 only while k < p.
    for (int p = 3; p <= 4; ++p) {
        auto entry = make_entry("padovan-p", p);
        const auto correct = entry.succession;
        entry.succession = SuccessionFunction(
            SuccessionKind::colored,
            [correct, p](int i, Label parent) {
                const Label l = correct(i, parent);
                const bool reset = i == 1 || (i == parent.k && parent.c == 0 && parent.k < p);
                return Label{l.k, reset ? 0 : 1};
            },
            {0, 1});
        const auto r = verify_entry(entry, 7);
        CHECK(r.status == VerificationStatus::label_mismatch);
        REQUIRE(r.counterexample.has_value());
        MESSAGE("p=" << p << " n=" << r.counterexample->n << " [" << to_string(r.counterexample->permutation)
                     << "] expected " << r.counterexample->expected << " got " << r.counterexample->actual);
        CHECK(verify_entry(make_entry("padovan-p", p), 7).passed());
    }
}
