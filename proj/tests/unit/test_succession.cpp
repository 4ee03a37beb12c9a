#include <doctest.h>

#include <stdexcept>

#include "brute.hpp"
#include "ecogen/catalog.hpp"
#include "ecogen/errors.hpp"
#include "ecogen/succession.hpp"

using namespace ecogen;

TEST_CASE("regular closed forms")
{
    CHECK(chi_avoid321_pm(1, 1, 3, 3) == 2);
    CHECK(chi_avoid321_pm(1, 3, 3, 3) == 3);
    CHECK(chi_avoid321_pm(2, 3, 3, 3) == 2);
    CHECK(chi_avoid321_pm(3, 3, 3, 3) == 2);
    CHECK_THROWS_AS(chi_avoid321_pm(4, 3, 3, 3), std::domain_error);
    CHECK_THROWS_AS(chi_avoid321_pm(1, 4, 3, 3), std::domain_error);
}

TEST_CASE("colored closed forms")
{
    CHECK(chi_padovan_family(1, {1, 0}, 3) == Label{2, 0});
    CHECK(chi_padovan_family(2, {2, 1}, 3) == Label{2, 1});
    CHECK(chi_padovan_family(3, {3, 0}, 3) == Label{3, 0});

    CHECK(chi_padovan(1, {1, 0}) == Label{2, 0});
    CHECK(chi_padovan(2, {3, 0}) == Label{2, 1});
    CHECK(chi_padovan(2, {2, 0}) == Label{3, 0});

    CHECK(chi_bisection_colored(1, {1, 0}) == Label{2, 0});
    CHECK(chi_bisection_colored(3, {3, 0}) == Label{4, 0});
    CHECK(chi_bisection_colored(2, {3, 1}) == Label{2, 1});

    CHECK_THROWS_AS(chi_padovan(1, {2, 2}), std::domain_error);
    CHECK_THROWS_AS(chi_bisection_colored(0, {2, 0}), std::domain_error);
}

TEST_CASE("the two padovan rules coincide at p = 3")
{
    for (int k = 1; k <= 3; ++k)
        for (int c = 0; c <= 1; ++c)
            for (int i = 1; i <= k; ++i)
                CHECK(chi_padovan(i, {k, c}) == chi_padovan_family(i, {k, c}, 3));
}

TEST_CASE("color_d")
{
    CHECK(color_d(Permutation{2, 3, 1}, 3) == 1);
    CHECK(color_d(Permutation{3, 2, 1}, 3) == 0);
    CHECK(color_d(Permutation{1, 3, 4, 2}, 3) == 1);
    CHECK(color_d(Permutation{1, 2}, 3) == 0);
    CHECK_THROWS_AS(color_d(Permutation{}, 3), PreconditionViolation);
    CHECK_THROWS_AS(color_d(Permutation{3, 1, 2}, 3), PreconditionViolation);
    CHECK_THROWS_AS(color_d(Permutation{4, 3, 2, 1}, 3), PreconditionViolation);
    // Without the length bound the decreasing suffix clause disappears.
    CHECK(color_d(Permutation{4, 3, 2, 1}, std::nullopt) == 0);
}

TEST_CASE("max_in_231 matches a direct search")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : brute::all_perms(n)) {
            bool expected = false;
            const int at = static_cast<int>(std::find(a.begin(), a.end(), n) - a.begin());
            for (int x = 0; x < at; ++x)
                for (int z = at + 1; z < n; ++z)
                    if (a[static_cast<std::size_t>(z)] < a[static_cast<std::size_t>(x)])
                        expected = true;
            CHECK(max_in_231(Permutation(a)) == expected);
        }
}

TEST_CASE("regular functions drop colors")
{
    const auto f = SuccessionFunction::regular([](int i, int) { return i + 1; });
    CHECK(f.is_regular());
    CHECK(f(2, {3, 1}) == Label{3, 0});
    CHECK(f.child(0, 1, kSeedLabel) == Label{2, 0});
    CHECK(f.colors() == std::vector<int>{0});
}

TEST_CASE("label graph of the catalan rule is open, pow2 is closed")
{
    const auto catalan = SuccessionFunction::regular([](int i, int) { return i + 1; });
    const auto g = reachable_labels(catalan, 8);
    CHECK_FALSE(g.closed);
    CHECK(g.issues.empty());

    const auto two = SuccessionFunction::regular([](int, int) { return 2; });
    const auto h = reachable_labels(two);
    CHECK(h.closed);
    CHECK(h.labels == std::vector<Label>{{1, 0}, {2, 0}});
}

TEST_CASE("label graph flags a color outside the set")
{
    const auto verbatim = make_entry("genfib-c", 3);
    CHECK_FALSE(verbatim.label_graph.issues.empty());
    const auto amended = make_entry("genfib-c-amended", 3);
    CHECK(amended.label_graph.issues.empty());
    CHECK(amended.label_graph.closed);
}
