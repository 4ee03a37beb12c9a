#include "ecogen_tools/sequences.hpp"

#include <limits>
#include <stdexcept>

#include "ecogen/verify.hpp"

namespace ecogen::tools {

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b)
{
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw std::overflow_error("sequence term exceeds 64 bits");
    return a + b;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw std::overflow_error("sequence term exceeds 64 bits");
    return a * b;
}

void require_terms(int terms)
{
    if (terms < 1)
        throw std::invalid_argument("terms must be >= 1");
}

// a_1 = first, a_2 = second, a_n = x a_{n-1} + y a_{n-2}, with y in {1, -1}.
std::vector<std::uint64_t> linear2(int terms, std::uint64_t first, std::uint64_t second, std::uint64_t x, int y)
{
    std::vector<std::uint64_t> v{first, second};
    while (static_cast<int>(v.size()) < terms) {
        const auto n = v.size();
        const auto scaled = mul(x, v[n - 1]);
        v.push_back(y > 0 ? add(scaled, v[n - 2]) : scaled - v[n - 2]);
    }
    v.resize(static_cast<std::size_t>(terms));
    return v;
}

}  // namespace

SequenceRef powers_of_two(int terms)
{
    require_terms(terms);
    std::vector<std::uint64_t> v{1};
    while (static_cast<int>(v.size()) < terms)
        v.push_back(mul(2, v.back()));
    return {"A000079", "2^(n-1)", "a_1 = 1, a_n = 2 a_(n-1)", v};
}

SequenceRef pell(int terms)
{
    require_terms(terms);
    return {"A000129", "Pell numbers", "a_1 = 1, a_2 = 2, a_n = 2 a_(n-1) + a_(n-2)", linear2(terms, 1, 2, 2, 1)};
}

SequenceRef fibonacci(int terms)
{
    require_terms(terms);
    return {"A000045", "Fibonacci numbers", "a_1 = 1, a_2 = 2, a_n = a_(n-1) + a_(n-2)", linear2(terms, 1, 2, 1, 1)};
}

SequenceRef generalized_fibonacci(int p, int terms)
{
    require_terms(terms);
    if (p < 2)
        throw std::invalid_argument("p must be >= 2");
    std::vector<std::uint64_t> v;
    for (int n = 1; n <= terms; ++n) {
        if (n <= p) {
            v.push_back(n == 1 ? 1 : mul(2, v.back()));
            continue;
        }
        std::uint64_t s = 0;
        for (int j = 1; j <= p; ++j)
            s = add(s, v[static_cast<std::size_t>(n - 1 - j)]);
        v.push_back(s);
    }
    return {"", std::to_string(p) + "-generalized Fibonacci numbers",
            "a_n = 2^(n-1) for n <= p, a_n = a_(n-1) + ... + a_(n-p) after", v};
}

SequenceRef catalan(int terms)
{
    require_terms(terms);
    std::vector<std::uint64_t> c{1};  // C_0
    while (static_cast<int>(c.size()) <= terms) {
        const auto n = c.size();
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            s = add(s, mul(c[i], c[n - 1 - i]));
        c.push_back(s);
    }
    return {"A000108", "Catalan numbers", "C_0 = 1, C_(n+1) = sum_i C_i C_(n-i); a_n = C_n",
            std::vector<std::uint64_t>(c.begin() + 1, c.begin() + 1 + terms)};
}

SequenceRef large_schroeder(int terms)
{
    require_terms(terms);
    std::vector<std::uint64_t> s{1, 2};  // S_0, S_1
    while (static_cast<int>(s.size()) < terms) {
        const auto n = s.size();
        std::uint64_t v = mul(3, s[n - 1]);
        for (std::size_t k = 1; k + 1 < n; ++k)
            v = add(v, mul(s[k], s[n - 1 - k]));
        s.push_back(v);
    }
    s.resize(static_cast<std::size_t>(terms));
    return {"A006318", "large Schroeder numbers",
            "S_0 = 1, S_1 = 2, S_n = 3 S_(n-1) + sum_(k=1..n-2) S_k S_(n-1-k); a_n = S_(n-1)", s};
}

SequenceRef fibonacci_bisection(int terms)
{
    require_terms(terms);
    return {"A001519", "bisection of Fibonacci", "a_1 = 1, a_2 = 2, a_n = 3 a_(n-1) - a_(n-2)",
            linear2(terms, 1, 2, 3, -1)};
}

SequenceRef from_oracle(std::string oeis_id, std::string name, const PatternSet& patterns, int terms)
{
    require_terms(terms);
    if (terms > kHardOracleMaxN + 2)
        throw std::invalid_argument("oracle sequences are limited to " + std::to_string(kHardOracleMaxN + 2) +
                                    " terms");
    std::vector<std::uint64_t> v;
    for (int n = 1; n <= terms; ++n)
        v.push_back(oracle_generate(n, patterns).size());
    return {std::move(oeis_id), std::move(name), "brute-force oracle on " + to_string(patterns), v};
}

SequenceRef padovan_binomial_transform(int terms)
{
    return from_oracle("A034943", "binomial transform of Padovan",
                       PatternSet{Permutation{3, 1, 2}, Permutation{2, 4, 3, 1}, Permutation{4, 3, 2, 1}}, terms);
}

SequenceRef central_binomial(int terms)
{
    return from_oracle("A000984", "central binomial coefficients",
                       PatternSet{Permutation{2, 1, 3, 4}, Permutation{2, 1, 4, 3}, Permutation{2, 4, 1, 3},
                                  Permutation{4, 2, 1, 3}},
                       terms);
}

std::optional<SequenceRef> reference_for(const CatalogEntry& entry, int terms)
{
    const auto& id = entry.id;
    if (id == "pow2")
        return powers_of_two(terms);
    if (id == "pell" || id == "pell-alt")
        return pell(terms);
    if (id == "bisfib-321-3412" || id == "bisfib-321-4123" || id == "bisfib-312-4321" || id == "bisfib-c")
        return fibonacci_bisection(terms);
    if (id == "catalan-312" || id == "catalan-321")
        return catalan(terms);
    if (id == "schroeder")
        return large_schroeder(terms);
    if (id == "fibonacci")
        return fibonacci(terms);
    if ((id == "genfib" || id == "genfib-c" || id == "genfib-c-amended") && entry.family && entry.family->p)
        return generalized_fibonacci(*entry.family->p, terms);
    if (id == "padovan-bt" || (id == "padovan-p" && entry.family && entry.family->p == 3))
        return padovan_binomial_transform(terms);
    return std::nullopt;
}

}  // namespace ecogen::tools
