#include "ecogen/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "ecogen/sites.hpp"

namespace ecogen {

namespace {

PatternSet concrete_patterns(std::string_view id)
{
    if (id == "pow2")
        return parse_pattern_set("321;312");
    if (id == "pell")
        return parse_pattern_set("321;3412;4123");
    if (id == "pell-alt")
        return parse_pattern_set("312;4321;3421");
    if (id == "bisfib-321-3412")
        return parse_pattern_set("321;3412");
    if (id == "bisfib-321-4123")
        return parse_pattern_set("321;4123");
    if (id == "bisfib-312-4321")
        return parse_pattern_set("312;4321");
    if (id == "catalan-312")
        return parse_pattern_set("312");
    if (id == "catalan-321")
        return parse_pattern_set("321");
    if (id == "schroeder")
        return parse_pattern_set("4123;4213");
    if (id == "fibonacci")
        return parse_pattern_set("321;231;312");
    if (id == "bisfib-c")
        return parse_pattern_set("312;2431");
    if (id == "padovan-bt")
        return parse_pattern_set("312;2431;4321");
    throw std::invalid_argument("no concrete pattern set for '" + std::string(id) + "'");
}

// Rules as printed. Each lambda takes (site i, parent label) and the bound
// parameters; regular ones leave the color at 0.
SuccessionFunction make_rule(std::string_view id, int p, int m, Label root_child)
{
    using R = SuccessionFunction;
    auto regular = [&](std::function<int(int, int)> chi) { return R::regular(std::move(chi), root_child); };
    auto colored = [&](SuccessionRule rule, std::vector<int> colors) {
        return R(SuccessionKind::colored, std::move(rule), std::move(colors), root_child);
    };
    auto color_range = [](int hi) {
        std::vector<int> out;
        for (int c = 0; c <= hi; ++c)
            out.push_back(c);
        return out;
    };

    if (id == "pow2")
        return regular([](int, int) { return 2; });
    if (id == "pell")
        return regular([](int i, int) { return i == 1 ? 3 : 2; });
    if (id == "pell-alt")
        return regular([](int i, int) { return i == 2 ? 3 : 2; });
    if (id == "bisfib-321-3412")
        return regular([](int i, int k) { return i == 1 ? k + 1 : 2; });
    if (id == "bisfib-321-4123")
        return regular([](int i, int) { return i == 1 ? 3 : i; });
    if (id == "bisfib-312-4321")
        return regular([](int i, int k) { return (k == 3 && i == 3) ? 3 : i + 1; });
    if (id == "catalan-312")
        return regular([](int i, int) { return i + 1; });
    if (id == "catalan-321")
        return regular([](int i, int k) { return i == 1 ? k + 1 : i; });
    if (id == "schroeder")
        return regular([](int i, int k) { return (i == k - 1 || i == k) ? k + 1 : i + 2; });
    if (id == "fibonacci")
        return regular([](int i, int) { return i == 2 ? 1 : 2; });
    if (id == "avoid321-inc")
        return regular([p](int i, int k) {
            if (i == 1 && k < p)
                return k + 1;
            if (i == 1 && k == p)
                return p;
            return i;
        });
    if (id == "avoid321-pp")
        return regular([p](int i, int k) {
            if (i == 1)
                return k + 1;
            if (1 < i && i < p - 1)
                return i;
            return p - 1;
        });
    if (id == "avoid312-dec")
        return regular([p](int i, int k) { return (k == p && i == p) ? p : i + 1; });
    if (id == "avoid321-3412-inc")
        return regular([p](int i, int k) {
            if (i == 1 && k < p)
                return k + 1;
            if (i == 1 && k == p)
                return p;
            return 2;
        });
    if (id == "genfib")
        return regular([p](int i, int k) {
            if (i == 1 && k < p)
                return k + 1;
            if (i == 1 && k == p)
                return k;
            return 1;
        });
    if (id == "avoid321-pp-inc")
        return regular([p](int i, int k) {
            if (i == 1 && k < p)
                return k + 1;
            if (i == 1 && k == p)
                return p;
            if (i == p && k == p)
                return p - 1;
            return i;
        });
    if (id == "avoid321-pm")
        return regular([p, m](int i, int k) { return chi_avoid321_pm(i, k, p, m); });

    if (id == "bisfib-c")
        return colored(chi_bisection_colored, {0, 1});
    if (id == "padovan-bt")
        return colored(chi_padovan, {0, 1});
    if (id == "padovan-p")
        return colored([p](int i, Label parent) { return chi_padovan_family(i, parent, p); }, {0, 1});
    if (id == "genfib-c" || id == "genfib-c-amended") {
        const int step = (id == "genfib-c") ? -1 : +1;
        return colored(
            [p, step](int i, Label parent) {
                const int count = (parent.c == p - 2 && i == 2) ? 1 : 2;
                const int color = (i == 1 || parent.c == p - 2) ? 0 : parent.c + step;
                return Label{count, color};
            },
            color_range(p - 2));
    }
    if (id == "avoid321-4123-var")
        return colored(
            [p](int i, Label parent) {
                const int count = (i == 2 || (i == 3 && parent.c == p - 3)) ? 2 : 3;
                const int color = (i == 3 && parent.c < p - 3) ? parent.c + 1 : 0;
                return Label{count, color};
            },
            color_range(p - 3));
    throw std::invalid_argument("no succession rule for '" + std::string(id) + "'");
}

ColorOracle make_color_oracle(std::string_view id, int p)
{
    if (id == "bisfib-c")
        return [](const Permutation& a) { return color_d(a, std::nullopt); };
    if (id == "padovan-bt")
        return [](const Permutation& a) { return color_d(a, 3); };
    if (id == "padovan-p")
        return [p](const Permutation& a) { return color_d(a, p); };
    return {};
}

}  // namespace

const std::vector<CatalogSpec>& catalog_specs()
{
    using T = CatalogTable;
    static const std::vector<CatalogSpec> specs{
        {"pow2", T::regular, "", "{321, 312}", "2", {"A000079", "2^(n-1)"}, ""},
        {"pell", T::regular, "", "{321, 3412, 4123}", "3 if i=1; 2 otherwise", {"A000129", "Pell numbers"},
         "printed rule gives 3 at (i,k)=(1,1); that label only occurs at the root, whose child is labelled "
         "from the pattern set"},
        {"pell-alt", T::regular, "", "{312, 4321, 3421}", "3 if i=2; 2 otherwise", {"A000129", "Pell numbers"}, ""},
        {"bisfib-321-3412", T::regular, "", "{321, 3412}", "k+1 if i=1; 2 otherwise",
         {"A001519", "bisection of Fibonacci"}, ""},
        {"bisfib-321-4123", T::regular, "", "{321, 4123}", "3 if i=1; i otherwise",
         {"A001519", "bisection of Fibonacci"},
         "printed rule gives 3 at (i,k)=(1,1); that label only occurs at the root"},
        {"bisfib-312-4321", T::regular, "", "{312, 4321}", "3 if k=3 and i=3; i+1 otherwise",
         {"A001519", "bisection of Fibonacci"}, "reachable labels satisfy k <= 3"},
        {"catalan-312", T::regular, "", "{312}", "i+1", {"A000108", "Catalan numbers"}, ""},
        {"catalan-321", T::regular, "", "{321}", "k+1 if i=1; i otherwise", {"A000108", "Catalan numbers"}, ""},
        {"schroeder", T::regular, "", "{4123, 4213}", "k+1 if i=k-1 or i=k; i+2 otherwise",
         {"A006318", "large Schroeder numbers"}, ""},
        {"fibonacci", T::regular, "", "{321, 231, 312}", "1 if i=2; 2 otherwise", {"A000045", "Fibonacci numbers"},
         ""},
        {"avoid321-inc", T::regular, "321-inc", "{321, (p+1)12...p}",
         "k+1 if i=1 and k<p; p if i=1 and k=p; i otherwise", {"", "a pattern of length 3 and a variable length pattern"},
         ""},
        {"avoid321-pp", T::regular, "321-pp", "{321, p(p+1)12...(p-1)}",
         "k+1 if i=1; i if 1<i<p-1; p-1 otherwise", {"", "a pattern of length 3 and a variable length pattern"}, ""},
        {"avoid312-dec", T::regular, "312-dec", "{312, (p+1)p...21}", "p if k=p and i=p; i+1 otherwise",
         {"", "a pattern of length 3 and a variable length pattern"}, ""},
        {"avoid321-3412-inc", T::regular, "321-3412-inc", "{321, 3412, (p+1)12...p}",
         "k+1 if i=1 and k<p; p if i=1 and k=p; 2 otherwise",
         {"", "patterns of length 3 and 4 and a variable length pattern"}, ""},
        {"genfib", T::regular, "321-231-inc", "{321, 231, (p+1)12...p}",
         "k+1 if i=1 and k<p; k if i=1 and k=p; 1 otherwise", {"", "generalized Fibonacci numbers"}, ""},
        {"avoid321-pp-inc", T::regular, "321-pp-inc", "{321, p(p+1)12...(p-1), (p+1)12...p}",
         "k+1 if i=1 and k<p; p if i=1 and k=p; p-1 if i=p and k=p; i otherwise",
         {"", "a pattern of length 3 and two variable length patterns"}, ""},
        {"avoid321-pm", T::regular, "321-pp-incm", "{321, p(p+1)12...(p-1), (m+1)12...m}",
         "k+1 if i=1 and k<m; m if i=1 and k=m; i if 1<i<p; p-1 otherwise",
         {"", "a pattern of length 3 and two variable length patterns"},
         "p=m=3 gives {321, 3412, 4123} (Pell)"},
        {"bisfib-c", T::colored, "", "{312, 2431}",
         "mu: i+1 if i=1 or (i=k and c=0); i otherwise | nu: 0 if i=1 or (i=k and c=0); 1 otherwise",
         {"A001519", "bisection of Fibonacci"}, "colors checked against the 231 coloring without the suffix clause"},
        {"padovan-bt", T::colored, "", "{312, 2431, 4321}",
         "mu: 2 if i=1 or (i=2 and (c=1 or k=3)); 3 otherwise | nu: 0 if i=1 or (i=k and c=0); 1 otherwise",
         {"A034943", "binomial transform of Padovan"}, ""},
        {"genfib-c", T::colored, "321-312-gf", "{321, 312, 23...(p+1)1}",
         "mu: 1 if c=p-2 and i=2; 2 otherwise | nu: 0 if i=1 or c=p-2; c-1 otherwise",
         {"", "generalized Fibonacci numbers"},
         "as printed; the 'c-1' update leaves the color set and fails brute-force verification for p >= 3"},
        {"genfib-c-amended", T::colored, "321-312-gf", "{321, 312, 23...(p+1)1}",
         "mu: 1 if c=p-2 and i=2; 2 otherwise | nu: 0 if i=1 or c=p-2; c+1 otherwise",
         {"", "generalized Fibonacci numbers"}, "genfib-c with the color update read as c+1; not a printed rule"},
        {"avoid321-4123-var", T::colored, "321-4123-var", "{321, 4123, 34...(p+1)12}",
         "mu: 2 if i=2 or (i=3 and c=p-3); 3 otherwise | nu: c+1 if i=3 and c<p-3; 0 otherwise",
         {"", "patterns of length 3 and 4 and a variable length pattern"},
         "printed mu gives 3 at (i,k,c)=(1,1,0); that label only occurs at the root"},
        {"padovan-p", T::colored, "312-2431-dec", "{312, 2431, (p+1)p...21}",
         "mu: i+1 if i=1 or (i=k and c=0 and k<p); i otherwise | nu: 0 if i=1 or (i=k and c=0); 1 otherwise",
         {"", "generalizes the binomial transform of Padovan (p=3)"},
         "the compact table form restricts the nu condition to k<p; that variant mislabels colors at i=k=p"},
    };
    return specs;
}

const CatalogSpec& catalog_spec(std::string_view id)
{
    for (const auto& s : catalog_specs())
        if (s.id == id)
            return s;
    throw std::invalid_argument("unknown catalog entry '" + std::string(id) + "'");
}

CatalogEntry make_entry(std::string_view id, std::optional<int> p, std::optional<int> m)
{
    const auto& spec = catalog_spec(id);
    PatternSet patterns;
    std::optional<FamilyDescriptor> family;
    int pv = 0;
    int mv = 0;
    if (spec.family_id.empty()) {
        patterns = concrete_patterns(spec.id);
    } else {
        const auto& info = family_info(spec.family_id);
        FamilyDescriptor desc{spec.family_id, std::nullopt, std::nullopt};
        if (info.uses_p)
            desc.p = p.value_or(kDefaultP);
        if (info.uses_m)
            desc.m = m.value_or(kDefaultM);
        patterns = instantiate_family(desc);
        family = patterns.origin();
        pv = desc.p.value_or(0);
        mv = desc.m.value_or(0);
    }

    // The permutation 1 is the only child of the root; its label comes from
    // the pattern set rather than from the printed rule.
    const Label root_child{static_cast<int>(active_sites(Permutation{1}, patterns).size()), 0};

    CatalogEntry entry{
        spec.id,
        spec.table,
        patterns,
        family,
        make_rule(spec.id, pv, mv, root_child),
        spec.sequence.oeis.empty() && spec.sequence.name.empty() ? std::nullopt
                                                                  : std::optional<SequenceInfo>(spec.sequence),
        spec.rule_text,
        spec.note,
        make_color_oracle(spec.id, pv),
        {},
    };
    entry.label_graph = reachable_labels(entry.succession);
    return entry;
}

std::vector<CatalogEntry> catalog(int p, int m)
{
    std::vector<CatalogEntry> out;
    for (const auto& spec : catalog_specs()) {
        if (!spec.family_id.empty() && p < family_info(spec.family_id).min_p) {
            out.push_back(make_entry(spec.id, family_info(spec.family_id).min_p, m));
            continue;
        }
        out.push_back(make_entry(spec.id, p, m));
    }
    return out;
}

std::vector<CatalogEntry> catalog_sweep(int lo, int hi)
{
    std::vector<CatalogEntry> out;
    for (const auto& spec : catalog_specs()) {
        if (spec.family_id.empty()) {
            out.push_back(make_entry(spec.id));
            continue;
        }
        const auto& info = family_info(spec.family_id);
        for (int p = std::max(lo, info.min_p); p <= hi; ++p) {
            if (!info.uses_m) {
                out.push_back(make_entry(spec.id, p));
                continue;
            }
            for (int m = std::max(lo, info.min_m); m <= hi; ++m)
                out.push_back(make_entry(spec.id, p, m));
        }
    }
    return out;
}

std::optional<CatalogEntry> find_entry_for(const PatternSet& patterns, int max_param)
{
    for (const auto& spec : catalog_specs()) {
        if (spec.family_id.empty()) {
            if (concrete_patterns(spec.id).same_patterns(patterns))
                return make_entry(spec.id);
            continue;
        }
        const auto& info = family_info(spec.family_id);
        for (int p = info.min_p; p <= max_param; ++p) {
            for (int m = info.min_m; m <= (info.uses_m ? max_param : info.min_m); ++m) {
                FamilyDescriptor desc{info.id, p, info.uses_m ? std::optional<int>(m) : std::nullopt};
                if (instantiate_family(desc).same_patterns(patterns))
                    return make_entry(spec.id, p, info.uses_m ? std::optional<int>(m) : std::nullopt);
            }
        }
    }
    return std::nullopt;
}

std::string display_id(const CatalogEntry& entry)
{
    if (!entry.family)
        return entry.id;
    std::string out = entry.id + "[";
    if (entry.family->p)
        out += "p=" + std::to_string(*entry.family->p);
    if (entry.family->m)
        out += ",m=" + std::to_string(*entry.family->m);
    return out + "]";
}

bool has_cat_excluded_shape(const Permutation& tau)
{
    const int k = tau.size();
    return k >= 2 && tau[static_cast<std::size_t>(k - 2)] == k && tau[static_cast<std::size_t>(k - 1)] == k - 1;
}

std::optional<Permutation> cat_excluded_pattern(const PatternSet& patterns)
{
    for (const auto& tau : patterns.patterns())
        if (has_cat_excluded_shape(tau))
            return tau;
    return std::nullopt;
}

}  // namespace ecogen
