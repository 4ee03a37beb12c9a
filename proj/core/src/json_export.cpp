#include "ecogen/json_export.hpp"

#include <nlohmann/json.hpp>

namespace ecogen {

using json = nlohmann::ordered_json;

namespace {

json perm_json(const Permutation& perm)
{
    return json(std::vector<int>(perm.begin(), perm.end()));
}

json label_json(Label label)
{
    return json::array({label.k, label.c});
}

json entry_object(const CatalogEntry& entry, std::optional<bool> verified)
{
    json patterns = json::array();
    for (const auto& tau : entry.patterns.patterns())
        patterns.push_back(perm_json(tau));

    json params = json::object();
    if (entry.family) {
        params["family"] = entry.family->family_id;
        if (entry.family->p)
            params["p"] = *entry.family->p;
        if (entry.family->m)
            params["m"] = *entry.family->m;
    }

    json sequence = nullptr;
    if (entry.sequence)
        sequence = {{"oeis", entry.sequence->oeis}, {"name", entry.sequence->name}};

    json table = json::array();
    for (const auto& t : entry.label_graph.transitions)
        table.push_back({{"parent", label_json(t.parent)}, {"site", t.site}, {"child", label_json(t.child)}});

    json labels = json::array();
    for (Label l : entry.label_graph.labels)
        labels.push_back(label_json(l));

    return {
        {"id", display_id(entry)},
        {"base_id", entry.id},
        {"table", entry.table == CatalogTable::regular ? "regular" : "colored"},
        {"patterns", std::move(patterns)},
        {"params", std::move(params)},
        {"sequence_ref", std::move(sequence)},
        {"verified", verified ? json(*verified) : json(nullptr)},
        {"succession",
         {
             {"kind", entry.succession.is_regular() ? "regular" : "colored"},
             {"rule", entry.rule_text},
             {"colors", entry.succession.colors()},
             {"seed", label_json(kSeedLabel)},
             {"root_child", label_json(entry.succession.root_child())},
             {"labels", std::move(labels)},
             {"closed", entry.label_graph.closed},
             {"decision_table", std::move(table)},
             {"issues", entry.label_graph.issues},
         }},
        {"note", entry.note},
    };
}

}  // namespace

std::string entry_json(const CatalogEntry& entry, std::optional<bool> verified, int indent)
{
    return entry_object(entry, verified).dump(indent);
}

std::string catalog_json(std::span<const CatalogEntry> entries, const std::map<std::string, bool>& verified,
                         int indent)
{
    json out = json::array();
    for (const auto& entry : entries) {
        auto it = verified.find(display_id(entry));
        out.push_back(entry_object(entry, it == verified.end() ? std::nullopt : std::optional<bool>(it->second)));
    }
    return out.dump(indent);
}

std::string report_json(const VerificationReport& report, int indent)
{
    json out = {
        {"entry", report.entry_id},
        {"p", report.p ? json(*report.p) : json(nullptr)},
        {"m", report.m ? json(*report.m) : json(nullptr)},
        {"max_n", report.max_n},
        {"status", to_string(report.status)},
        {"level_counts", report.level_counts},
        {"counterexample", nullptr},
    };
    if (report.counterexample) {
        const auto& cx = *report.counterexample;
        out["counterexample"] = {
            {"n", cx.n},
            {"permutation", perm_json(cx.permutation)},
            {"site", cx.site ? json(*cx.site) : json(nullptr)},
            {"expected", cx.expected},
            {"actual", cx.actual},
        };
    }
    return out.dump(indent);
}

std::string inference_json(const InferenceResult& result, int indent)
{
    json out;
    if (const auto* ok = std::get_if<InferredSuccession>(&result)) {
        json table = json::array();
        for (const auto& [key, k_child] : ok->table)
            table.push_back({{"site", key.first}, {"k", key.second}, {"child_k", k_child}});
        out = {{"verdict", "regular"},
               {"empirical_up_to", ok->max_n},
               {"root_child", label_json(ok->root_child)},
               {"table", std::move(table)}};
    } else if (const auto* nrj = std::get_if<NotRightJustified>(&result)) {
        out = {{"verdict", "not-right-justified"}, {"witness", perm_json(nrj->witness)}};
    } else {
        const auto& nr = std::get<NotRegular>(result);
        out = {{"verdict", "not-regular"},
               {"reason", nr.reason},
               {"first", perm_json(nr.first)},
               {"second", nr.second ? perm_json(*nr.second) : json(nullptr)},
               {"site", nr.site},
               {"k", nr.k},
               {"first_child_k", nr.first_k},
               {"second_child_k", nr.second_k}};
    }
    return out.dump(indent);
}

}  // namespace ecogen
