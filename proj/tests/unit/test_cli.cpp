#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ecogen_tools/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "ecogen");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = ecogen::tools::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::multiset<std::string> lines(const std::string& text)
{
    std::multiset<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.insert(line);
    return out;
}

}  // namespace

TEST_CASE("tree, count and check-rj")
{
    const auto tree = run({"tree", "--entry", "padovan-bt", "--depth", "2"});
    CHECK(tree.code == 0);
    CHECK(tree.out == "ε (1,0)\n  1 (2,0)\n    1 2 (2,0)\n    2 1 (3,0)\n");

    const auto c = run({"count", "--entry", "pow2", "--n", "6"});
    CHECK(c.code == 0);
    CHECK(c.out == "32\n");

    const auto rj = run({"check-rj", "--patterns", "1,3,2"});
    CHECK(rj.code == 1);
    CHECK(rj.out == "not right-justified; witness 1 3 2\n");
    CHECK(run({"check-rj", "--patterns", "312;132"}).out == "right-justified\n");
}

TEST_CASE("generate against --oracle")
{
    for (const char* id : {"catalan-321", "schroeder", "padovan-bt", "pell-alt"}) {
        const auto a = run({"generate", "--entry", id, "--n", "6"});
        const auto b = run({"generate", "--entry", id, "--n", "6", "--oracle"});
        CHECK(a.code == 0);
        CHECK(lines(a.out) == lines(b.out));
        const auto c = run({"count", "--entry", id, "--n", "6"});
        CHECK(std::stoull(c.out) == lines(a.out).size());
        CHECK(run({"generate", "--entry", id, "--n", "6"}).out == a.out);
    }
}

TEST_CASE("generate formats and pattern lookup")
{
    const auto json = run({"generate", "--entry", "pow2", "--n", "2", "--format", "json"});
    CHECK(json.out == "[\n[1,2],\n[2,1]\n]\n");
    CHECK(run({"generate", "--entry", "pow2", "--n", "0", "--format", "json"}).out == "[\n[]\n]\n");

    const auto via = run({"generate", "--patterns", "312", "--n", "3", "--transform", "reverse"});
    CHECK(via.code == 0);
    CHECK(via.err.empty());
    CHECK(lines(via.out).size() == 5);
    CHECK(lines(via.out).count("2 1 3") == 0);

    const auto fallback = run({"generate", "--patterns", "132", "--n", "4"});
    CHECK(fallback.code == 0);
    CHECK(fallback.err.find("oracle") != std::string::npos);
    CHECK(lines(fallback.out).size() == 14);
}

TEST_CASE("verify and infer exit codes")
{
    const auto ok = run({"verify", "--entry", "catalan-312", "--max-n", "6"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("pass") != std::string::npos);

    const auto bad = run({"verify", "--entry", "genfib-c", "--params", "p=3", "--max-n", "6", "--format", "json"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("\"count_mismatch\"") != std::string::npos);

    CHECK(run({"infer", "--patterns", "312", "--max-n", "5"}).code == 0);
    CHECK(run({"infer", "--patterns", "312;2431", "--max-n", "6"}).code == 1);
    CHECK(run({"infer", "--patterns", "132", "--max-n", "4"}).code == 1);
}

TEST_CASE("usage errors name the flag")
{
    const auto cases = std::vector<std::pair<std::vector<std::string>, std::string>>{
        {{"count", "--entry", "nope", "--n", "3"}, "--entry"},
        {{"count", "--entry", "pow2", "--n", "x"}, "--n"},
        {{"generate", "--entry", "avoid321-pm", "--params", "p=1", "--n", "3"}, "--params"},
        {{"generate", "--entry", "avoid321-pm", "--params", "q=1", "--n", "3"}, "--params"},
        {{"generate", "--patterns", "3;1;2;x", "--n", "3"}, "--patterns"},
        {{"verify", "--entry", "pow2", "--max-n", "11"}, "--max-n"},
        {{"tree", "--entry", "pow2", "--depth", "9"}, "--depth"},
        {{"generate", "--entry", "pow2", "--n", "3", "--format", "xml"}, "--format"},
    };
    for (const auto& [args, flag] : cases) {
        const auto r = run(args);
        CHECK(r.code == 2);
        CHECK_MESSAGE(r.err.find(flag) != std::string::npos, r.err);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
    CHECK(run({}).code == 2);
}

TEST_CASE("list")
{
    const auto r = run({"list", "--no-verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pell-alt\t312, 4321, 3421\tA000129") != std::string::npos);
    const auto j = run({"list", "--format", "json", "--max-n", "5"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"decision_table\"") != std::string::npos);
}
