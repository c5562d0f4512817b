#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "dot_check.hpp"
#include "g2ido/cli.hpp"
#include "json.hpp"

using namespace g2ido;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool canonical_rational(const nlohmann::ordered_json &v) {
    static const std::regex re("-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?");
    if (!v.is_string() || !std::regex_match(v.get<std::string>(), re))
        return false;
    const auto parsed = Rational::parse(v.get<std::string>());
    return parsed && parsed->str() == v.get<std::string>();
}

bool canonical_rational(const json &v) { return canonical_rational(nlohmann::ordered_json(v)); }

/// Returns an empty string when the multiplet document matches the schema.
std::string multiplet_schema_error(const nlohmann::ordered_json &j) {
    const std::vector<std::string> keys{"parameters", "parabolic", "case", "nodes", "edges", "components", "specials"};
    std::vector<std::string> got;
    for (auto it = j.begin(); it != j.end(); ++it)
        got.push_back(it.key());
    if (got != keys)
        return "top-level keys";
    if (!canonical_rational(j["parameters"]["m1"]) || !canonical_rational(j["parameters"]["m2"]))
        return "parameters";
    std::set<std::string> ids;
    for (const auto &n : j["nodes"]) {
        for (const char *k : {"n1", "n2", "c", "d"})
            if (!canonical_rational(n[k]))
                return std::string("node rational ") + k;
        if (!n["id"].is_string() || !n["aliases"].is_array())
            return "node id/aliases";
        ids.insert(n["id"].get<std::string>());
    }
    for (const auto &e : j["edges"]) {
        for (const char *k : {"from", "to", "kind", "root", "degree", "family", "m_compact", "retained", "reduced"})
            if (!e.contains(k))
                return std::string("edge key ") + k;
        if (!ids.count(e["from"]) || !ids.count(e["to"]))
            return "edge endpoint";
        const std::string kind = e["kind"];
        if (kind == "KnappStein") {
            if (!e["root"].is_null() || !e["degree"].is_null())
                return "ks root/degree";
        } else if (kind == "DiffOp" || kind == "DegeneratedKS") {
            if (!e["root"].is_number_integer() || e["root"] < 1 || e["root"] > 6 || !e["degree"].is_number_integer() ||
                e["degree"] < 1)
                return "diff root/degree";
        } else {
            return "edge kind";
        }
    }
    std::size_t covered = 0;
    for (const auto &c : j["components"]) {
        static const std::set<std::string> tags{"A1", "B1", "C1", "A2", "B2", "C2", "chain", "quartet", "none"};
        if (!tags.count(c["tag"]))
            return "component tag";
        covered += c["nodes"].size();
    }
    if (covered != ids.size())
        return "components do not partition nodes";
    for (const auto &s : j["specials"])
        if (!ids.count(s["node"]) || !canonical_rational(s["d"]))
            return "special";
    return "";
}

} // namespace

TEST(Cli, RootsTable) {
    const CliResult r = run({"roots"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("α6 | 3α1+2α2 | (1,1,-2) | long | (3α1+2α2)/3 | α1∨+2α2∨\n"), std::string::npos);
    EXPECT_NE(r.out.find("α2 | α2 | (-1,2,-1) | long | α2/3 | α2∨\n"), std::string::npos);
    EXPECT_NE(r.out.find("α4 | 2α1+α2 | (1,0,-1) | short | 2α1+α2 | 2α1∨+3α2∨\n"), std::string::npos);
}

TEST(Cli, RootsJson) {
    const CliResult r = run({"roots", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    ASSERT_EQ(j["roots"].size(), 6u);
    EXPECT_EQ(j["roots"][5]["eps"], json::array({1, 1, -2}));
    EXPECT_EQ(j["roots"][1]["coroot"], "α2/3");
    EXPECT_EQ(j["roots"][3]["coroot_coords"], json::array({"2", "3"}));
}

TEST(Cli, WeylAndParabolics) {
    const CliResult w = run({"weyl", "--format", "json"});
    ASSERT_EQ(w.code, 0);
    const json jw = json::parse(w.out);
    EXPECT_EQ(jw["order"], 12);
    EXPECT_EQ(jw["elements"].back()["label_matrix"], json::parse("[[-1,0],[0,-1]]"));

    const CliResult p = run({"parabolics", "--format", "json"});
    ASSERT_EQ(p.code, 0);
    const json jp = json::parse(p.out);
    EXPECT_EQ(jp["parabolics"][1]["nilradical"]["derived"], json::array({"α6"}));
    EXPECT_EQ(jp["parabolics"][2]["nilradical"]["step"], 3);
    EXPECT_EQ(jp["discrete_series_count"], 3);
    EXPECT_NE(run({"parabolics"}).out.find("P1 | m1 = sl(2,R) | 1 | 5 | {α1}"), std::string::npos);
}

TEST(Cli, MultipletJsonSchema) {
    const std::vector<std::vector<std::string>> inputs{
        {"1", "1", "P0"}, {"0", "2", "P0"}, {"1/3", "2", "P1"}, {"7/2", "1", "P1"}, {"2", "1/5", "P2"},
        {"1", "2/3", "P2"}, {"0", "2/3", "P2"}, {"-3/4", "5/7", "P1"}, {"7/2", "0", "P1"},
    };
    for (const auto &in : inputs) {
        const CliResult r = run({"multiplet", "--m1", in[0], "--m2", in[1], "--parabolic", in[2], "--format", "json"});
        ASSERT_EQ(r.code, 0) << r.err;
        const auto j = nlohmann::ordered_json::parse(r.out);
        EXPECT_EQ(multiplet_schema_error(j), "") << in[0] << " " << in[1] << " " << in[2];
        EXPECT_EQ(json::parse(j.dump()), j);
    }
    const json main = json::parse(run({"multiplet", "--m1", "1", "--m2", "1", "--format", "json"}).out);
    EXPECT_EQ(main["nodes"].size(), 12u);
    EXPECT_EQ(main["case"], "MainMinimal");
    EXPECT_EQ(main["nodes"][0]["c"], "-3/2");
    const json p1 = json::parse(
        run({"multiplet", "--m1", "1/3", "--m2", "2", "--parabolic", "P1", "--format", "json"}).out);
    std::vector<std::string> tags;
    for (const auto &c : p1["components"])
        tags.push_back(c["tag"]);
    EXPECT_EQ(tags, (std::vector<std::string>{"A1", "B1", "C1"}));
}

TEST(Cli, MultipletDotIsValid) {
    for (const auto &in : std::vector<std::vector<std::string>>{
             {"1", "1", "P0"}, {"0", "2", "P0"}, {"1/3", "2", "P1"}, {"0", "2/3", "P2"}, {"7/2", "0", "P1"}}) {
        const CliResult r = run({"multiplet", "--m1", in[0], "--m2", in[1], "--parabolic", in[2], "--format", "dot"});
        ASSERT_EQ(r.code, 0);
        const auto result = dotcheck::check(r.out);
        EXPECT_TRUE(result.ok) << result.error << "\n" << r.out;
    }
    const CliResult chain = run({"multiplet", "--m1", "0", "--m2", "2", "--format", "dot"});
    const auto parsed = dotcheck::check(chain.out);
    EXPECT_EQ(parsed.nodes.size(), 6u);
    EXPECT_NE(chain.out.find("n_12 -> n_212 [label=\"α2 ^ 4\", style=bold];"), std::string::npos);
    EXPECT_NE(chain.out.find("n_0 [label=\"χ_{0} {0,2; -2}\"];"), std::string::npos);
    EXPECT_NE(chain.out.find("[style=dashed, dir=both]"), std::string::npos);
    const CliResult main = run({"multiplet", "--m1", "1", "--m2", "1", "--format", "dot"});
    EXPECT_NE(main.out.find("n_0 -> n_2 [label=\"α2 ^ 1\"];"), std::string::npos);
}

TEST(Cli, DotCheckerRejectsBrokenInput) {
    EXPECT_FALSE(dotcheck::check("digraph g { a -> b; }").ok);
    EXPECT_FALSE(dotcheck::check("digraph g { a [label=\"x]; }").ok);
    EXPECT_FALSE(dotcheck::check("graph g { a; }").ok);
    EXPECT_FALSE(dotcheck::check("digraph g { a; b; a -> b }").ok);
    EXPECT_TRUE(dotcheck::check("digraph g { rankdir=TB; node [shape=box]; a; b; a -> b [x=1, y=\"2\"]; }").ok);
}

TEST(Cli, MultipletTable) {
    const CliResult r = run({"multiplet", "--m1", "0", "--m2", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("case: ReducedM1\n"), std::string::npos);
    EXPECT_NE(r.out.find("0 | 0 | 2 | -2 | -1/2 | 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("chain | 0 2 12 212 1212 21212\n"), std::string::npos);
}

TEST(Cli, Classify) {
    EXPECT_EQ(run({"classify", "--m1", "7/2", "--m2", "1", "--parabolic", "P1"}).out, "P1MainHalfRelaxed\n");
    EXPECT_EQ(run({"classify", "--m1", "1", "--m2", "1", "--parabolic", "P0"}).out, "MainMinimal\n");
    EXPECT_EQ(run({"classify", "--m1", "1/7", "--m2", "1/7"}).out, "Unlisted\n");
    const json j = json::parse(run({"classify", "--m1", "0", "--m2", "2/3", "--parabolic", "P2", "--format", "json"}).out);
    EXPECT_EQ(j["case"], "M21ThirdQuartet");
    EXPECT_EQ(j["parameters"]["m2"], "2/3");
}

TEST(Cli, Dim) {
    EXPECT_EQ(run({"dim", "--m1", "1", "--m2", "1"}).out, "1\n");
    EXPECT_EQ(run({"dim", "--m1", "2", "--m2", "1"}).out, "7\n");
    EXPECT_EQ(run({"dim", "--m1", "1", "--m2", "2"}).out, "14\n");
    for (const auto &bad : std::vector<std::vector<std::string>>{
             {"--m1", "0", "--m2", "1"}, {"--m1", "1/2", "--m2", "1"}, {"--m1", "1", "--m2", "-3"}}) {
        std::vector<std::string> args{"dim"};
        args.insert(args.end(), bad.begin(), bad.end());
        const CliResult r = run(args);
        EXPECT_EQ(r.code, 2);
        EXPECT_NE(r.err.find("positive integer"), std::string::npos);
    }
}

TEST(Cli, Verify) {
    const CliResult r = run({"verify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("all fixtures passed\n"), std::string::npos);
    const auto n = verify_fixtures().size();
    EXPECT_NE(r.out.find(std::to_string(n) + "/" + std::to_string(n) + " fixtures passed"), std::string::npos);
    const json j = json::parse(run({"verify", "--format", "json"}).out);
    ASSERT_TRUE(j.is_array());
    for (const auto &f : j) {
        EXPECT_EQ(f.size(), 4u);
        EXPECT_EQ(f["status"], "pass");
        EXPECT_TRUE(f["expected"].is_string() && f["actual"].is_string() && f["name"].is_string());
    }
}

TEST(Cli, VerifyFailureRendering) {
    const std::vector<FixtureResult> results{{"a", true, "1", "1"}, {"b", false, "2", "3"}};
    const std::string table = cli::render_verify(results, cli::Format::Table);
    EXPECT_NE(table.find("FAIL b\n  expected: 2\n  actual:   3\n"), std::string::npos);
    EXPECT_NE(table.find("1/2 fixtures passed\n"), std::string::npos);
    EXPECT_EQ(table.find("all fixtures passed"), std::string::npos);
}

TEST(Cli, UsageErrorsNameTheFlag) {
    struct Case {
        std::vector<std::string> args;
        const char *needle;
    };
    const Case cases[] = {
        {{"multiplet", "--m1", "0.5", "--m2", "1"}, "--m1"},
        {{"multiplet", "--m1", "1", "--m2", "1/0"}, "--m2"},
        {{"multiplet", "--m1", "1", "--m2", "x"}, "--m2"},
        {{"multiplet", "--m1", "1", "--m2", "1", "--parabolic", "P7"}, "--parabolic"},
        {{"multiplet", "--m1", "1", "--m2", "1", "--format", "xml"}, "--format"},
        {{"multiplet", "--m2", "1"}, "--m1"},
        {{"roots", "--format", "dot"}, "--format"},
        {{"classify", "--m1", "1"}, "--m2"},
        {{"frobnicate"}, "frobnicate"},
        {{}, "subcommand"},
    };
    for (const auto &c : cases) {
        const CliResult r = run(c.args);
        EXPECT_EQ(r.code, 2) << c.needle;
        EXPECT_NE(r.err.find(c.needle), std::string::npos) << r.err;
        EXPECT_TRUE(r.out.empty());
    }
}

TEST(Cli, OverflowExitCode) {
    const CliResult r = run({"multiplet", "--m1", "4611686018427387904", "--m2", "4611686018427387904"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("overflow"), std::string::npos);
    EXPECT_EQ(run({"classify", "--m1", "1/4611686018427387904", "--m2", "3/4611686018427387903"}).code, 3);
}

TEST(Cli, HelpExitsCleanly) {
    const CliResult r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("multiplet"), std::string::npos);
}

TEST(Cli, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "g2ido_cli_out_test.json";
    std::filesystem::remove(path);
    const CliResult r = run({"multiplet", "--m1", "1", "--m2", "1", "--format", "json", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(body, run({"multiplet", "--m1", "1", "--m2", "1", "--format", "json"}).out);
    std::filesystem::remove(path);
    EXPECT_EQ(run({"roots", "--out", "/nonexistent-dir/x/y.txt"}).code, 2);
}

TEST(Cli, RepeatedRunsAreIdentical) {
    const std::vector<std::string> args{"multiplet", "--m1", "7/2", "--m2", "1", "--parabolic", "P1", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
}
