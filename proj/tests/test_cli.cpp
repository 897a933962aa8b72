#include <sstream>

#include <gtest/gtest.h>

#include "vpst/cli.hpp"

using namespace vpst;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "vpst");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, AnalyzeCompleteGraph) {
    const auto r = run({"analyze", "--n", "1", "--set", "all", "--verify"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = ordered_json::parse(r.out);
    EXPECT_EQ(j["n"], 1);
    EXPECT_EQ(j["parity"], "odd");
    EXPECT_TRUE(j["integral"].get<bool>());
    EXPECT_TRUE(j["pstPairs"].empty());
    EXPECT_TRUE(j["types"].is_null());
    std::map<std::int64_t, int> spectrum;
    for (const auto& e : j["spectrum"]) spectrum[e["value"].get<std::int64_t>()] += e["multiplicity"].get<int>();
    EXPECT_EQ(spectrum, (std::map<std::int64_t, int>{{-1, 7}, {7, 1}}));
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, AnalyzeListsDegreeFirst) {
    const auto r = run({"analyze", "--n", "3", "--set", "[b]+[a*b]+[a^2]"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = ordered_json::parse(r.out);
    EXPECT_EQ(j["spectrum"][0]["label"], "alpha_1");
    EXPECT_EQ(j["spectrum"][0]["value"], j["connectionSet"]["size"]);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"analyze", "--n", "1", "--set", "[b^2]"}).code, kExitInvalidSet);
    EXPECT_EQ(run({"analyze", "--n", "1", "--set", "a"}).code, kExitInvalidSet);
    EXPECT_EQ(run({"analyze", "--n", "2", "--set", "[nope]"}).code, kExitUsage);
    EXPECT_EQ(run({"analyze", "--n", "2", "--set", "a^^2"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--n", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "--n", "9"}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"probe", "--n", "1", "--set", "all", "--u", "0", "--v", "8"}).code, kExitUsage);
    EXPECT_EQ(run({"probe", "--n", "1", "--set", "[b^2]", "--u", "0", "--v", "4"}).code, kExitInvalidSet);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
    const auto bad = run({"analyze", "--n", "1", "--set", "[b^2]"});
    EXPECT_NE(bad.err.find("NotGenerating"), std::string::npos);
}

TEST(Cli, SetSpecGrammar) {
    const GroupParams g(2);
    const auto tags = parse_set_spec(g, "[b] + [b^3] + [a] + [a^3]");
    std::string text;
    for (auto it = tags.rbegin(); it != tags.rend(); ++it) text += (text.empty() ? "" : ", ") + to_string(*it);
    const auto listed = parse_set_spec(g, text);
    EXPECT_EQ(validate_connection_set(g, tags), validate_connection_set(g, listed));
    EXPECT_EQ(parse_set_spec(g, "all").size(), 15u);
    EXPECT_THROW(parse_set_spec(g, ""), UsageError);
}

TEST(Cli, ReportRoundTripAndDeterminism) {
    for (int n = 1; n <= 4; ++n) {
        const GroupParams g(n);
        for (const auto& set : enumerate_connection_sets(g, 3)) {
            const auto report = analyze(set, true);
            const ordered_json j = report;
            EXPECT_EQ(j.get<AnalysisReport>(), report);
            EXPECT_EQ(ordered_json(analyze(set, true)).dump(), j.dump());
        }
    }
    const auto a = run({"search", "--n", "2", "--verify", "--jobs", "1"});
    const auto b = run({"search", "--n", "2", "--verify", "--jobs", "3"});
    ASSERT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    const auto summary = ordered_json::parse(a.out).get<SearchSummary>();
    EXPECT_EQ(summary.oracle.disagreements, 0);
    EXPECT_EQ(summary.total, static_cast<int>(enumerate_connection_sets(GroupParams(2), 64).size()));
    EXPECT_EQ(static_cast<int>(summary.graphs.size()), summary.with_pst);
    EXPECT_LE(summary.with_pst, summary.integral);
    EXPECT_EQ(ordered_json(summary).dump(2) + "\n", a.out);
}

TEST(Cli, ProbeReportsTransfer) {
    const auto self = run({"probe", "--n", "1", "--set", "all", "--u", "2", "--v", "2", "--grid", "10", "--tau", "0"});
    ASSERT_EQ(self.code, kExitOk) << self.err;
    EXPECT_DOUBLE_EQ(ordered_json::parse(self.out)["times"][0]["magnitude"].get<double>(), 1.0);

    const auto k8 = ordered_json::parse(run({"probe", "--n", "1", "--set", "all", "--u", "0", "--v", "5", "--grid", "2000"}).out);
    EXPECT_LT(k8["grid"]["magnitude"].get<double>(), 1.0);

    // first positive instance found by the search
    const auto summary = search(GroupParams(2), 9, false, 1);
    ASSERT_FALSE(summary.graphs.empty());
    const auto& graph = summary.graphs.front();
    const auto& pair = graph.pst_pairs.front();
    std::string spec;
    for (const auto& c : graph.classes) spec += (spec.empty() ? "" : "+") + c;
    const auto probe = run({"probe", "--n", "2", "--set", spec, "--u", std::to_string(pair.u), "--v",
                            std::to_string(pair.v), "--grid", "100"});
    ASSERT_EQ(probe.code, kExitOk) << probe.err;
    const auto j = ordered_json::parse(probe.out);
    EXPECT_EQ(j["M"].get<std::int64_t>(), pair.M);
    EXPECT_GT(j["candidates"][0]["magnitude"].get<double>(), 1.0 - 1e-6);
}
