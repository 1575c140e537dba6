/*
   Copyright 2026 The fockcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fockcheck/cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <iostream>
#include <sstream>

namespace fockcheck {
namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FOCKCHECK_TEST_DATA) + "/" + name; }

nlohmann::ordered_json report(const Invocation& r) { return nlohmann::ordered_json::parse(r.out); }

TEST(Cli, ThetaReportsOneFromBothRoutes) {
    const Invocation r = run({"identity", "theta", "--j", "2", "--l", "3", "--m", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = report(r);
    EXPECT_EQ(j["results"]["definitional"], "1");
    EXPECT_EQ(j["results"]["closed"], "1");
    EXPECT_EQ(j["results"]["value"], "1");
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "context", "results", "checks", "elapsed_ms"}));
}

TEST(Cli, SemicommReportsVerdict) {
    const Invocation r = run({"semicomm", "--input", data("kernel_pair_m1.json"), "--truncation", "40", "--precision", "60",
                       "--tolerance", "1e-20", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = report(r);
    EXPECT_EQ(j["results"]["verdict"]["decision"], "NonZero");
    EXPECT_TRUE(j["results"].contains("max_entry"));
    EXPECT_EQ(j["inputs"]["m"], 1);
}

TEST(Cli, ForcedMismatchExitsThree) {
    const Invocation r = run({"check", "--input", data("forced_mismatch.json"), "--precision", "30", "--tolerance", "1e-15",
                       "--truncation", "40"});
    EXPECT_EQ(r.code, kExitInconsistent);
    EXPECT_NE(r.err.find("theorem route says Zero"), std::string::npos);
}

TEST(Cli, ConsistentPairsExitZero) {
    EXPECT_EQ(run({"check", "--input", data("constant_f.json")}).code, 0);
    EXPECT_EQ(run({"check", "--input", data("polynomial_pair.json")}).code, 0);
    EXPECT_EQ(run({"check", "--input", data("lattice_pair_m0.json"), "--truncation", "60", "--precision", "80"}).code, 0);
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(run({"semicomm"}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"kernel", "--x", "1,0", "--precision", "10"}).code, kExitUsage);
    EXPECT_EQ(run({"kernel", "--x", "1,0", "--tolerance", "abc"}).code, kExitUsage);
    EXPECT_EQ(run({"identity", "theta", "--j", "3", "--l", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"semicomm", "--input", data("kernel_pair_m1.json"), "--m", "2"}).code, kExitUsage);
    const Invocation bad = run({"semicomm", "--input", data("malformed.json")});
    EXPECT_EQ(bad.code, kExitUsage);
    EXPECT_NE(bad.err.find("f.terms[0].c.re"), std::string::npos);
}

TEST(Cli, TruncationGuardExitsTwo) {
    const Invocation r = run({"semicomm", "--input", data("wide_nodes.json")});
    EXPECT_EQ(r.code, kExitNumeric);
    EXPECT_NE(r.err.find("truncation"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
    const std::vector<std::string> args{"check", "--input", data("kernel_pair_m1.json"), "--truncation", "30",
                                        "--precision", "40", "--no-timing", "--format", "json"};
    const Invocation a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--jobs", "3"});
    const Invocation c = run(threaded);
    EXPECT_EQ(report(a)["results"], report(c)["results"]);
}

/// Same flattening rule as the text format.
void flatten(const nlohmann::ordered_json& v, const std::string& prefix, std::ostream& out) {
    if (v.is_object()) {
        if (v.empty()) out << prefix << ": {}\n";
        for (const auto& [k, item] : v.items()) flatten(item, prefix.empty() ? k : prefix + "." + k, out);
    } else if (v.is_array()) {
        if (v.empty()) out << prefix << ": []\n";
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

TEST(Cli, TextAndJsonCarryTheSamePayload) {
    const std::vector<std::string> base{"identity", "rho-chain", "--m", "3", "--x", "0.5,-1", "--no-timing"};
    auto as_json = base;
    as_json.insert(as_json.end(), {"--format", "json"});
    auto as_text = base;
    as_text.insert(as_text.end(), {"--format", "text"});
    const Invocation j = run(as_json), t = run(as_text);
    ASSERT_EQ(j.code, 0);
    ASSERT_EQ(t.code, 0);
    auto doc = report(j);
    // argv differs only in the format flag.
    doc["command"]["argv"] = nlohmann::ordered_json(as_text);
    std::ostringstream flat;
    flatten(doc, "", flat);
    EXPECT_EQ(flat.str(), t.out);
}

TEST(Cli, ReadsStdinAndWritesOutFile) {
    std::ifstream in(data("polynomial_pair.json"));
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::istringstream fake(buffer.str());
    auto* saved = std::cin.rdbuf(fake.rdbuf());
    const std::string path = ::testing::TempDir() + "/fockcheck_report.json";
    const Invocation r = run({"semicomm", "--input", "-", "--out", path, "--format", "json"});
    std::cin.rdbuf(saved);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream written(path);
    const auto j = nlohmann::ordered_json::parse(written);
    EXPECT_EQ(j["results"]["verdict"]["decision"], "NonZero");
}

TEST(Cli, OtherCommands) {
    EXPECT_EQ(run({"kernel", "--m", "2", "--x", "0.3,1"}).code, 0);
    EXPECT_EQ(run({"toeplitz", "--input", data("mixed_symbol.json"), "--truncation", "8"}).code, 0);
    EXPECT_EQ(run({"toeplitz", "--input", data("kernel_pair_m1.json"), "--operator", "conjugate", "--truncation", "14"}).code, 0);
    EXPECT_EQ(run({"berezin", "--input", data("kernel_pair_m1.json"), "--z", "1,1"}).code, 0);
    EXPECT_EQ(run({"semicomm", "--input", data("kernel_pair_m1.json"), "--truncation", "30", "--entry", "2,3"}).code, 0);
    EXPECT_EQ(run({"identity", "xi", "--j", "4", "--l", "6", "--m", "2"}).code, 0);
    EXPECT_EQ(run({"identity", "q", "--j", "4", "--l", "6", "--m", "2"}).code, 0);
    EXPECT_EQ(run({"identity", "cjl", "--j", "3", "--l", "4", "--m", "1", "--A", "0.5,0.5", "--B", "1,-1",
                   "--truncation", "60"}).code, 0);
    EXPECT_EQ(run({"identity", "rho", "--m", "1", "--x", "1,2"}).code, 0);
    EXPECT_EQ(run({"identity", "obstruction", "--m", "4"}).code, 0);
    EXPECT_EQ(run({"identity", "exp-kernel", "--m", "3", "--a", "1.5,-0.5"}).code, 0);
    EXPECT_EQ(run({"identity", "vandermonde", "--nodes", "1,0;0,1;2,2"}).code, 0);
    const Invocation roots = run({"roots", "--m", "0", "--format", "json"});
    ASSERT_EQ(roots.code, 0);
    EXPECT_EQ(report(roots)["results"]["count"], "8");
    EXPECT_EQ(run({"verify-all", "--suite", "xi-expansion", "--suite", "theta"}).code, 0);
    EXPECT_EQ(run({"verify-all", "--suite", "nope"}).code, kExitUsage);
}

}  // namespace
}  // namespace fockcheck
