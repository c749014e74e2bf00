#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace {

struct result {
    int code;
    std::string out;
    std::string err;
};

result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "abcore");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = abcore::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CoresJson) {
    const auto r = invoke({"cores", "--a", "3", "--b", "7", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["count"], 12);
    EXPECT_EQ(j["total"], 66);
    EXPECT_EQ(j["average"], "11/2");
    EXPECT_EQ(j["matches"], true);
    EXPECT_EQ(j["proved_family"], true);
    EXPECT_EQ(j["cores"].size(), 12u);
    EXPECT_EQ(j["cores"][0], nlohmann::json::array());
}

TEST(Cli, CoresCsvAndPlain) {
    const auto csv = invoke({"cores", "--a", "2", "--b", "5", "--format", "csv"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out, "index,size,parts\n0,0,\n1,1,1\n2,3,2 1\n");
    const auto plain = invoke({"cores", "--a", "4", "--b", "7"});
    EXPECT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("report only"), std::string::npos);
}

TEST(Cli, NonCoprimeIsUsageError) {
    const auto r = invoke({"cores", "--a", "2", "--b", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("NonCoprime"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"bogus"}).code, 2);
    EXPECT_EQ(invoke({"cores", "--a", "3"}).code, 2);
    EXPECT_EQ(invoke({"cores", "--a", "3", "--b", "7", "--format", "yaml"}).code, 2);
    EXPECT_EQ(invoke({"cores", "--a", "3", "--b", "7", "--format", "dot"}).code, 2);
    EXPECT_EQ(invoke({"series-verify", "--m", "2", "--order", "40"}).code, 2);
    EXPECT_EQ(invoke({"stats", "--m", "2", "--max-n", "3", "--j", "1"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, InvalidFamily) {
    const auto r = invoke({"poset", "--m", "2", "--j", "2", "--n", "3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("InvalidFamily"), std::string::npos);
}

TEST(Cli, EnumerationGuard) {
    const auto r = invoke({"stats", "--m", "3", "--max-n", "8"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("EnumerationTooLarge"), std::string::npos);
}

TEST(Cli, PosetDefaultsToDot) {
    const auto r = invoke({"poset", "--a", "3", "--b", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("digraph hasse {", 0), 0u);
    EXPECT_NE(r.out.find("5 -> 1;"), std::string::npos);
    const auto fam = invoke({"poset", "--m", "3", "--j", "2", "--n", "1", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(fam.out)["elements"], nlohmann::json::array({5}));
}

TEST(Cli, StatsCsv) {
    const auto r = invoke({"stats", "--m", "2", "--max-n", "2", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "m,j,n,A,T,R,G\n"
              "2,0,0,1,0,0,0\n2,0,1,1,0,0,0\n2,0,2,3,3,1,4\n"
              "2,1,0,1,0,0,0\n2,1,1,2,1,1,3\n2,1,2,7,13,18,65\n");
}

TEST(Cli, SeriesVerifyJsonSchema) {
    const auto r = invoke({"series-verify", "--m", "2", "--order", "8", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    ASSERT_FALSE(j.empty());
    for (const auto& e : j) {
        EXPECT_TRUE(e.contains("identity_name"));
        EXPECT_EQ(e["m"], 2);
        EXPECT_EQ(e["effective_order"], 8);
        EXPECT_EQ(e["residual_max_abs"], "0");
        EXPECT_EQ(e["pass"], true);
    }
}

TEST(Cli, RecursionsHideErrataByDefault) {
    const auto plain = invoke({"recursions", "--m", "3", "--max-n", "4", "--format", "json"});
    EXPECT_EQ(plain.code, 0);
    for (const auto& e : nlohmann::json::parse(plain.out)) EXPECT_EQ(e["as_printed"], false);
    const auto printed = invoke({"recursions", "--m", "3", "--max-n", "4", "--as-printed"});
    EXPECT_EQ(printed.code, 1);
    EXPECT_NE(printed.out.find("as printed"), std::string::npos);
}

TEST(Cli, CrossCheck) {
    EXPECT_EQ(invoke({"cross-check", "--m", "2", "--max-n", "4"}).code, 0);
    const auto one = invoke({"cross-check", "--m", "3", "--max-n", "3", "--j", "2", "--format", "json"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(nlohmann::json::parse(one.out).size(), 16u);
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::string> args{"stats", "--m", "3", "--max-n", "4", "--format", "json"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, WritesToOutputDir) {
    const auto dir = std::filesystem::temp_directory_path() / "abcore_cli_test";
    std::filesystem::create_directories(dir);
    ::setenv("ABCORE_OUTPUT_DIR", dir.c_str(), 1);
    const auto r = invoke({"poset", "--a", "3", "--b", "7"});
    ::unsetenv("ABCORE_OUTPUT_DIR");
    ASSERT_EQ(r.code, 0);
    std::ifstream in(dir / "poset.dot");
    std::stringstream file;
    file << in.rdbuf();
    EXPECT_EQ(file.str(), r.out);
    std::filesystem::remove_all(dir);
}
