#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "mvlab/asymptotics.hpp"
#include "mvlab/cli.hpp"

using namespace mvlab;

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

void expect_json_round_trip(const std::string& line)
{
    ASSERT_FALSE(line.empty());
    ASSERT_EQ(line.back(), '\n');
    const std::string body = line.substr(0, line.size() - 1);
    EXPECT_EQ(nlohmann::ordered_json::parse(body).dump(), body);
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("mvlab-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        setenv("MVLAB_CACHE", dir_.c_str(), 1);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, AgnExample)
{
    const Result r = run({"agn", "--g", "2", "--n", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "29/640\n");
    EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, VolumeExample)
{
    const Result r = run({"volume", "--g", "1", "--n", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"coeff\":\"2/3\",\"pi_half_exponent\":4}\n");
}

TEST_F(CliTest, VerifyTable1)
{
    const Result r = run({"verify", "--suite", "table1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("35/35 entries match"), std::string::npos);
}

TEST_F(CliTest, VerifyOtherSuitesPass)
{
    for (const char* s : {"closed", "lambda", "iz"}) {
        EXPECT_EQ(run({"verify", "--suite", s, "--gmax", "8"}).code, 0) << s;
    }
    EXPECT_EQ(run({"verify", "--suite", "paths", "--gmax", "5"}).code, 0);
    EXPECT_EQ(run({"verify", "--suite", "upath", "--gmax", "8"}).code, 0);
    EXPECT_EQ(run({"verify", "--suite", "funceq", "--gmax", "2"}).code, 0);
}

TEST_F(CliTest, MethodsGiveIdenticalOutput)
{
    for (int g = 0; g <= 5; ++g) {
        for (int n = 2; n <= 6; ++n) {
            const std::vector<std::string> base{"agn", "--g", std::to_string(g), "--n", std::to_string(n), "--format", "json", "--method"};
            auto with = [&](const std::string& m) {
                auto a = base;
                a.push_back(m);
                return run(a).out;
            };
            const std::string d = with("direct");
            EXPECT_EQ(d, with("alt"));
            EXPECT_EQ(d, with("series"));
        }
    }
}

TEST_F(CliTest, JsonRoundTrips)
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"agn", "--g", "3", "--n", "4", "--format", "json"},
             {"volume", "--g", "2", "--n", "3", "--numeric", "128", "--format", "json"},
             {"sv", "--g", "2", "--n", "0", "--format", "json"},
             {"genus", "--g", "4", "--format", "json"},
             {"verify", "--suite", "lambda", "--gmax", "6", "--format", "json"},
             {"asym", "--target", "vol", "--n", "0", "--gmax", "20", "--order", "5", "--format", "json"},
             {"cache", "--format", "json"},
         }) {
        const Result r = run(args);
        EXPECT_LE(r.code, 1) << args[0] << " " << r.err;
        EXPECT_EQ(count_lines(r.out), 1u) << args[0];
        expect_json_round_trip(r.out);
    }
}

TEST_F(CliTest, JsonSchema)
{
    const auto agn = nlohmann::ordered_json::parse(run({"agn", "--g", "2", "--n", "1", "--format", "json"}).out);
    EXPECT_EQ(agn.dump(), R"({"g":2,"n":1,"value":"29/640"})");
    const auto vol = nlohmann::ordered_json::parse(run({"volume", "--g", "1", "--n", "1", "--format", "json"}).out);
    EXPECT_EQ(vol.dump(), R"({"g":1,"n":1,"coeff":"2/3","pi_half_exponent":4})");
    const auto sv = nlohmann::ordered_json::parse(run({"sv", "--g", "1", "--n", "1", "--format", "json"}).out);
    EXPECT_EQ(sv["coeff"], "3/1");
    EXPECT_EQ(sv["pi_half_exponent"], -4);
    const auto v = nlohmann::ordered_json::parse(run({"verify", "--suite", "iz", "--gmax", "4", "--format", "json"}).out);
    EXPECT_EQ(v["suite"], "iz");
    EXPECT_TRUE(v["pass"].get<bool>());
    EXPECT_TRUE(v["cases"].is_array());
}

TEST_F(CliTest, NumericApproximation)
{
    const auto v = nlohmann::ordered_json::parse(run({"volume", "--g", "0", "--n", "4", "--numeric", "64"}).out);
    ASSERT_TRUE(v.contains("approx"));
    EXPECT_NEAR(std::stod(v["approx"].get<std::string>()), 2 * 9.869604401089358, 1e-12);
    EXPECT_EQ(run({"volume", "--g", "0", "--n", "4", "--numeric", "16"}).code, 2);
}

TEST_F(CliTest, CsvOutput)
{
    EXPECT_EQ(run({"agn", "--g", "2", "--n", "1", "--format", "csv"}).out, "g,n,value\n2,1,29/640\n");
    EXPECT_EQ(run({"genus", "--g", "2", "--format", "csv"}).out, "g,j,value\n2,0,7/1440\n2,1,5/1152\n2,2,7/5760\n");
}

TEST_F(CliTest, GenusPlain)
{
    EXPECT_EQ(run({"genus", "--g", "2"}).out, "0\t7/1440\n1\t5/1152\n2\t7/5760\n");
    EXPECT_EQ(run({"genus", "--g", "1"}).code, 2);
}

TEST_F(CliTest, ErrorsAreOneLine)
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"agn", "--g", "1", "--n", "1", "--bogus"},
             {"frobnicate"},
             {"sv", "--g", "0", "--n", "2"},
             {"volume", "--g", "1", "--n", "0"},
             {"agn", "--g", "1", "--n", "1", "--method", "alt"},
             {"verify", "--suite", "nope"},
             {"asym", "--gmax", "12"},
             {"agn", "--g", "-1", "--n", "1"},
         }) {
        const Result r = run(args);
        EXPECT_EQ(r.code, 2) << args[0];
        EXPECT_EQ(count_lines(r.err), 1u) << r.err;
        EXPECT_EQ(r.err.rfind("mvlab: error: ", 0), 0u) << r.err;
    }
}

TEST_F(CliTest, AsymExitCodeFollowsReport)
{
    const Result r = run({"asym", "--target", "sv", "--n", "0,1", "--gmax", "60", "--order", "5"});
    const CompareReport rep = compare_report(AsymTarget::sv, {0, 1}, 60, 5);
    EXPECT_EQ(r.code, rep.pass ? 0 : 1);
    EXPECT_EQ(count_lines(r.out), rep.rows.size() + 1);
}

TEST_F(CliTest, TableGoesToCacheAndIsReused)
{
    const Result t = run({"table", "--gmax", "3", "--nmax", "4"});
    EXPECT_EQ(t.code, 0);
    const fs::path file = dir_ / cache_file_name("direct", 3, 4);
    ASSERT_TRUE(fs::exists(file));

    // A valid but different cached value proves agn reads the cache.
    {
        std::ofstream out(dir_ / cache_file_name("direct", 9, 9), std::ios::binary);
        out << "# agn-table v1\n7\t7\t1/3\n";
    }
    EXPECT_EQ(run({"agn", "--g", "7", "--n", "7"}).out, "1/3\n");
    EXPECT_NE(run({"agn", "--g", "7", "--n", "7", "--method", "series"}).out, "1/3\n");

    const Result list = run({"cache", "--list"});
    EXPECT_EQ(list.code, 0);
    EXPECT_NE(list.out.find(cache_file_name("direct", 3, 4)), std::string::npos);

    const Result clear = run({"cache", "--clear"});
    EXPECT_EQ(clear.code, 0);
    EXPECT_FALSE(fs::exists(file));
}

TEST_F(CliTest, UnreadableCacheFails)
{
    {
        std::ofstream out(dir_ / cache_file_name("direct", 5, 5), std::ios::binary);
        out << "# agn-table v0\n";
    }
    const Result r = run({"agn", "--g", "2", "--n", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("version"), std::string::npos);
    EXPECT_EQ(run({"cache"}).code, 2);
}

TEST_F(CliTest, TableToExplicitFile)
{
    const fs::path out = dir_ / "sub.tsv";
    const Result r = run({"table", "--gmax", "2", "--nmax", "2", "--out", out.string(), "--format", "json"});
    EXPECT_EQ(r.code, 0);
    expect_json_round_trip(r.out);
    std::ifstream in(out);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "# agn-table v1");
}

TEST_F(CliTest, CacheDirResolution)
{
    const char* old_home = std::getenv("HOME");
    const std::string home = old_home ? old_home : "";
    EXPECT_EQ(resolve_cache_dir("/flag/dir"), fs::path("/flag/dir"));
    setenv("MVLAB_CACHE", "/env/dir", 1);
    EXPECT_EQ(resolve_cache_dir(""), fs::path("/env/dir"));
    unsetenv("MVLAB_CACHE");
    setenv("XDG_DATA_HOME", "/xdg", 1);
    EXPECT_EQ(resolve_cache_dir(""), fs::path("/xdg/mvlab"));
    unsetenv("XDG_DATA_HOME");
    setenv("HOME", "/home/someone", 1);
    EXPECT_EQ(resolve_cache_dir(""), fs::path("/home/someone/.local/share/mvlab"));
    EXPECT_EQ(run({"cache", "--dir", dir_.string(), "--format", "json"}).code, 0);
    if (old_home) {
        setenv("HOME", home.c_str(), 1);
    }
}

TEST_F(CliTest, Help)
{
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}
