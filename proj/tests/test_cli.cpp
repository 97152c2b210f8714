#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "forge_cli.hpp"

using namespace drinfeld;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "drinfeld-forge");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() / ("drinfeld-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                           "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    fs::path dir;
};

}  // namespace

TEST_F(Cli, BuildA1WritesSixLabels)
{
    const auto file = dir / "a1.json";
    const auto r = run({"build", "--series", "A", "--rank", "1", "--out", file.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(slurp(file));
    std::vector<std::string> want;
    for (const auto& g : enumerate_generators(Series::A, 1)) want.push_back(g.label());
    EXPECT_EQ(j["basis"].get<std::vector<std::string>>(), want);
    EXPECT_FALSE(j.contains("rotated"));
}

TEST_F(Cli, BuildMixedD2CarriesRotatedTable)
{
    const auto r = run({"build", "--series", "D", "--rank", "2", "--spec", "mixed:pairs=1-2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    const auto t = split(build_series(Series::D, 2), SplittingSpec::parse("mixed:pairs=1-2"));
    EXPECT_EQ(j["rotated"], rotated_json(t));
}

TEST_F(Cli, RankAndArgumentErrors)
{
    EXPECT_EQ(run({"build", "--series", "D", "--rank", "1"}).code, 2);
    EXPECT_EQ(run({"build", "--series", "E", "--rank", "2"}).code, 2);
    EXPECT_EQ(run({"build", "--rank", "2"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"verify", "--series", "A", "--rank", "1", "--cutoff", "3"}).code, 2);
    EXPECT_EQ(run({"verify", "--series", "A", "--rank", "1", "--spec", "mixed:pairs=1-3"}).code, 2);
    EXPECT_EQ(run({"export", "--series", "A", "--rank", "1", "--what", "weights"}).code, 2);
    EXPECT_EQ(run({"export", "--series", "A", "--rank", "1", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"build", "--help"}).code, 0);
}

TEST_F(Cli, UnknownCheckRejectedBeforeWork)
{
    const auto r = run({"verify", "--series", "A", "--rank", "1", "--checks", "jacobi,bogus"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("bogus"), std::string::npos);
}

TEST_F(Cli, WriteFailureExitsThree)
{
    const auto r = run({"build", "--series", "A", "--rank", "1", "--out", (dir / "missing" / "x.json").string()});
    EXPECT_EQ(r.code, 3);
}

TEST_F(Cli, VerifyB2Subset)
{
    const auto r = run({"verify", "--series", "B", "--rank", "2", "--checks", "cybe,jacobi,compatibility,cocycle"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::vector<std::string> names;
    std::string line;
    while (std::getline(lines, line)) {
        EXPECT_EQ(line.rfind("PASS ", 0), 0U) << line;
        names.push_back(line.substr(5, line.find(' ', 5) - 5));
    }
    EXPECT_EQ(names, (std::vector<std::string>{"jacobi", "compatibility", "cocycle", "cybe"}));
}

TEST_F(Cli, AnIsNotASubBialgebra)
{
    const auto r = run({"verify", "--series", "A", "--rank", "2", "--checks", "subbialg", "--sub", "An"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("FAIL subbialg", 0), 0U);
    EXPECT_EQ(run({"verify", "--series", "B", "--rank", "2", "--checks", "subbialg", "--sub", "An"}).code, 2);
}

TEST_F(Cli, BosonicRepC2)
{
    const auto r = run({"verify", "--series", "C", "--rank", "2", "--checks", "rep", "--cutoff", "6"});
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(Cli, JsonReport)
{
    const auto r = run({"verify", "--series", "A", "--rank", "1", "--json", "--checks", "jacobi,pairing"});
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["pass"], true);
    ASSERT_EQ(j["results"].size(), 2U);
    EXPECT_EQ(j["results"][0]["check"], "jacobi");
    EXPECT_EQ(j["spec"]["mode"], "canonical");
}

TEST_F(Cli, MixedSpecDefaultSuiteSkipsCanonicalOnlyChecks)
{
    const auto r = run({"verify", "--series", "D", "--rank", "2", "--spec", "mixed:pairs=1-2"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(r.out.find("delta-agree"), std::string::npos);
    EXPECT_NE(r.out.find("PASS selfdual"), std::string::npos);
    EXPECT_EQ(run({"verify", "--series", "D", "--rank", "2", "--spec", "mixed:pairs=1-2", "--checks", "twist"}).code, 2);
}

TEST_F(Cli, FullCanonicalSuite)
{
    const auto r = run({"verify", "--series", "A", "--rank", "2"});
    EXPECT_EQ(r.code, 0) << r.out;
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    EXPECT_EQ(lines, cli::check_order().size());
}

TEST_F(Cli, ExportRMatrixB1)
{
    const auto r = run({"export", "--series", "B", "--rank", "1", "--what", "rmatrix"});
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["wedge"], rmatrix_json(build_r_matrix(*cached_split(Series::B, 1, SplittingSpec{})))["wedge"]);
    EXPECT_NE(r.out.find(R"("a": "U1")"), std::string::npos);
    EXPECT_NE(r.out.find(R"("a": "H1")"), std::string::npos);
}

TEST_F(Cli, ExportDeltaText)
{
    const auto r = run({"export", "--series", "C", "--rank", "2", "--what", "delta", "--format", "text"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, cocommutator_text(cocommutator_from_structure(*cached_split(Series::C, 2, SplittingSpec{}))));
}

TEST_F(Cli, ExportsAreByteStable)
{
    for (const std::string what : {"brackets", "delta", "rmatrix", "pairing"}) {
        const auto a = dir / ("a-" + what), b = dir / ("b-" + what);
        ASSERT_EQ(run({"export", "--series", "B", "--rank", "2", "--what", what, "--out", a.string()}).code, 0);
        ASSERT_EQ(run({"export", "--series", "B", "--rank", "2", "--what", what, "--out", b.string()}).code, 0);
        EXPECT_EQ(slurp(a), slurp(b)) << what;
        EXPECT_FALSE(slurp(a).empty());
    }
}

TEST_F(Cli, ExportMatrices)
{
    const auto out = dir / "mats";
    ASSERT_EQ(run({"export", "--series", "B", "--rank", "1", "--what", "matrices", "--out", out.string()}).code, 0);
    EXPECT_EQ(slurp(out / "H1.txt"), "0 0 -1/2 0 0 0\n1 1 1/2 0 0 0\n");
    EXPECT_TRUE(fs::exists(out / "V1.txt"));
    ASSERT_EQ(run({"export", "--series", "C", "--rank", "1", "--what", "matrices", "--out", (dir / "c").string()}).code, 0);
    EXPECT_TRUE(fs::exists(dir / "c" / "P1_1.txt"));
    EXPECT_EQ(run({"export", "--series", "B", "--rank", "1", "--what", "matrices"}).code, 2);
}

TEST_F(Cli, ExportDiscrepancies)
{
    const auto r = run({"export", "--series", "C", "--rank", "1", "--what", "discrepancies"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("δ(Q1,1)"), std::string::npos);
}

TEST_F(Cli, ConfigFileFillsUnsetFlags)
{
    const auto cfg = dir / "cfg.json";
    std::ofstream(cfg) << R"({"series":"B","rank":2,"checks":["jacobi","cocycle"],"spec":"canonical"})";
    const auto r = run({"verify", "--config", cfg.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("PASS cocycle"), std::string::npos);
    // a command-line flag wins over the file
    const auto r2 = run({"verify", "--config", cfg.string(), "--checks", "cybe"});
    EXPECT_EQ(r2.out.rfind("PASS cybe", 0), 0U);
    std::ofstream(dir / "bad.json") << R"({"seriess":"B"})";
    EXPECT_EQ(run({"verify", "--config", (dir / "bad.json").string()}).code, 2);
}

TEST_F(Cli, JobsFlagDoesNotChangeResults)
{
    const auto one = run({"verify", "--series", "C", "--rank", "2", "--jobs", "1", "--json"});
    const auto many = run({"verify", "--series", "C", "--rank", "2", "--jobs", "4", "--json"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, many.out);
}
