#include <cstdlib>
#include <fstream>

#include <gtest/gtest.h>

#include "cli_harness.hpp"

using namespace pbn_test;

TEST(Golden, ScriptHasTwentyCommands)
{
    EXPECT_EQ(load_script().size(), 20u);
}

TEST(Golden, OutputsMatchByteForByte)
{
    // PBN_UPDATE_GOLDEN=1 rewrites the stored files from the current binary
    bool update = std::getenv("PBN_UPDATE_GOLDEN") != nullptr;
    for (auto& c : load_script()) {
        auto res = run_pbn(c.args);
        EXPECT_EQ(res.exit_code, 0) << c.name;
        if (update) {
            std::ofstream(golden_path(c), std::ios::binary) << res.out;
            continue;
        }
        EXPECT_EQ(res.out, read_file(golden_path(c))) << c.name;
    }
}

TEST(Golden, RepeatedRunsAreIdentical)
{
    for (auto& c : load_script())
        EXPECT_EQ(run_pbn(c.args).out, run_pbn(c.args).out) << c.name;
}

TEST(ExitCodes, UsageErrors)
{
    EXPECT_EQ(run_pbn("dim --locus V_eta --g 4 --k 3 --r 1").exit_code, 2);
    EXPECT_EQ(run_pbn("dim --locus V_eta --g 4 --k 1").exit_code, 2);
    EXPECT_EQ(run_pbn("count --g 4 --k 1 --r 1").exit_code, 2);
    EXPECT_EQ(run_pbn("count --g 4 --k 0 --r 1").exit_code, 2);
    EXPECT_EQ(run_pbn("bogus").exit_code, 2);
    EXPECT_EQ(run_pbn("").exit_code, 2);
    EXPECT_EQ(run_pbn("--format xml count --g 3 --k 1 --r 1").exit_code, 2);
}

TEST(ExitCodes, EmptyLocusIsSuccess)
{
    auto res = run_pbn("limits --flavor unramified --g 2 --r 2");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.out.find("\"empty\": true"), std::string::npos);
}

TEST(Verify, SmallBoundsPass)
{
    auto res = run_pbn("verify --max-weight 20 --max-g 10 --max-r 4");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.out.find("\"all_passed\": true"), std::string::npos);
}

TEST(Verify, ZeroWeightIsVacuousPass)
{
    EXPECT_EQ(run_pbn("verify --max-weight 0 --max-g 0 --max-r 0").exit_code, 0);
}

TEST(Formats, CsvAndMarkdown)
{
    auto csv = run_pbn("--format csv count --g 3 --k 1 --r 1");
    EXPECT_EQ(csv.exit_code, 0);
    EXPECT_EQ(csv.out.rfind("/citations/0,/command,/params/g,/params/k,/params/r,", 0), 0u) << csv.out;

    auto md = run_pbn("--format md count --g 3 --k 1 --r 1");
    EXPECT_EQ(md.exit_code, 0);
    EXPECT_NE(md.out.find("| /result/count | 2 |"), std::string::npos);
}
