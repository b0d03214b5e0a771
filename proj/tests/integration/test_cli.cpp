#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "integration/cli_runner.hpp"
#include "ssclaim/benefits.hpp"
#include "ssclaim/cola_data.hpp"
#include "ssclaim/service.hpp"
#include "ssclaim/version.hpp"

using ssclaim::testing::read_file;
using ssclaim::testing::run_cli;
using json = nlohmann::json;

TEST(Cli, BreakevenMatchesGolden) {
    auto run = run_cli("breakeven");
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_EQ(run.out, read_file(std::string(SSCLAIM_GOLDEN_DIR) + "/breakeven.txt"));
}

TEST(Cli, CriticalMatchesGolden) {
    auto run = run_cli("critical");
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_EQ(run.out, read_file(std::string(SSCLAIM_GOLDEN_DIR) + "/critical.txt"));
}

TEST(Cli, SingleColumnBreakeven) {
    auto run = run_cli("breakeven --q 0 --format json");
    ASSERT_EQ(run.exit_code, 0);
    auto rows = json::parse(run.out)["result"]["rows"];
    ASSERT_EQ(rows.size(), 8u);
    for (const auto& row : rows) {
        EXPECT_EQ(row["n1"].get<double>(), ssclaim::breakeven_no_cola(row["K"].get<double>(), 0.08));
    }
    auto text = run_cli("breakeven --q 0");
    EXPECT_EQ(text.out.find("0.025"), std::string::npos);
}

TEST(Cli, CsvIsByteStable) {
    for (const char* args :
         {"breakeven --format csv", "critical --format csv",
          "gain-curve --K 3 --q 0.025 --r 0.05 --format csv",
          "optimize --r 0.044:0.0598:0.0002 --format csv",
          "optimize --mode at-age --n 10,20 --r 0.045 --format csv"}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        EXPECT_EQ(a.exit_code, 0) << args;
        EXPECT_FALSE(a.out.empty()) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, JsonUsesServiceSchema) {
    auto run = run_cli("optimize --mode at-age --n 20 --r 0.045 --format json");
    ASSERT_EQ(run.exit_code, 0);
    const json cli = json::parse(run.out);
    const json direct = ssclaim::service::optimize(cli["inputs_echo"]);
    EXPECT_EQ(cli, direct);

    auto curve = run_cli("gain-curve --K 1 --r 0.05 --format json");
    ASSERT_EQ(curve.exit_code, 0);
    const json parsed = json::parse(curve.out);
    EXPECT_EQ(parsed, ssclaim::service::gain_curve(parsed["inputs_echo"]));
}

TEST(Cli, GainCurveAtCriticalRate) {
    auto run = run_cli("gain-curve --K 1 --q 0 --r 0.02987 --step 0.01 --format json");
    ASSERT_EQ(run.exit_code, 0);
    const auto samples = json::parse(run.out)["result"]["samples"];
    double min_g = 1e9, min_n = 0.0;
    for (const auto& s : samples) {
        EXPECT_GT(s["g"].get<double>(), -1e-5);
        if (s["g"].get<double>() < min_g) {
            min_g = s["g"].get<double>();
            min_n = s["n"].get<double>();
        }
    }
    EXPECT_NEAR(min_n, 33.98, 0.02);
    EXPECT_NEAR(min_g, 0.0, 1e-5);
}

TEST(Cli, GainCurveCsvShape) {
    auto run = run_cli("gain-curve --K 1 --q 0.025 --r 0.02 --from 1 --to 3 --step 1 --format csv");
    ASSERT_EQ(run.exit_code, 0);
    EXPECT_EQ(run.out.rfind("n,g\n", 0), 0u) << run.out;
    EXPECT_EQ(std::count(run.out.begin(), run.out.end(), '\n'), 4);
}

TEST(Cli, ColaWindows) {
    auto full = run_cli("cola --from 1975 --to 2022 --format json");
    ASSERT_EQ(full.exit_code, 0);
    EXPECT_NEAR(json::parse(full.out)["result"]["average"].get<double>(), 0.03745, 5e-5);

    const auto series = ssclaim::load_series(ssclaim::kDefaultColaDataPath);
    auto single = run_cli("cola --from 2000 --to 2000 --format json");
    EXPECT_EQ(json::parse(single.out)["result"]["average"].get<double>(), series.rate(2000));

    auto text = run_cli("cola --from 1975 --to 2022");
    EXPECT_NE(text.out.find("0.03745"), std::string::npos) << text.out;
}

TEST(Cli, ColaDataFileAndEnvironment) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "ssclaim_cli_flat.csv";
    std::ofstream(path) << "2000,0.05\n2001,0.05\n";
    auto by_flag = run_cli("cola --from 2000 --to 2001 --format json --data-file '" + path.string() + "'");
    ASSERT_EQ(by_flag.exit_code, 0);
    EXPECT_DOUBLE_EQ(json::parse(by_flag.out)["result"]["average"].get<double>(), 0.05);

    auto by_env = run_cli("cola --from 2000 --to 2001 --format json");
    ::setenv("COLA_DATA_PATH", path.c_str(), 1);
    auto with_env = run_cli("cola --from 2000 --to 2001 --format json");
    ::unsetenv("COLA_DATA_PATH");
    EXPECT_DOUBLE_EQ(json::parse(with_env.out)["result"]["average"].get<double>(), 0.05);
    EXPECT_NE(by_env.out, with_env.out);

    std::ofstream(path) << "2000,0.05\n2002,0.05\n";
    EXPECT_EQ(run_cli("cola --from 2000 --to 2001 --data-file '" + path.string() + "'").exit_code, 3);
    std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("breakeven").exit_code, 0);
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("breakeven --bogus 1").exit_code, 2);
    EXPECT_EQ(run_cli("breakeven --format xml").exit_code, 2);
    EXPECT_EQ(run_cli("breakeven --p abc").exit_code, 2);
    EXPECT_EQ(run_cli("breakeven --K 9").exit_code, 2);
    EXPECT_EQ(run_cli("optimize --r 0.02").exit_code, 2);
    EXPECT_EQ(run_cli("optimize --mode at-age --r 0.05").exit_code, 2);
    EXPECT_EQ(run_cli("cola --from 1960 --to 2022").exit_code, 3);
    EXPECT_EQ(run_cli("cola --from 1975 --to 2022 --data-file /nonexistent.csv").exit_code, 3);
    EXPECT_EQ(run_cli("critical --p 0.9 --K 8 --q 0").exit_code, 4);
}

TEST(Cli, ClampedOptimumIsReported) {
    auto run = run_cli("optimize --r 0.06", true);
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_NE(run.out.find("clamped"), std::string::npos) << run.out;
}

TEST(Cli, Version) {
    auto run = run_cli("--version");
    EXPECT_EQ(run.exit_code, 0);
    EXPECT_NE(run.out.find(ssclaim::kVersion), std::string::npos);
}
