// Integration tests driving the built binary end to end.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "gotobi/calendar.hpp"

#include "cli_harness.hpp"

namespace fs = std::filesystem;
using cli_harness::run_cli;
using cli_harness::slurp;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("gotobi_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ExitCodeContract) {
    EXPECT_EQ(run_cli("calendar --from 2020-04-02 --to 2020-04-01", dir_).exit_code, 2);
    EXPECT_EQ(run_cli("calendar --from not-a-date --to 2020-04-01", dir_).exit_code, 2);
    EXPECT_EQ(run_cli("backtest --data missing.csv", dir_).exit_code, 3);
    EXPECT_EQ(run_cli("nonsense", dir_).exit_code, 2);
    EXPECT_EQ(run_cli("--help", dir_).exit_code, 0);
    EXPECT_EQ(run_cli("backtest --data x.csv --strategy h3", dir_).exit_code, 2);
}

TEST_F(CliTest, CalendarListsHolidaySubstitution) {
    auto result = run_cli("calendar --from 2020-04-01 --to 2020-04-30 --out labels.csv", dir_);
    ASSERT_EQ(result.exit_code, 0) << result.output;
    const std::string csv = slurp(dir_ / "labels.csv");
    EXPECT_NE(csv.find("2020-04-03,gotobi_effective,2020-04-05"), std::string::npos);
    EXPECT_NE(csv.find("2020-04-20,excluded,2020-04-20"), std::string::npos);
    EXPECT_TRUE(csv.starts_with("# manifest "));
}

TEST_F(CliTest, CalendarRowCountMatchesLibraryEnumeration) {
    auto result =
        run_cli("calendar --from 2018-01-01 --to 2020-12-31 --out labels.csv", dir_);
    ASSERT_EQ(result.exit_code, 0) << result.output;

    std::size_t effective = 0, excluded = 0;
    std::istringstream in(slurp(dir_ / "labels.csv"));
    std::string line;
    while (std::getline(in, line)) {
        if (line.find(",gotobi_effective,") != std::string::npos) ++effective;
        if (line.find(",excluded,") != std::string::npos) ++excluded;
    }

    std::size_t lib_effective = 0, lib_excluded = 0;
    for (const auto& label :
         gotobi::effective_gotobi_days(gotobi::parse_date("2018-01-01"),
                                       gotobi::parse_date("2020-12-31"),
                                       gotobi::TradingCalendar::bundled()))
        (label.kind == gotobi::DayKind::GotobiEffective ? lib_effective : lib_excluded) += 1;
    EXPECT_EQ(effective, lib_effective);
    EXPECT_EQ(excluded, lib_excluded);
    EXPECT_GT(effective, 150u);
}

TEST_F(CliTest, CalendarSamplingIsSeededAndDisjoint) {
    auto a = run_cli("calendar --from 2020-01-01 --to 2020-12-31 --sample 20 --seed 9 --out a.csv",
                     dir_);
    auto b = run_cli("calendar --from 2020-01-01 --to 2020-12-31 --sample 20 --seed 9 --out b.csv",
                     dir_);
    ASSERT_EQ(a.exit_code, 0);
    ASSERT_EQ(b.exit_code, 0);
    EXPECT_EQ(slurp(dir_ / "a.csv"), slurp(dir_ / "b.csv"));

    // Oversampling the pool is a data error.
    EXPECT_EQ(
        run_cli("calendar --from 2020-01-01 --to 2020-01-31 --sample 500 --seed 9", dir_).exit_code,
        3);
}

TEST_F(CliTest, CustomHolidayFileAndEnvDefault) {
    {
        std::ofstream h(dir_ / "hol.csv");
        h << "date,name\n2018-05-10,Ad Hoc Closure\n";
    }
    // 2018-05-10 (Thu) is gotobi; the custom closure shifts it to Wednesday.
    auto result = run_cli(
        "calendar --from 2018-05-01 --to 2018-05-12 --holidays hol.csv --out labels.csv", dir_);
    ASSERT_EQ(result.exit_code, 0) << result.output;
    EXPECT_NE(slurp(dir_ / "labels.csv").find("2018-05-09,gotobi_effective,2018-05-10"),
              std::string::npos);

    // Same file through the environment default.
    ::setenv("GOTOBI_HOLIDAYS", (dir_ / "hol.csv").c_str(), 1);
    auto env_result =
        run_cli("calendar --from 2018-05-01 --to 2018-05-12 --out env_labels.csv", dir_);
    ::unsetenv("GOTOBI_HOLIDAYS");
    ASSERT_EQ(env_result.exit_code, 0) << env_result.output;
    EXPECT_NE(slurp(dir_ / "env_labels.csv").find("2018-05-09,gotobi_effective,2018-05-10"),
              std::string::npos);
}

TEST_F(CliTest, GenerateAnalyzeBacktestPipeline) {
    auto gen = run_cli(
        "generate --from 2020-01-01 --to 2020-03-31 --seed 5 --drift 0.10 --reversal 0.06 "
        "--sigma 0.002 --spread 0.004 --out q.csv",
        dir_);
    ASSERT_EQ(gen.exit_code, 0) << gen.output;
    ASSERT_TRUE(fs::exists(dir_ / "q.csv"));
    ASSERT_TRUE(fs::exists(dir_ / "q.csv.manifest.json"));

    auto analyze = run_cli("analyze --data q.csv --day-set both --seed 3 --out-dir out", dir_);
    ASSERT_EQ(analyze.exit_code, 0) << analyze.output;
    for (const char* name :
         {"analysis_gotobi_profile.csv", "analysis_gotobi_prob.csv", "analysis_gotobi_drift.csv",
          "analysis_nongotobi_profile.csv", "analysis_meta.json"})
        EXPECT_TRUE(fs::exists(dir_ / "out" / name)) << name;

    const auto meta = nlohmann::json::parse(slurp(dir_ / "out" / "analysis_meta.json"));
    EXPECT_EQ(meta.at("anchor"), "09:55");
    EXPECT_EQ(meta.at("day_sets").at("gotobi").at("days_used"),
              meta.at("day_sets").at("nongotobi").at("selected_dates"));
    EXPECT_FALSE(meta.at("manifest").at("digest").get<std::string>().empty());

    auto bt = run_cli(
        "backtest --data q.csv --strategy combined --day-set gotobi --seed 3 "
        "--trades-out t.csv --report-out r.json",
        dir_);
    ASSERT_EQ(bt.exit_code, 0) << bt.output;
    const auto report = nlohmann::json::parse(slurp(dir_ / "r.json"));
    ASSERT_EQ(report.at("runs").size(), 1u);
    const auto& run = report.at("runs")[0];
    EXPECT_EQ(run.at("strategy"), "combined");
    EXPECT_TRUE(run.contains("legs"));
    EXPECT_TRUE(run.contains("profit_factor_infinite"));
    EXPECT_EQ(run.at("n_trades").get<std::size_t>(), run.at("trades").size());
    // Trades CSV embeds the manifest digest of this run.
    const std::string trades = slurp(dir_ / "t.csv");
    const std::string digest = report.at("manifest").at("digest").get<std::string>();
    EXPECT_TRUE(trades.starts_with("# manifest " + digest));
}

TEST_F(CliTest, TwoColumnDataNeedsSpreadFlag) {
    {
        std::ofstream q(dir_ / "p.csv");
        q << "timestamp,price\n2020-04-07T03:00,108.0\n2020-04-07T09:55,108.1\n";
    }
    EXPECT_EQ(run_cli("analyze --data p.csv --day-set gotobi", dir_).exit_code, 3);

    {
        std::ofstream q(dir_ / "p2.csv");
        q << "timestamp,price\n";
        for (int m = 0; m < 800; ++m) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "%02d:%02d", m / 60, m % 60);
            q << "2020-04-10T" << buf << ",108.0\n";  // 04-10 is a gotobi Friday
        }
    }
    auto bt = run_cli(
        "backtest --data p2.csv --strategy h1 --no-gc --spread 0.004 --day-set gotobi "
        "--trades-out t.csv --report-out r.json",
        dir_);
    ASSERT_EQ(bt.exit_code, 0) << bt.output;
    const auto report = nlohmann::json::parse(slurp(dir_ / "r.json"));
    EXPECT_NEAR(report.at("runs")[0].at("total_profit").get<double>(), -0.004, 1e-12);
}

TEST_F(CliTest, BacktestGcHourSweepChangesWindow) {
    auto gen = run_cli(
        "generate --from 2020-01-01 --to 2020-02-28 --seed 11 --drift 0.10 --reversal 0.06 "
        "--sigma 0 --spread 0.004 --anomaly-start 01:40 --out q.csv",
        dir_);
    ASSERT_EQ(gen.exit_code, 0) << gen.output;
    // The cross prints at 01:41: inside [1:30, 2:00) but not [2:30, 3:00).
    auto hour2 = run_cli(
        "backtest --data q.csv --strategy h1 --gc --gc-hour 2 --day-set gotobi "
        "--trades-out t2.csv --report-out r2.json",
        dir_);
    ASSERT_EQ(hour2.exit_code, 0) << hour2.output;
    auto hour3 = run_cli(
        "backtest --data q.csv --strategy h1 --gc --gc-hour 3 --day-set gotobi "
        "--trades-out t3.csv --report-out r3.json",
        dir_);
    ASSERT_EQ(hour3.exit_code, 0) << hour3.output;

    const auto r2 = nlohmann::json::parse(slurp(dir_ / "r2.json"));
    const auto r3 = nlohmann::json::parse(slurp(dir_ / "r3.json"));
    EXPECT_GT(r2.at("runs")[0].at("n_trades").get<std::size_t>(), 0u);
    EXPECT_EQ(r3.at("runs")[0].at("n_trades").get<std::size_t>(), 0u);
    for (const auto& skip : r3.at("runs")[0].at("skipped_days"))
        EXPECT_EQ(skip.at("reason"), "no_golden_cross");

    EXPECT_EQ(run_cli("backtest --data q.csv --strategy h1 --gc --gc-hour 9", dir_).exit_code, 2);
}

TEST_F(CliTest, AnalyzeReportsDaysMissingAnchor) {
    {
        std::ofstream q(dir_ / "q.csv");
        q << "timestamp,bid,ask\n";
        // 2020-04-10 (gotobi Friday) has the anchor; 2020-04-15 (gotobi Wed) lacks it.
        for (int m = 590; m <= 599; ++m)
            q << "2020-04-10T09:" << m - 540 << ",108.0,108.1\n";
        q << "2020-04-15T03:00,108.0,108.1\n";
    }
    auto result = run_cli("analyze --data q.csv --day-set gotobi --out-dir out", dir_);
    ASSERT_EQ(result.exit_code, 0) << result.output;
    const auto meta = nlohmann::json::parse(slurp(dir_ / "out" / "analysis_meta.json"));
    bool found = false;
    for (const auto& skip : meta.at("day_sets").at("gotobi").at("skipped"))
        if (skip.at("date") == "2020-04-15" && skip.at("reason") == "missing_anchor_quote")
            found = true;
    EXPECT_TRUE(found);
}

TEST_F(CliTest, AnalyzeHonorsCustomAnchor) {
    {
        std::ofstream q(dir_ / "q.csv");
        q << "timestamp,bid,ask\n";
        for (int m = 595; m <= 610; ++m) {  // covers 09:55..10:10
            char stamp[8];
            std::snprintf(stamp, sizeof stamp, "%02d:%02d", m / 60, m % 60);
            q << "2020-04-10T" << stamp << ",108.0,108.1\n";
        }
    }
    auto result =
        run_cli("analyze --data q.csv --day-set gotobi --anchor 10:00 --out-dir out", dir_);
    ASSERT_EQ(result.exit_code, 0) << result.output;
    const auto meta = nlohmann::json::parse(slurp(dir_ / "out" / "analysis_meta.json"));
    EXPECT_EQ(meta.at("anchor"), "10:00");
    // The anchor row of the probability curve is zero by definition.
    const std::string prob = slurp(dir_ / "out" / "analysis_gotobi_prob.csv");
    EXPECT_NE(prob.find("\n10:00,0,1"), std::string::npos);

    EXPECT_EQ(run_cli("analyze --data q.csv --anchor 25:00", dir_).exit_code, 2);
}

TEST_F(CliTest, AnalyzeWithNoUsableDaysExitsThree) {
    {
        std::ofstream q(dir_ / "q.csv");
        // 2020-04-07 is a Tuesday, not gotobi.
        q << "timestamp,bid,ask\n2020-04-07T09:55,108.0,108.1\n";
    }
    EXPECT_EQ(run_cli("analyze --data q.csv --day-set gotobi", dir_).exit_code, 3);
}
