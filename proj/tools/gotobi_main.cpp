// Command-line front end: deterministic, seed-driven runs that turn minute
// quote data into plot-ready CSV/JSON (calendar labels, intraday statistics,
// strategy backtests, synthetic datasets).
//
// Exit codes: 0 success, 2 usage/argument error, 3 data error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "gotobi/analysis.hpp"
#include "gotobi/calendar.hpp"
#include "gotobi/manifest.hpp"
#include "gotobi/marketdata.hpp"
#include "gotobi/metrics.hpp"
#include "gotobi/report_io.hpp"
#include "gotobi/rng.hpp"
#include "gotobi/sha256.hpp"
#include "gotobi/synthdata.hpp"

namespace {

using namespace gotobi;

Date parse_date_flag(const std::string& text, const char* flag) {
    try {
        return parse_date(text);
    } catch (const ParseError& e) {
        throw ArgumentError(std::string(flag) + ": " + e.what());
    }
}

MinuteOfDay parse_minute_flag(const std::string& text, const char* flag) {
    const auto colon = text.find(':');
    auto fail = [&] {
        throw ArgumentError(std::string(flag) + ": expected HH:MM, got '" + text + "'");
    };
    if (text.size() != 5 || colon != 2) fail();
    for (std::size_t i : {0u, 1u, 3u, 4u})
        if (text[i] < '0' || text[i] > '9') fail();
    const int hh = (text[0] - '0') * 10 + (text[1] - '0');
    const int mm = (text[3] - '0') * 10 + (text[4] - '0');
    if (hh > 23 || mm > 59) fail();
    return MinuteOfDay::at(hh, mm);
}

struct CalendarSource {
    TradingCalendar calendar;
    std::string source;  // path or "bundled"
};

CalendarSource resolve_calendar(const std::string& holidays_flag) {
    std::string path = holidays_flag;
    if (path.empty())
        if (const char* env = std::getenv("GOTOBI_HOLIDAYS"); env && *env) path = env;
    if (path.empty()) return {TradingCalendar::bundled(), "bundled"};
    return {TradingCalendar::from_csv_file(path), path};
}

// Digest over the resolved holiday set, independent of where it came from.
std::string holiday_digest(const TradingCalendar& cal) {
    Sha256 h;
    for (Date d : cal.holidays()) {
        h.update(to_string(d));
        h.update("\n");
    }
    return h.hex_digest();
}

std::string join_command_line(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write output file: " + path.string());
    out << content;
}

struct LoadedData {
    std::vector<DaySeries> days;
    Date first{};
    Date last{};
    std::string digest;
};

LoadedData load_data(const std::string& path, double spread_flag) {
    if (spread_flag < 0.0) throw ArgumentError("--spread must be non-negative");
    CsvOptions options;
    if (spread_flag > 0.0) options.synthetic_spread = Price::from_yen(spread_flag);
    LoadedData data;
    data.days = load_quotes_file(path, options);
    if (data.days.empty()) throw DataError("no quotes in " + path);
    data.first = data.days.front().date();
    data.last = data.days.back().date();
    data.digest = sha256_hex_file(path);
    return data;
}

struct Selection {
    std::string name;  // "gotobi" or "nongotobi"
    std::vector<DaySeries> days;
    std::vector<SkippedDay> no_data;  // selected by the calendar, absent from data
    std::size_t selected_dates = 0;
    std::vector<Date> sampled;  // non-gotobi control dates
};

Selection select_gotobi(const LoadedData& data, const TradingCalendar& cal, Date from, Date to) {
    std::map<Date, const DaySeries*> by_date;
    for (const DaySeries& day : data.days) by_date[day.date()] = &day;

    Selection sel;
    sel.name = "gotobi";
    for (const DayLabel& label : effective_gotobi_days(from, to, cal)) {
        if (label.kind != DayKind::GotobiEffective) continue;
        ++sel.selected_dates;
        if (auto it = by_date.find(label.date); it != by_date.end())
            sel.days.push_back(*it->second);
        else
            sel.no_data.push_back({label.date, SkipReason::NoData});
    }
    return sel;
}

Selection select_non_gotobi(const LoadedData& data, const TradingCalendar& cal, Date from,
                            Date to, std::size_t count, std::uint64_t seed) {
    std::map<Date, const DaySeries*> by_date;
    for (const DaySeries& day : data.days) by_date[day.date()] = &day;

    Selection sel;
    sel.name = "nongotobi";
    sel.sampled = sample_non_gotobi(from, to, count, cal, seed);
    sel.selected_dates = sel.sampled.size();
    for (Date d : sel.sampled) {
        if (auto it = by_date.find(d); it != by_date.end())
            sel.days.push_back(*it->second);
        else
            sel.no_data.push_back({d, SkipReason::NoData});
    }
    return sel;
}

std::vector<Selection> select_day_sets(const std::string& day_set, const LoadedData& data,
                                       const TradingCalendar& cal, Date from, Date to,
                                       std::uint64_t seed) {
    std::vector<Selection> sets;
    Selection gotobi = select_gotobi(data, cal, from, to);
    if (day_set == "gotobi" || day_set == "both") sets.push_back(gotobi);
    if (day_set == "non-gotobi" || day_set == "both")
        sets.push_back(select_non_gotobi(data, cal, from, to, gotobi.days.size(), seed));
    for (const Selection& sel : sets)
        if (sel.days.empty())
            throw DataError("no usable days in the '" + sel.name + "' set between " +
                            to_string(from) + " and " + to_string(to));
    return sets;
}

std::filesystem::path with_suffix(const std::filesystem::path& path, const std::string& suffix) {
    std::filesystem::path out = path;
    out.replace_filename(path.stem().string() + suffix + path.extension().string());
    return out;
}

// ---------------------------------------------------------------------------
// calendar
// ---------------------------------------------------------------------------

struct CalendarArgs {
    std::string from, to, holidays, out;
    std::size_t sample = 0;
    std::uint64_t seed = 0;
};

int run_calendar(const CalendarArgs& args, const std::string& command_line) {
    const Date from = parse_date_flag(args.from, "--from");
    const Date to = parse_date_flag(args.to, "--to");
    auto [cal, source] = resolve_calendar(args.holidays);

    auto labels = effective_gotobi_days(from, to, cal);
    std::vector<Date> sampled;
    if (args.sample > 0) sampled = sample_non_gotobi(from, to, args.sample, cal, args.seed);

    RunManifest manifest;
    manifest.command = "calendar";
    manifest.command_line = command_line;
    manifest.rng_id = kRngId;
    if (args.sample > 0) manifest.seed = args.seed;
    manifest.config = {{"from", to_string(from)},
                       {"to", to_string(to)},
                       {"sample", args.sample}};
    manifest.inputs.push_back({"holidays", source, holiday_digest(cal)});
    manifest.created_utc = utc_now_rfc3339();

    std::ostringstream csv;
    write_labels_csv(csv, labels, sampled, manifest.digest());

    std::size_t effective = 0, excluded = 0;
    for (const DayLabel& label : labels)
        (label.kind == DayKind::GotobiEffective ? effective : excluded) += 1;

    if (args.out.empty())
        std::cout << csv.str();
    else
        write_file(args.out, csv.str());
    std::cerr << "gotobi_effective=" << effective << " excluded=" << excluded
              << " sampled=" << sampled.size() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
    std::string from, to, out, manifest_out, holidays;
    std::uint64_t seed = 0;
    double drift = 0.0, reversal = 0.0, sigma = 0.0, spread = 0.0, base = 108.0;
    std::string anomaly_start = "03:00", anchor = "09:55";
};

int run_generate(const GenerateArgs& args, const std::string& command_line) {
    SynthParams params;
    params.from = parse_date_flag(args.from, "--from");
    params.to = parse_date_flag(args.to, "--to");
    params.base_rate = args.base;
    params.noise_sigma = args.sigma;
    params.spread = args.spread;
    params.pre_anchor_drift = args.drift;
    params.post_anchor_reversal = args.reversal;
    params.anomaly_start = parse_minute_flag(args.anomaly_start, "--anomaly-start");
    params.anchor = parse_minute_flag(args.anchor, "--anchor");
    params.seed = args.seed;

    auto [cal, source] = resolve_calendar(args.holidays);
    auto result = generate(params, cal);

    RunManifest manifest;
    manifest.command = "generate";
    manifest.command_line = command_line;
    manifest.rng_id = kRngId;
    manifest.seed = args.seed;
    manifest.config = {{"from", to_string(params.from)},
                       {"to", to_string(params.to)},
                       {"base_rate", params.base_rate},
                       {"noise_sigma", params.noise_sigma},
                       {"spread", params.spread},
                       {"drift", params.pre_anchor_drift},
                       {"reversal", params.post_anchor_reversal},
                       {"anomaly_start", params.anomaly_start.str()},
                       {"anchor", params.anchor.str()}};
    manifest.inputs.push_back({"holidays", source, holiday_digest(cal)});
    manifest.created_utc = utc_now_rfc3339();

    std::ostringstream csv;
    write_quotes(csv, result.days, "manifest " + manifest.digest());
    write_file(args.out, csv.str());

    const std::string manifest_path =
        args.manifest_out.empty() ? args.out + ".manifest.json" : args.manifest_out;
    nlohmann::json mj = manifest.to_json();
    mj["outputs"] = {args.out};
    mj["days"] = result.days.size();
    mj["clamped_minutes"] = result.clamped_minutes;
    write_file(manifest_path, mj.dump(2) + "\n");

    if (result.clamped_minutes > 0)
        std::cerr << "warning: " << result.clamped_minutes
                  << " minutes clamped at the positive price floor\n";
    std::cerr << "wrote " << result.days.size() << " days to " << args.out << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeArgs {
    std::string data, day_set = "gotobi", holidays, out_dir = ".", prefix = "analysis";
    std::string anchor = "09:55";
    std::string from, to;
    int horizon = 1;
    std::uint64_t seed = 0;
    double spread = 0.0;
};

int run_analyze(const AnalyzeArgs& args, const std::string& command_line) {
    const MinuteOfDay anchor = parse_minute_flag(args.anchor, "--anchor");
    auto [cal, source] = resolve_calendar(args.holidays);
    LoadedData data = load_data(args.data, args.spread);
    const Date from = args.from.empty() ? data.first : parse_date_flag(args.from, "--from");
    const Date to = args.to.empty() ? data.last : parse_date_flag(args.to, "--to");

    auto sets = select_day_sets(args.day_set, data, cal, from, to, args.seed);

    RunManifest manifest;
    manifest.command = "analyze";
    manifest.command_line = command_line;
    manifest.rng_id = kRngId;
    manifest.seed = args.seed;
    manifest.config = {{"day_set", args.day_set}, {"anchor", anchor.str()},
                       {"horizon", args.horizon}, {"from", to_string(from)},
                       {"to", to_string(to)}};
    manifest.inputs.push_back({"quotes", args.data, data.digest});
    manifest.inputs.push_back({"holidays", source, holiday_digest(cal)});
    manifest.created_utc = utc_now_rfc3339();
    const std::string digest = manifest.digest();

    const std::filesystem::path dir{args.out_dir};
    std::filesystem::create_directories(dir);

    nlohmann::json meta_sets = nlohmann::json::object();
    for (const Selection& sel : sets) {
        auto profile = intraday_profile(sel.days, anchor);
        auto prob = prob_above_anchor(sel.days, anchor);
        auto drift = post_announcement_drift(sel.days, anchor, args.horizon);

        const std::string stem = args.prefix + "_" + sel.name;
        std::ostringstream profile_csv, prob_csv, drift_csv;
        write_profile_csv(profile_csv, profile, digest);
        write_probability_csv(prob_csv, prob, digest);
        write_drift_csv(drift_csv, drift, digest);
        write_file(dir / (stem + "_profile.csv"), profile_csv.str());
        write_file(dir / (stem + "_prob.csv"), prob_csv.str());
        write_file(dir / (stem + "_drift.csv"), drift_csv.str());

        nlohmann::json skipped = nlohmann::json::array();
        for (const SkippedDay& s : sel.no_data)
            skipped.push_back({{"date", to_string(s.date)}, {"reason", to_string(s.reason)}});
        for (Date d : profile.skipped_days)
            skipped.push_back({{"date", to_string(d)}, {"reason", "missing_anchor_quote"}});
        nlohmann::json sampled = nlohmann::json::array();
        for (Date d : sel.sampled) sampled.push_back(to_string(d));

        meta_sets[sel.name] = {{"days_used", sel.days.size()},
                               {"selected_dates", sel.selected_dates},
                               {"drift_days", drift.dates.size()},
                               {"skipped", skipped},
                               {"sampled", sampled},
                               {"files",
                                {{"profile", stem + "_profile.csv"},
                                 {"prob", stem + "_prob.csv"},
                                 {"drift", stem + "_drift.csv"}}}};
        std::cerr << sel.name << ": days=" << sel.days.size() << " skipped=" << skipped.size()
                  << "\n";
    }

    nlohmann::json meta = {{"manifest", manifest.to_json()},
                           {"anchor", anchor.str()},
                           {"horizon", args.horizon},
                           {"seed", args.seed},
                           {"day_sets", meta_sets}};
    write_file(dir / (args.prefix + "_meta.json"), meta.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// backtest
// ---------------------------------------------------------------------------

struct BacktestArgs {
    std::string data, strategy = "h1", day_set = "gotobi", gate = "anomaly", holidays;
    std::string trades_out = "trades.csv", report_out = "report.json";
    std::string from, to;
    bool gc = false, no_gc = false;
    int gc_hour = 3;
    std::string h1_entry = "03:00", h1_exit = "09:55", gate_minute = "09:00";
    std::string h2_entry = "09:55", h2_exit = "12:00";
    int short_window = 25, long_window = 100;
    std::uint64_t seed = 0;
    double spread = 0.0;
};

H2Gate parse_gate(const std::string& text) {
    if (text == "anomaly") return H2Gate::OnlyWhenAnomaly;
    if (text == "no-anomaly") return H2Gate::OnlyWhenNoAnomaly;
    if (text == "always") return H2Gate::Always;
    throw ArgumentError("--gate must be anomaly, no-anomaly, or always");
}

int run_backtest(const BacktestArgs& args, const std::string& command_line) {
    StrategyConfig cfg;
    cfg.use_gc = args.gc && !args.no_gc;
    cfg.gc_window_hour = args.gc_hour;
    cfg.entry_minute_h1 = parse_minute_flag(args.h1_entry, "--h1-entry");
    cfg.exit_minute_h1 = parse_minute_flag(args.h1_exit, "--h1-exit");
    cfg.gate_minute = parse_minute_flag(args.gate_minute, "--gate-minute");
    cfg.h2_entry_minute = parse_minute_flag(args.h2_entry, "--h2-entry");
    cfg.h2_exit_minute = parse_minute_flag(args.h2_exit, "--h2-exit");
    cfg.short_window = args.short_window;
    cfg.long_window = args.long_window;
    cfg.validate();
    const H2Gate gate = parse_gate(args.gate);
    if (args.strategy != "h1" && args.strategy != "h2" && args.strategy != "combined")
        throw ArgumentError("--strategy must be h1, h2, or combined");

    auto [cal, source] = resolve_calendar(args.holidays);
    LoadedData data = load_data(args.data, args.spread);
    const Date from = args.from.empty() ? data.first : parse_date_flag(args.from, "--from");
    const Date to = args.to.empty() ? data.last : parse_date_flag(args.to, "--to");

    auto sets = select_day_sets(args.day_set, data, cal, from, to, args.seed);

    RunManifest manifest;
    manifest.command = "backtest";
    manifest.command_line = command_line;
    manifest.rng_id = kRngId;
    manifest.seed = args.seed;
    manifest.config = {{"strategy", args.strategy},
                       {"day_set", args.day_set},
                       {"use_gc", cfg.use_gc},
                       {"gc_hour", cfg.gc_window_hour},
                       {"gate", args.gate},
                       {"h1_entry", cfg.entry_minute_h1.str()},
                       {"h1_exit", cfg.exit_minute_h1.str()},
                       {"gate_minute", cfg.gate_minute.str()},
                       {"h2_entry", cfg.h2_entry_minute.str()},
                       {"h2_exit", cfg.h2_exit_minute.str()},
                       {"short_window", cfg.short_window},
                       {"long_window", cfg.long_window},
                       {"from", to_string(from)},
                       {"to", to_string(to)}};
    manifest.inputs.push_back({"quotes", args.data, data.digest});
    manifest.inputs.push_back({"holidays", source, holiday_digest(cal)});
    manifest.created_utc = utc_now_rfc3339();
    const std::string digest = manifest.digest();

    nlohmann::json runs = nlohmann::json::array();
    const bool suffix_outputs = sets.size() > 1;
    for (const Selection& sel : sets) {
        std::vector<Trade> trades;
        std::vector<SkippedDay> skipped = sel.no_data;
        std::vector<Date> gate_defaulted;
        nlohmann::json legs;

        if (args.strategy == "h1") {
            StrategyRun run = run_h1(sel.days, cfg);
            trades = std::move(run.trades);
            skipped.insert(skipped.end(), run.skipped.begin(), run.skipped.end());
        } else if (args.strategy == "h2") {
            StrategyRun run = run_h2(sel.days, cfg, gate);
            trades = std::move(run.trades);
            skipped.insert(skipped.end(), run.skipped.begin(), run.skipped.end());
            gate_defaulted = std::move(run.gate_defaulted);
        } else {
            CombinedRun run = run_combined(sel.days, cfg);
            trades = run.trades();
            auto leg_json = [](const StrategyRun& leg) {
                auto leg_report = evaluate(leg.trades);
                nlohmann::json skips = nlohmann::json::array();
                for (const SkippedDay& s : leg.skipped)
                    skips.push_back(
                        {{"date", to_string(s.date)}, {"reason", to_string(s.reason)}});
                return nlohmann::json{{"n_trades", leg.trades.size()},
                                      {"total_profit", leg_report.total_profit},
                                      {"skipped_days", skips}};
            };
            legs = {{"h1", leg_json(run.h1)}, {"h2", leg_json(run.h2)}};
            skipped.insert(skipped.end(), run.h2.skipped.begin(), run.h2.skipped.end());
            gate_defaulted = std::move(run.h2.gate_defaulted);
        }

        PerformanceReport report = evaluate(trades);
        report.skipped_days = std::move(skipped);
        report.gate_defaulted_days = std::move(gate_defaulted);

        std::ostringstream trades_csv;
        write_trades_csv(trades_csv, report.trades, digest);
        const std::filesystem::path trades_path =
            suffix_outputs ? with_suffix(args.trades_out, "_" + sel.name)
                           : std::filesystem::path{args.trades_out};
        write_file(trades_path, trades_csv.str());

        nlohmann::json run_json = report_to_json(report);
        run_json["day_set"] = sel.name;
        run_json["strategy"] = args.strategy;
        if (args.strategy != "h1") run_json["gate"] = args.gate;
        if (!legs.is_null()) run_json["legs"] = legs;
        run_json["trades_file"] = trades_path.string();
        runs.push_back(run_json);

        std::cout << args.strategy << " " << sel.name << ": N=" << report.n_trades;
        if (report.profit_factor)
            std::cout << " PF=" << format_double(*report.profit_factor);
        else
            std::cout << (report.profit_factor_infinite ? " PF=inf" : " PF=n/a");
        if (report.payoff_ratio)
            std::cout << " PR=" << format_double(*report.payoff_ratio);
        else
            std::cout << (report.payoff_ratio_infinite ? " PR=inf" : " PR=n/a");
        std::cout << " W=" << format_double(report.win_rate)
                  << " total=" << format_double(report.total_profit)
                  << " skipped=" << report.skipped_days.size() << "\n";
    }

    nlohmann::json out = {{"manifest", manifest.to_json()}, {"runs", runs}};
    write_file(args.report_out, out.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gotobi-anomaly statistics and strategy backtesting toolkit"};
    app.require_subcommand(1);
    const std::string command_line = join_command_line(argc, argv);

    CalendarArgs cal_args;
    auto* cal_cmd = app.add_subcommand("calendar", "Label effective gotobi days in a range");
    cal_cmd->add_option("--from", cal_args.from, "Range start (YYYY-MM-DD)")->required();
    cal_cmd->add_option("--to", cal_args.to, "Range end (YYYY-MM-DD)")->required();
    cal_cmd->add_option("--holidays", cal_args.holidays, "Holiday CSV (default: bundled)");
    cal_cmd->add_option("--sample", cal_args.sample,
                        "Also sample this many non-gotobi control days");
    cal_cmd->add_option("--seed", cal_args.seed, "Sampling seed");
    cal_cmd->add_option("--out", cal_args.out, "Write label CSV here instead of stdout");

    GenerateArgs gen_args;
    auto* gen_cmd = app.add_subcommand("generate", "Emit a seeded synthetic quote dataset");
    gen_cmd->add_option("--from", gen_args.from, "Range start (YYYY-MM-DD)")->required();
    gen_cmd->add_option("--to", gen_args.to, "Range end (YYYY-MM-DD)")->required();
    gen_cmd->add_option("--seed", gen_args.seed, "Generator seed")->required();
    gen_cmd->add_option("--drift", gen_args.drift, "Gotobi pre-anchor drift total (yen)");
    gen_cmd->add_option("--reversal", gen_args.reversal, "Gotobi post-anchor reversal (yen)");
    gen_cmd->add_option("--sigma", gen_args.sigma, "Walk noise (yen per sqrt-minute)");
    gen_cmd->add_option("--spread", gen_args.spread, "Constant bid/ask spread (yen)");
    gen_cmd->add_option("--base-rate", gen_args.base, "Starting mid (yen)");
    gen_cmd->add_option("--anomaly-start", gen_args.anomaly_start, "Drift start (HH:MM)");
    gen_cmd->add_option("--anchor", gen_args.anchor, "Anchor minute (HH:MM)");
    gen_cmd->add_option("--holidays", gen_args.holidays, "Holiday CSV (default: bundled)");
    gen_cmd->add_option("--out", gen_args.out, "Output quote CSV path")->required();
    gen_cmd->add_option("--manifest-out", gen_args.manifest_out,
                        "Manifest path (default: <out>.manifest.json)");

    AnalyzeArgs ana_args;
    auto* ana_cmd = app.add_subcommand("analyze", "Anchored profile, probability, drift curves");
    ana_cmd->add_option("--data", ana_args.data, "Quote CSV")->required();
    ana_cmd->add_option("--day-set", ana_args.day_set, "gotobi | non-gotobi | both")
        ->check(CLI::IsMember({"gotobi", "non-gotobi", "both"}));
    ana_cmd->add_option("--anchor", ana_args.anchor, "Anchor minute (HH:MM, default 09:55)");
    ana_cmd->add_option("--horizon", ana_args.horizon, "Drift horizon in minutes (default 1)");
    ana_cmd->add_option("--seed", ana_args.seed, "Control-sampling seed");
    ana_cmd->add_option("--spread", ana_args.spread, "Synthetic spread for 2-column data");
    ana_cmd->add_option("--from", ana_args.from, "Restrict range start");
    ana_cmd->add_option("--to", ana_args.to, "Restrict range end");
    ana_cmd->add_option("--holidays", ana_args.holidays, "Holiday CSV (default: bundled)");
    ana_cmd->add_option("--out-dir", ana_args.out_dir, "Output directory (default .)");
    ana_cmd->add_option("--prefix", ana_args.prefix, "Output file prefix (default analysis)");

    BacktestArgs bt_args;
    auto* bt_cmd = app.add_subcommand("backtest", "Run a strategy and report performance");
    bt_cmd->add_option("--data", bt_args.data, "Quote CSV")->required();
    bt_cmd->add_option("--strategy", bt_args.strategy, "h1 | h2 | combined")
        ->check(CLI::IsMember({"h1", "h2", "combined"}));
    bt_cmd->add_option("--day-set", bt_args.day_set, "gotobi | non-gotobi | both")
        ->check(CLI::IsMember({"gotobi", "non-gotobi", "both"}));
    auto* gc_flag = bt_cmd->add_flag("--gc", bt_args.gc, "Gate the h1 entry on a golden cross");
    bt_cmd->add_flag("--no-gc", bt_args.no_gc, "Plain fixed-minute h1 entry (default)")
        ->excludes(gc_flag);
    bt_cmd->add_option("--gc-hour", bt_args.gc_hour, "n: search the cross in [n-1:30, n:00)")
        ->check(CLI::Range(1, 5));
    bt_cmd->add_option("--gate", bt_args.gate, "h2 gate: anomaly | no-anomaly | always")
        ->check(CLI::IsMember({"anomaly", "no-anomaly", "always"}));
    bt_cmd->add_option("--h1-entry", bt_args.h1_entry, "H1 entry minute (default 03:00)");
    bt_cmd->add_option("--h1-exit", bt_args.h1_exit, "H1 exit minute (default 09:55)");
    bt_cmd->add_option("--gate-minute", bt_args.gate_minute, "Anomaly gate minute (default 09:00)");
    bt_cmd->add_option("--h2-entry", bt_args.h2_entry, "H2 entry minute (default 09:55)");
    bt_cmd->add_option("--h2-exit", bt_args.h2_exit, "H2 exit minute (default 12:00)");
    bt_cmd->add_option("--short-window", bt_args.short_window, "Short SMA minutes (default 25)");
    bt_cmd->add_option("--long-window", bt_args.long_window, "Long SMA minutes (default 100)");
    bt_cmd->add_option("--seed", bt_args.seed, "Control-sampling seed");
    bt_cmd->add_option("--spread", bt_args.spread, "Synthetic spread for 2-column data");
    bt_cmd->add_option("--from", bt_args.from, "Restrict range start");
    bt_cmd->add_option("--to", bt_args.to, "Restrict range end");
    bt_cmd->add_option("--holidays", bt_args.holidays, "Holiday CSV (default: bundled)");
    bt_cmd->add_option("--trades-out", bt_args.trades_out, "Trades CSV (default trades.csv)");
    bt_cmd->add_option("--report-out", bt_args.report_out, "JSON report (default report.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cal_cmd) return run_calendar(cal_args, command_line);
        if (*gen_cmd) return run_generate(gen_args, command_line);
        if (*ana_cmd) return run_analyze(ana_args, command_line);
        if (*bt_cmd) return run_backtest(bt_args, command_line);
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
