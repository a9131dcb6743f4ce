#include "gotobi/report_io.hpp"

#include <charconv>
#include <ostream>

namespace gotobi {

std::string format_double(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

namespace {

void write_digest(std::ostream& out, std::string_view digest) {
    if (!digest.empty()) out << "# manifest " << digest << "\n";
}

}  // namespace

void write_labels_csv(std::ostream& out, std::span<const DayLabel> labels,
                      std::span<const Date> sampled, std::string_view digest) {
    write_digest(out, digest);
    out << "date,kind,source_gotobi\n";
    for (const DayLabel& label : labels) {
        out << to_string(label.date) << ',' << to_string(label.kind) << ',';
        if (label.source_gotobi) out << to_string(*label.source_gotobi);
        out << '\n';
    }
    for (Date d : sampled) out << to_string(d) << ",non_gotobi,\n";
}

void write_profile_csv(std::ostream& out, const ProfileCurve& curve, std::string_view digest) {
    write_digest(out, digest);
    out << "minute,value,n_days\n";
    for (std::size_t i = 0; i < curve.minutes.size(); ++i)
        out << curve.minutes[i].str() << ',' << format_double(curve.mean_offset[i]) << ','
            << curve.n_days[i] << '\n';
}

void write_probability_csv(std::ostream& out, const ProbabilityCurve& curve,
                           std::string_view digest) {
    write_digest(out, digest);
    out << "minute,value,n_days\n";
    for (std::size_t i = 0; i < curve.minutes.size(); ++i)
        out << curve.minutes[i].str() << ',' << format_double(curve.prob[i]) << ','
            << curve.n_days[i] << '\n';
}

void write_drift_csv(std::ostream& out, const DriftSeries& series, std::string_view digest) {
    write_digest(out, digest);
    out << "date,per_day,cumulative\n";
    for (std::size_t i = 0; i < series.dates.size(); ++i)
        out << to_string(series.dates[i]) << ',' << format_double(series.per_day[i]) << ','
            << format_double(series.cumulative[i]) << '\n';
}

void write_trades_csv(std::ostream& out, std::span<const Trade> trades, std::string_view digest) {
    write_digest(out, digest);
    out << "date,side,entry_minute,exit_minute,entry_price,exit_price,profit\n";
    for (const Trade& t : trades)
        out << to_string(t.date) << ',' << to_string(t.side) << ',' << t.entry_minute.str() << ','
            << t.exit_minute.str() << ',' << t.entry_price.str() << ',' << t.exit_price.str()
            << ',' << micro_to_string(t.profit_micro()) << '\n';
}

nlohmann::json report_to_json(const PerformanceReport& report) {
    nlohmann::json trades = nlohmann::json::array();
    for (const Trade& t : report.trades)
        trades.push_back({{"date", to_string(t.date)},
                          {"side", to_string(t.side)},
                          {"entry_minute", t.entry_minute.str()},
                          {"exit_minute", t.exit_minute.str()},
                          {"entry_price", t.entry_price.yen()},
                          {"exit_price", t.exit_price.yen()},
                          {"profit", t.profit()}});

    nlohmann::json cumulative = nlohmann::json::array();
    for (const CumulativePoint& p : report.cumulative)
        cumulative.push_back({{"date", to_string(p.date)},
                              {"entry_minute", p.entry_minute.str()},
                              {"total", p.total}});

    nlohmann::json skipped = nlohmann::json::array();
    for (const SkippedDay& s : report.skipped_days)
        skipped.push_back({{"date", to_string(s.date)}, {"reason", to_string(s.reason)}});

    nlohmann::json gate_defaulted = nlohmann::json::array();
    for (Date d : report.gate_defaulted_days) gate_defaulted.push_back(to_string(d));

    return {{"n_trades", report.n_trades},
            {"profit_factor",
             report.profit_factor ? nlohmann::json(*report.profit_factor) : nlohmann::json()},
            {"profit_factor_infinite", report.profit_factor_infinite},
            {"payoff_ratio",
             report.payoff_ratio ? nlohmann::json(*report.payoff_ratio) : nlohmann::json()},
            {"payoff_ratio_infinite", report.payoff_ratio_infinite},
            {"win_rate", report.win_rate},
            {"total_profit", report.total_profit},
            {"skipped_days", skipped},
            {"gate_defaulted_days", gate_defaulted},
            {"trades", trades},
            {"cumulative", cumulative}};
}

}  // namespace gotobi
