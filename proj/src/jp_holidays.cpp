#include <sstream>

#include "gotobi/calendar.hpp"

namespace gotobi {

namespace {

// Japanese national holidays (including substitute holidays) plus the
// Dec-31..Jan-3 bank closures, 2017-2020. Weekend entries are kept for
// reference; TradingCalendar drops them on construction.
// data/jp_holidays_2017_2020.csv ships the same table for CLI use.
constexpr const char* kJpHolidayCsv = R"(date,name
2017-01-01,New Year's Day
2017-01-02,Bank Holiday
2017-01-03,Bank Holiday
2017-01-09,Coming of Age Day
2017-02-11,National Foundation Day
2017-03-20,Vernal Equinox Day
2017-04-29,Showa Day
2017-05-03,Constitution Memorial Day
2017-05-04,Greenery Day
2017-05-05,Children's Day
2017-07-17,Marine Day
2017-08-11,Mountain Day
2017-09-18,Respect for the Aged Day
2017-09-23,Autumnal Equinox Day
2017-10-09,Health and Sports Day
2017-11-03,Culture Day
2017-11-23,Labour Thanksgiving Day
2017-12-23,Emperor's Birthday
2017-12-31,Bank Holiday
2018-01-01,New Year's Day
2018-01-02,Bank Holiday
2018-01-03,Bank Holiday
2018-01-08,Coming of Age Day
2018-02-11,National Foundation Day
2018-02-12,Substitute Holiday
2018-03-21,Vernal Equinox Day
2018-04-29,Showa Day
2018-04-30,Substitute Holiday
2018-05-03,Constitution Memorial Day
2018-05-04,Greenery Day
2018-05-05,Children's Day
2018-07-16,Marine Day
2018-08-11,Mountain Day
2018-09-17,Respect for the Aged Day
2018-09-23,Autumnal Equinox Day
2018-09-24,Substitute Holiday
2018-10-08,Health and Sports Day
2018-11-03,Culture Day
2018-11-23,Labour Thanksgiving Day
2018-12-23,Emperor's Birthday
2018-12-24,Substitute Holiday
2018-12-31,Bank Holiday
2019-01-01,New Year's Day
2019-01-02,Bank Holiday
2019-01-03,Bank Holiday
2019-01-14,Coming of Age Day
2019-02-11,National Foundation Day
2019-03-21,Vernal Equinox Day
2019-04-29,Showa Day
2019-04-30,National Holiday
2019-05-01,Accession Day
2019-05-02,National Holiday
2019-05-03,Constitution Memorial Day
2019-05-04,Greenery Day
2019-05-05,Children's Day
2019-05-06,Substitute Holiday
2019-07-15,Marine Day
2019-08-11,Mountain Day
2019-08-12,Substitute Holiday
2019-09-16,Respect for the Aged Day
2019-09-23,Autumnal Equinox Day
2019-10-14,Health and Sports Day
2019-10-22,Enthronement Ceremony Day
2019-11-03,Culture Day
2019-11-04,Substitute Holiday
2019-11-23,Labour Thanksgiving Day
2019-12-31,Bank Holiday
2020-01-01,New Year's Day
2020-01-02,Bank Holiday
2020-01-03,Bank Holiday
2020-01-13,Coming of Age Day
2020-02-11,National Foundation Day
2020-02-23,Emperor's Birthday
2020-02-24,Substitute Holiday
2020-03-20,Vernal Equinox Day
2020-04-29,Showa Day
2020-05-03,Constitution Memorial Day
2020-05-04,Greenery Day
2020-05-05,Children's Day
2020-05-06,Substitute Holiday
2020-07-23,Marine Day
2020-07-24,Sports Day
2020-08-10,Mountain Day
2020-09-21,Respect for the Aged Day
2020-09-22,Autumnal Equinox Day
2020-11-03,Culture Day
2020-11-23,Labour Thanksgiving Day
2020-12-31,Bank Holiday
)";

}  // namespace

TradingCalendar TradingCalendar::bundled() {
    std::istringstream in(kJpHolidayCsv);
    return from_csv(in);
}

}  // namespace gotobi
