#include "cornsched/calendar.hpp"

#include <charconv>
#include <cstdio>
#include <string>

#include "cornsched/errors.hpp"

namespace cornsched {

using namespace std::chrono;

Date parse_iso_date(std::string_view text) {
    auto fail = [&]() -> Date { throw DataError("invalid ISO date '" + std::string(text) + "'"); };
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return fail();
    int y = 0;
    unsigned m = 0;
    unsigned d = 0;
    auto parse = [&](std::string_view part, auto& value) {
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        return ec == std::errc{} && ptr == part.data() + part.size();
    };
    if (!parse(text.substr(0, 4), y) || !parse(text.substr(5, 2), m) || !parse(text.substr(8, 2), d)) return fail();
    Date date{year{y}, month{m}, day{d}};
    if (!date.ok()) return fail();
    return date;
}

std::string format_iso_date(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

bool is_leap_day(const Date& date) {
    return date.month() == February && date.day() == day{29};
}

Date date_of_day(const Date& start, int d) {
    return Date{sys_days{start} + days{d - 1}};
}

int day_of_date(const Date& start, const Date& date) {
    return static_cast<int>((sys_days{date} - sys_days{start}).count()) + 1;
}

} // namespace cornsched
