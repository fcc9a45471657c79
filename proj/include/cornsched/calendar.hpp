#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace cornsched {

using Date = std::chrono::year_month_day;

// Strict YYYY-MM-DD. Throws DataError on anything else.
Date parse_iso_date(std::string_view text);
std::string format_iso_date(const Date& date);

bool is_leap_day(const Date& date);

// Horizon day 1 is `start`; day d is start + (d - 1) calendar days.
Date date_of_day(const Date& start, int day);
int day_of_date(const Date& start, const Date& date);

} // namespace cornsched
