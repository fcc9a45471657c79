#include "cornsched/forecast.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "cornsched/errors.hpp"

namespace cornsched {

using namespace std::chrono;

GduForecast::GduForecast(std::vector<double> daily, std::optional<Date> start)
    : daily_(std::move(daily)), start_(start) {
    prefix_.assign(daily_.size() + 1, 0.0);
    for (std::size_t i = 0; i < daily_.size(); ++i) {
        daily_[i] = std::max(daily_[i], kFloor);
        prefix_[i + 1] = prefix_[i] + daily_[i];
    }
}

double GduForecast::at(int day) const {
    if (day < 1 || day > days()) {
        std::ostringstream msg;
        msg << "forecast day " << day << " outside [1, " << days() << "]";
        throw ContractError(msg.str());
    }
    return daily_[static_cast<std::size_t>(day - 1)];
}

namespace {

// Position of (month, day) in a 365-day year; Feb 29 has no slot.
int slot_of(unsigned m, unsigned d) {
    static constexpr std::array<int, 12> offsets{0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334};
    return offsets[m - 1] + static_cast<int>(d) - 1;
}

} // namespace

GduForecast average_forecast(const GduHistory& history, const Date& horizon_start, int horizon_days) {
    if (horizon_days < 1) throw ContractError("horizon_days must be positive");

    std::set<int> years;
    for (const auto& [date, gdu] : history.records) {
        if (!is_leap_day(date)) years.insert(static_cast<int>(date.year()));
    }
    if (years.empty()) throw DataError("GDU history has no records");

    std::array<double, 365> sums{};
    std::array<int, 365> counts{};
    for (const auto& [date, gdu] : history.records) {
        if (is_leap_day(date)) continue;
        const int slot = slot_of(static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
        sums[slot] += gdu;
        ++counts[slot];
    }

    for (int y = *years.begin(); y <= *years.rbegin(); ++y) {
        for (sys_days d = sys_days{year{y} / January / 1}; d <= sys_days{year{y} / December / 31}; d += days{1}) {
            Date date{d};
            if (is_leap_day(date)) continue;
            if (!history.records.contains(date)) {
                throw DataError("GDU history for site " + std::to_string(history.site) + " is missing " +
                                format_iso_date(date));
            }
        }
    }

    std::array<double, 365> mean{};
    for (int s = 0; s < 365; ++s) mean[s] = sums[s] / counts[s];

    std::vector<double> daily;
    daily.reserve(static_cast<std::size_t>(horizon_days));
    for (int d = 1; d <= horizon_days; ++d) {
        const Date date = date_of_day(horizon_start, d);
        if (is_leap_day(date)) {
            daily.push_back(0.5 * (mean[slot_of(2, 28)] + mean[slot_of(3, 1)]));
        } else {
            daily.push_back(mean[slot_of(static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()))]);
        }
    }
    return GduForecast(std::move(daily), horizon_start);
}

double cumulative_gdu(const GduForecast& forecast, int from_day, int to_day) {
    if (from_day < 1 || from_day > to_day || to_day > forecast.days()) {
        std::ostringstream msg;
        msg << "cumulative_gdu range [" << from_day << ", " << to_day << "] invalid for a " << forecast.days()
            << "-day forecast";
        throw ContractError(msg.str());
    }
    const auto prefix = forecast.prefix();
    return prefix[static_cast<std::size_t>(to_day)] - prefix[static_cast<std::size_t>(from_day - 1)];
}

} // namespace cornsched
