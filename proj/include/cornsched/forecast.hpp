#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cornsched/calendar.hpp"

namespace cornsched {

// Historical daily GDU records for one site.
struct GduHistory {
    int site = 0;
    std::map<Date, double> records;

    bool operator==(const GduHistory&) const = default;
};

// Predicted daily GDUs over the horizon, with cached prefix sums.
class GduForecast {
public:
    static constexpr double kFloor = 1e-9;

    GduForecast() = default;
    // Values below kFloor are raised to kFloor.
    explicit GduForecast(std::vector<double> daily, std::optional<Date> start = std::nullopt);

    int days() const noexcept { return static_cast<int>(daily_.size()); }
    double at(int day) const;  // 1-based
    std::span<const double> daily() const noexcept { return daily_; }
    // prefix()[d] = sum of days 1..d, prefix()[0] = 0.
    std::span<const double> prefix() const noexcept { return prefix_; }
    const std::optional<Date>& start() const noexcept { return start_; }

    bool operator==(const GduForecast&) const = default;

private:
    std::vector<double> daily_;
    std::vector<double> prefix_{0.0};
    std::optional<Date> start_;
};

// Per calendar-day mean over all years in the history. Leap days in the history
// are ignored; a Feb 29 inside the horizon takes the mean of the Feb 28 and Mar 1
// averages.
GduForecast average_forecast(const GduHistory& history, const Date& horizon_start, int horizon_days);

// Sum of forecast GDUs over the inclusive day range, from the cached prefix sums.
double cumulative_gdu(const GduForecast& forecast, int from_day, int to_day);

} // namespace cornsched
