#include "cornsched/harvest.hpp"

#include <algorithm>
#include <sstream>

#include "cornsched/errors.hpp"

namespace cornsched {

Day harvest_day(Day plant_day, double required_gdu, const GduForecast& forecast) {
    const int horizon = forecast.days();
    if (plant_day < 1 || plant_day > horizon) {
        std::ostringstream msg;
        msg << "plant day " << plant_day << " outside [1, " << horizon << "]";
        throw ContractError(msg.str());
    }
    const auto prefix = forecast.prefix();
    const double base = prefix[static_cast<std::size_t>(plant_day - 1)];
    // Prefix sums are nondecreasing, so "prefix[d] - base > required" is monotone in d.
    auto first = prefix.begin() + plant_day;
    auto last = prefix.begin() + horizon + 1;
    auto it = std::partition_point(first, last, [&](double p) { return !(p - base > required_gdu); });
    if (it == last) {
        std::ostringstream msg;
        msg << "planted on day " << plant_day << ", " << required_gdu << " GDUs are not exceeded by day " << horizon;
        throw UnharvestableError(msg.str(), plant_day, required_gdu);
    }
    return static_cast<Day>(it - prefix.begin());
}

namespace {

void check_schedule(const Schedule& schedule, const Instance& instance) {
    if (schedule.days.size() != instance.populations.size()) {
        std::ostringstream msg;
        msg << "schedule has " << schedule.days.size() << " days for " << instance.populations.size()
            << " populations";
        throw ContractError(msg.str());
    }
}

Day population_harvest_day(const Schedule& schedule, const Instance& instance, const GduForecast& forecast,
                           std::size_t i) {
    const auto& pop = instance.populations[i];
    try {
        return harvest_day(schedule.days[i], pop.required_gdu, forecast);
    } catch (const UnharvestableError& e) {
        throw UnharvestableError("population " + pop.id + ": " + e.what(), e.plant_day(), e.required_gdu());
    }
}

} // namespace

WeeklyHarvest weekly_harvest(const Schedule& schedule, const Instance& instance, const GduForecast& forecast) {
    check_schedule(schedule, instance);
    const std::size_t n = instance.populations.size();
    std::vector<std::int64_t> by_calendar_week(static_cast<std::size_t>(calendar_week(forecast.days())) + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Day d = population_harvest_day(schedule, instance, forecast, i);
        by_calendar_week[static_cast<std::size_t>(calendar_week(d))] += instance.populations[i].harvest_qty;
    }
    auto first = std::find_if(by_calendar_week.begin(), by_calendar_week.end(), [](auto v) { return v > 0; });
    if (first == by_calendar_week.end()) return {};
    auto last = std::find_if(by_calendar_week.rbegin(), by_calendar_week.rend(), [](auto v) { return v > 0; }).base();

    WeeklyHarvest out;
    out.first_week_offset = static_cast<int>(first - by_calendar_week.begin());
    out.totals.assign(first, last);
    return out;
}

HarvestAssignment assign_harvest(const Schedule& schedule, const Instance& instance, const GduForecast& forecast) {
    check_schedule(schedule, instance);
    const WeeklyHarvest weekly = weekly_harvest(schedule, instance, forecast);
    HarvestAssignment out;
    for (std::size_t i = 0; i < instance.populations.size(); ++i) {
        const Day d = population_harvest_day(schedule, instance, forecast, i);
        out.harvest_days.push_back(d);
        out.harvest_weeks.push_back(week_of(d, weekly.first_week_offset));
    }
    return out;
}

} // namespace cornsched
