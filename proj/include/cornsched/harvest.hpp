#pragma once

#include <vector>

#include "cornsched/domain.hpp"
#include "cornsched/forecast.hpp"

namespace cornsched {

// First day d >= plant_day whose cumulative GDUs since planting strictly exceed
// required_gdu. Throws UnharvestableError when no such day exists in the horizon.
Day harvest_day(Day plant_day, double required_gdu, const GduForecast& forecast);

// Fixed 7-day bins anchored at horizon day 1.
inline int calendar_week(Day day) { return (day - 1) / 7 + 1; }

// Week index of `day` relative to calendar week `week_origin` (origin itself is week 1).
inline int week_of(Day day, int week_origin) { return calendar_week(day) - week_origin + 1; }

struct HarvestAssignment {
    std::vector<Day> harvest_days;
    std::vector<int> harvest_weeks;  // relative to WeeklyHarvest::first_week_offset
};

WeeklyHarvest weekly_harvest(const Schedule& schedule, const Instance& instance, const GduForecast& forecast);

HarvestAssignment assign_harvest(const Schedule& schedule, const Instance& instance,
                                 const GduForecast& forecast);

} // namespace cornsched
