#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cornsched {

class GduForecast;

// 1-based day index into the optimization horizon.
using Day = int;

struct SeedPopulation {
    std::string id;
    int site = 0;
    Day early_day = 1;          // L(s_i)
    Day late_day = 1;           // U(s_i)
    double required_gdu = 0.0;  // g(s_i)
    std::int64_t harvest_qty = 0;
    std::optional<Day> original_day;

    bool operator==(const SeedPopulation&) const = default;
};

struct Instance {
    std::vector<SeedPopulation> populations;
    int horizon_days = 0;               // D
    std::optional<double> capacity;     // absent for capacity-as-decision runs
    int site = 0;

    std::size_t size() const noexcept { return populations.size(); }
    bool operator==(const Instance&) const = default;
};

// One planting day per population, plus the capacity gene when capacity is optimized.
struct Schedule {
    std::vector<Day> days;
    std::optional<double> capacity_hat;

    bool operator==(const Schedule&) const = default;
};

struct WeeklyHarvest {
    std::vector<std::int64_t> totals;   // totals[0] and totals.back() are > 0
    int first_week_offset = 0;          // calendar week of totals[0]

    std::size_t weeks() const noexcept { return totals.size(); }
    bool operator==(const WeeklyHarvest&) const = default;
};

enum class ViolationKind {
    window_inverted,
    day_out_of_range,
    nonpositive_required_gdu,
    negative_harvest_qty,
    site_mismatch,
    duplicate_id,
    horizon_mismatch,
    unharvestable,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::optional<std::size_t> population;  // index into Instance::populations
    std::string message;

    bool operator==(const Violation&) const = default;
};

// Checks every instance invariant and that each population planted on its late day
// still matures within the horizon. Returns an empty list for a valid instance.
std::vector<Violation> validate_instance(const Instance& instance, const GduForecast& forecast);

// True when every gene lies in its planting window and the lengths agree.
bool within_windows(const Schedule& schedule, const Instance& instance);

} // namespace cornsched
