#pragma once

#include <cstdint>
#include <utility>

#include "cornsched/calendar.hpp"
#include "cornsched/domain.hpp"
#include "cornsched/forecast.hpp"

namespace cornsched {

struct SyntheticConfig {
    int n_populations = 50;
    int horizon_days = 280;
    int history_years = 11;
    int first_history_year = 2009;
    Date horizon_start = Date{std::chrono::year{2020}, std::chrono::month{1}, std::chrono::day{1}};
    double gdu_mean = 20.0;
    double gdu_amplitude = 6.0;   // sinusoidal seasonal swing
    double gdu_noise = 2.0;       // per-day uniform noise half-width in the history
    int window_min = 7;
    int window_max = 28;
    double required_gdu_min = 649.0;
    double required_gdu_max = 1414.0;
    int harvest_qty_min = 200;
    int harvest_qty_max = 900;
    double capacity = 1500.0;
    int site = 0;
    std::uint64_t seed = 42;
};

struct SyntheticInstance {
    Instance instance;
    GduHistory history;
    Date horizon_start;
};

// Deterministic in config.seed. Every population can still mature when planted on its
// late day. Throws ConfigError when the configuration cannot satisfy that.
SyntheticInstance generate_instance(const SyntheticConfig& config);

} // namespace cornsched
