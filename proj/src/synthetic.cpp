#include "cornsched/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "cornsched/errors.hpp"
#include "cornsched/random.hpp"

namespace cornsched {

using namespace std::chrono;

namespace {

void check_config(const SyntheticConfig& c) {
    std::ostringstream msg;
    if (c.n_populations < 1) msg << "n_populations must be positive";
    else if (c.horizon_days < 1) msg << "horizon_days must be positive";
    else if (c.history_years < 1) msg << "history_years must be positive";
    else if (c.window_min < 1 || c.window_min > c.window_max) msg << "window widths must satisfy 1 <= min <= max";
    else if (!(c.required_gdu_min > 0.0 && c.required_gdu_min <= c.required_gdu_max)) msg << "required_gdu range must satisfy 0 < min <= max";
    else if (c.harvest_qty_min < 0 || c.harvest_qty_min > c.harvest_qty_max) msg << "harvest_qty range must satisfy 0 <= min <= max";
    else if (!(c.capacity > 0.0)) msg << "capacity must be positive";
    else if (!(c.gdu_mean > 0.0) || c.gdu_amplitude < 0.0 || c.gdu_noise < 0.0) msg << "GDU profile must have positive mean and nonnegative amplitude and noise";
    else return;
    throw ConfigError(msg.str());
}

// Latest planting day from which more than `required` GDUs accumulate by the horizon end, or 0.
int latest_planting_day(const GduForecast& forecast, double required) {
    for (int d = forecast.days(); d >= 1; --d) {
        if (cumulative_gdu(forecast, d, forecast.days()) > required) return d;
    }
    return 0;
}

} // namespace

SyntheticInstance generate_instance(const SyntheticConfig& config) {
    check_config(config);
    Rng rng(config.seed);

    GduHistory history;
    history.site = config.site;
    for (int y = config.first_history_year; y < config.first_history_year + config.history_years; ++y) {
        const sys_days first{year{y} / January / 1};
        for (sys_days d = first; d <= sys_days{year{y} / December / 31}; d += days{1}) {
            const double doy = static_cast<double>((d - first).count());
            // Southern-hemisphere profile: peak in mid January.
            const double seasonal = config.gdu_amplitude * std::cos(2.0 * std::numbers::pi * (doy - 14.0) / 365.0);
            const double noise = config.gdu_noise * rng.uniform(-1.0, 1.0);
            const double g = std::max(0.0, config.gdu_mean + seasonal + noise);
            history.records.emplace(Date{d}, std::round(g * 100.0) / 100.0);
        }
    }

    const GduForecast forecast = average_forecast(history, config.horizon_start, config.horizon_days);
    if (latest_planting_day(forecast, config.required_gdu_max) < 1) {
        std::ostringstream msg;
        msg << "required_gdu_max " << config.required_gdu_max << " cannot be exceeded within horizon_days "
            << config.horizon_days << " (forecast total " << cumulative_gdu(forecast, 1, forecast.days()) << ")";
        throw ConfigError(msg.str());
    }

    SyntheticInstance out;
    out.history = std::move(history);
    out.horizon_start = config.horizon_start;
    auto& inst = out.instance;
    inst.site = config.site;
    inst.horizon_days = config.horizon_days;
    inst.capacity = config.capacity;
    for (int i = 0; i < config.n_populations; ++i) {
        SeedPopulation p;
        char id[32];
        std::snprintf(id, sizeof id, "S%d-%04d", config.site, i + 1);
        p.id = id;
        p.site = config.site;
        p.required_gdu = std::round(rng.uniform(config.required_gdu_min, config.required_gdu_max) * 10.0) / 10.0;
        p.harvest_qty = rng.uniform_int(config.harvest_qty_min, config.harvest_qty_max);
        const int last_ok = latest_planting_day(forecast, p.required_gdu);
        const int width = static_cast<int>(rng.uniform_int(config.window_min, config.window_max)) - 1;
        p.early_day = static_cast<Day>(rng.uniform_int(1, std::max(1, last_ok - width)));
        p.late_day = std::min(p.early_day + width, last_ok);
        p.original_day = static_cast<Day>(rng.uniform_int(p.early_day, p.late_day));
        inst.populations.push_back(std::move(p));
    }
    return out;
}

} // namespace cornsched
