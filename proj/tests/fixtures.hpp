#pragma once

#include <string>
#include <vector>

#include "cornsched/domain.hpp"
#include "cornsched/forecast.hpp"
#include "cornsched/synthetic.hpp"

namespace fixtures {

inline cornsched::GduForecast constant_forecast(int days, double gdu) {
    return cornsched::GduForecast(std::vector<double>(static_cast<std::size_t>(days), gdu));
}

inline cornsched::SeedPopulation population(std::string id, int early, int late, double required, long qty) {
    cornsched::SeedPopulation p;
    p.id = std::move(id);
    p.early_day = early;
    p.late_day = late;
    p.required_gdu = required;
    p.harvest_qty = qty;
    return p;
}

struct Synthetic {
    cornsched::Instance instance;
    cornsched::GduForecast forecast;
};

inline Synthetic synthetic(const cornsched::SyntheticConfig& config = {}) {
    auto s = cornsched::generate_instance(config);
    auto f = cornsched::average_forecast(s.history, s.horizon_start, config.horizon_days);
    return {std::move(s.instance), std::move(f)};
}

} // namespace fixtures
