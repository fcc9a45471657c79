#include "cornsched/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cornsched/errors.hpp"
#include "cornsched/harvest.hpp"

namespace cornsched {

Model model_from_index(int index) {
    if (index < 1 || index > 3) throw ContractError("model must be 1, 2 or 3, got " + std::to_string(index));
    return static_cast<Model>(index);
}

namespace {

void check_inputs(const WeeklyHarvest& harvest, double capacity) {
    if (!(capacity > 0.0) || !std::isfinite(capacity)) {
        std::ostringstream msg;
        msg << "capacity must be positive and finite, got " << capacity;
        throw ContractError(msg.str());
    }
    if (std::none_of(harvest.totals.begin(), harvest.totals.end(), [](auto h) { return h > 0; })) {
        throw DegenerateInstanceError("no week with positive harvest");
    }
}

void check_power(int power) {
    if (power < 1 || power > 3) throw ContractError("penalty power must be 1, 2 or 3, got " + std::to_string(power));
}

double ipow(double x, int r) {
    double out = 1.0;
    for (int i = 0; i < r; ++i) out *= x;
    return out;
}

// Even-sized sets use the mean of the two middle values. Reorders `values`.
double median(std::vector<double>& values) {
    const std::size_t n = values.size();
    const std::size_t mid = n / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const double upper = values[mid];
    if (n % 2 == 1) return upper;
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

// |C - h_j|^r over weeks with positive harvest.
std::vector<double> abs_deviations(const WeeklyHarvest& harvest, double capacity, int power) {
    std::vector<double> out;
    out.reserve(harvest.totals.size());
    for (auto h : harvest.totals) {
        if (h > 0) out.push_back(ipow(std::abs(capacity - static_cast<double>(h)), power));
    }
    return out;
}

double nonzero_weeks(const WeeklyHarvest& harvest) {
    return static_cast<double>(std::count_if(harvest.totals.begin(), harvest.totals.end(), [](auto h) { return h > 0; }));
}

} // namespace

ObjectiveVector eval_model1(const WeeklyHarvest& harvest, double capacity) {
    check_inputs(harvest, capacity);
    auto dev = abs_deviations(harvest, capacity, 1);
    const double worst = *std::max_element(dev.begin(), dev.end());
    const double med = median(dev);
    double waste = 0.0;
    for (auto h : harvest.totals) waste += std::max(static_cast<double>(h) - capacity, 0.0);
    return {{med, worst, nonzero_weeks(harvest), waste}, Model::base, 1, false};
}

ObjectiveVector eval_model2(const WeeklyHarvest& harvest, double capacity, int power) {
    check_inputs(harvest, capacity);
    check_power(power);
    auto dev = abs_deviations(harvest, capacity, 1);
    const double med = median(dev);
    double over_sum = 0.0;
    double under_sum = 0.0;
    int n_over = 0;
    int n_under = 0;
    for (auto h : harvest.totals) {
        if (h <= 0) continue;
        const double x = static_cast<double>(h);
        if (x > capacity) {
            over_sum += ipow(x - capacity, power);
            ++n_over;
        } else if (x < capacity) {
            under_sum += capacity - x;
            ++n_under;
        }
    }
    const double over = n_over > 0 ? over_sum / n_over : 0.0;
    const double under = n_under > 0 ? under_sum / n_under : 0.0;
    return {{med, over, under, nonzero_weeks(harvest)}, Model::overcapacity_penalty, power, false};
}

ObjectiveVector eval_model3(const WeeklyHarvest& harvest, double capacity, int power) {
    check_inputs(harvest, capacity);
    check_power(power);
    auto dev = abs_deviations(harvest, capacity, power);
    const double worst = *std::max_element(dev.begin(), dev.end());
    const double med = median(dev);

    double mean = 0.0;
    int n = 0;
    for (auto h : harvest.totals) {
        if (h > 0) {
            mean += capacity - static_cast<double>(h);
            ++n;
        }
    }
    mean /= n;
    double ss = 0.0;
    for (auto h : harvest.totals) {
        if (h > 0) {
            const double e = capacity - static_cast<double>(h) - mean;
            ss += e * e;
        }
    }
    return {{med, worst, std::sqrt(ss / n), nonzero_weeks(harvest)}, Model::uniform_deviation, power, false};
}

ObjectiveVector eval_model(Model model, const WeeklyHarvest& harvest, double capacity, int power) {
    switch (model) {
    case Model::base: return eval_model1(harvest, capacity);
    case Model::overcapacity_penalty: return eval_model2(harvest, capacity, power);
    case Model::uniform_deviation: return eval_model3(harvest, capacity, power);
    }
    throw ContractError("unknown model");
}

ObjectiveVector eval_scenario2(const WeeklyHarvest& harvest, const Schedule& schedule, Model model, int power) {
    if (!schedule.capacity_hat) throw ContractError("schedule has no capacity gene");
    const double capacity = *schedule.capacity_hat;
    ObjectiveVector out = eval_model(model, harvest, capacity, power);
    out.values.push_back(capacity);
    out.capacity_objective = true;
    return out;
}

ObjectiveVector evaluate(const Schedule& schedule, const Instance& instance, const GduForecast& forecast, Model model,
                         int power) {
    const WeeklyHarvest harvest = weekly_harvest(schedule, instance, forecast);
    if (schedule.capacity_hat) return eval_scenario2(harvest, schedule, model, power);
    if (!instance.capacity) throw ContractError("instance has no capacity and the schedule has no capacity gene");
    return eval_model(model, harvest, *instance.capacity, power);
}

} // namespace cornsched
