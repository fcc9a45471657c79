#pragma once

#include <optional>
#include <vector>

#include "cornsched/domain.hpp"
#include "cornsched/forecast.hpp"

namespace cornsched {

enum class Model { base = 1, overcapacity_penalty = 2, uniform_deviation = 3 };

inline int model_index(Model m) { return static_cast<int>(m); }
Model model_from_index(int index);

struct ObjectiveVector {
    std::vector<double> values;
    Model model = Model::base;
    int power = 1;
    bool capacity_objective = false;  // last entry is the capacity estimate

    std::size_t arity() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    bool operator==(const ObjectiveVector&) const = default;
};

// (median |C-h|, max |C-h|, nonzero weeks, total waste) over weeks with h > 0.
ObjectiveVector eval_model1(const WeeklyHarvest& harvest, double capacity);

// (median |C-h|, mean over-capacity^r, mean under-capacity, nonzero weeks).
// Empty over/under sets contribute 0.
ObjectiveVector eval_model2(const WeeklyHarvest& harvest, double capacity, int power);

// (median |C-h|^r, max |C-h|^r, population sd of C-h, nonzero weeks).
ObjectiveVector eval_model3(const WeeklyHarvest& harvest, double capacity, int power);

ObjectiveVector eval_model(Model model, const WeeklyHarvest& harvest, double capacity, int power);

// Base model criteria with C replaced by the schedule's capacity gene, followed by
// the capacity itself as a fifth minimized criterion.
ObjectiveVector eval_scenario2(const WeeklyHarvest& harvest, const Schedule& schedule, Model model, int power);

// Harvest simulation followed by the model's criteria. Uses the schedule's capacity
// gene when present, otherwise the instance capacity.
ObjectiveVector evaluate(const Schedule& schedule, const Instance& instance, const GduForecast& forecast,
                         Model model, int power);

} // namespace cornsched
