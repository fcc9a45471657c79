#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cornsched/domain.hpp"
#include "cornsched/forecast.hpp"
#include "cornsched/front.hpp"
#include "cornsched/harvest.hpp"
#include "cornsched/moea.hpp"
#include "cornsched/objectives.hpp"

namespace cornsched {

// Tuning levels for the parameter sweep. Population sizes are multiples of the
// instance size N.
struct TuningGrid {
    std::vector<double> crossover_rates{0.5, 0.75, 1.0};
    std::vector<double> mutation_rates{0.001, 0.01, 0.1};
    std::vector<int> population_multipliers{1, 2, 3};
    std::vector<int> generation_counts{8000, 10000, 12000};
    std::vector<int> penalty_powers{1, 2, 3};  // models 2 and 3 only
};

struct GridPoint {
    int combination_id = 0;
    GaParams params;
};

// Cartesian product in the order crossover, mutation, population, generations,
// power (innermost). Sizes and generations are multiplied by scale_factor; sizes
// are rounded to an even number >= 2 and generations to an integer >= 1.
std::vector<GridPoint> build_grid(Model model, int instance_size, double scale_factor, std::uint64_t base_seed,
                                  const TuningGrid& grid = {});

// Population-size rounding used by build_grid.
int scaled_population_size(double size);

Schedule baseline_schedule(const Instance& instance);

// Base-model criteria used to compare solutions from every model. With a capacity
// gene present the gene replaces C and is appended as a fifth criterion.
ObjectiveVector reference_criteria(const Schedule& schedule, const Instance& instance, const GduForecast& forecast);

std::string instance_hash(const Instance& instance, const GduForecast& forecast);

struct StrategyConfig {
    double scale_factor = 0.02;
    std::uint64_t base_seed = 42;
    unsigned jobs = 1;
    std::vector<double> reference;                  // empty: 2.0 in every objective
    std::optional<CapacityBounds> capacity_bounds;  // set for capacity-as-decision runs
    TuningGrid grid;
    std::vector<Model> models{Model::base, Model::overcapacity_penalty, Model::uniform_deviation};
    std::ostream* log = nullptr;
};

struct FrontMember {
    Schedule schedule;
    int combination_id = 0;
    std::vector<double> criteria;  // reference criteria (raw)
    Point scaled;
    double topsis_score = 0.0;
};

struct RunRecord {
    int combination_id = 0;
    GaParams params;
    bool ok = true;
    std::string error;
    std::size_t population = 0;
};

struct ModelResult {
    Model model = Model::base;
    std::vector<RunRecord> runs;
    std::size_t pooled_size = 0;
    std::vector<FrontMember> front;  // PF_k, in pooling order
    double hypervolume = 0.0;
};

struct FinalAssignment {
    std::string population_id;
    Day planting_day = 0;
    Day harvest_day = 0;
    int harvest_week = 0;
};

struct StrategyReport {
    bool scenario2 = false;
    std::optional<CapacityBounds> capacity_bounds;
    double scale_factor = 0.0;
    std::uint64_t base_seed = 0;
    std::string instance_hash;
    int site = 0;
    std::optional<Date> horizon_start;

    std::vector<ModelResult> models;
    ScaleBounds bounds;
    Point reference;

    Model selected_model = Model::base;
    std::size_t selected_index = 0;  // into the selected model's front
    Schedule selected;
    std::vector<double> selected_criteria;

    std::vector<FinalAssignment> final_schedule;
    WeeklyHarvest weekly;
    double weekly_capacity = 0.0;

    std::optional<Schedule> baseline;
    std::optional<std::vector<double>> baseline_criteria;

    const ModelResult& selected_result() const;
};

StrategyReport run_strategy(const Instance& instance, const GduForecast& forecast, const StrategyConfig& config);

} // namespace cornsched
