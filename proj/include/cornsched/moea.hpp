#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cornsched/domain.hpp"
#include "cornsched/forecast.hpp"
#include "cornsched/objectives.hpp"
#include "cornsched/random.hpp"

namespace cornsched {

struct GaParams {
    int population_size = 64;   // even
    int generations = 100;
    double crossover_rate = 0.9;
    double mutation_rate = 0.01;
    int penalty_power = 1;      // models 2 and 3
    std::uint64_t rng_seed = 42;

    bool operator==(const GaParams&) const = default;
};

// Throws ContractError when the parameters are unusable.
void check_params(const GaParams& params);

struct CapacityBounds {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double c) const noexcept { return c >= lo && c <= hi; }
    bool operator==(const CapacityBounds&) const = default;
};

// Which criteria the optimizer minimizes. Setting capacity_bounds turns on the
// capacity gene and the fifth criterion.
struct ModelSpec {
    Model model = Model::base;
    std::optional<CapacityBounds> capacity_bounds;

    bool scenario2() const noexcept { return capacity_bounds.has_value(); }
};

struct Member {
    Schedule schedule;
    ObjectiveVector objectives;
    int rank = 0;
    double crowding = 0.0;

    bool operator==(const Member&) const = default;
};

struct EvaluatedPopulation {
    std::vector<Member> members;

    bool operator==(const EvaluatedPopulation&) const = default;
};

// Deb's fast non-dominated sort. Each front lists indices in ascending order.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const ObjectiveVector> objectives);

// Range-normalized crowding distance; boundary points and fronts of size <= 2 get +inf.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

// Uniform per-gene exchange with probability `rate`, otherwise copies.
std::pair<Schedule, Schedule> crossover(const Schedule& parent_a, const Schedule& parent_b, double rate, Rng& rng);

// Random-reset mutation within each planting window; the capacity gene is scaled by
// a factor in [0.9, 1.1] and clamped to `bounds`.
Schedule mutate(const Schedule& schedule, const Instance& instance, double rate, Rng& rng,
                const std::optional<CapacityBounds>& bounds = std::nullopt);

Schedule random_schedule(const Instance& instance, Rng& rng,
                         const std::optional<CapacityBounds>& bounds = std::nullopt);

struct RunOptions {
    unsigned jobs = 1;                     // evaluation workers
    std::ostream* progress = nullptr;      // one line per generation when set
    bool seed_with_original = false;       // put the original schedule into the first population
    std::function<void(int generation, const EvaluatedPopulation&)> on_generation;
};

EvaluatedPopulation run_nsga2(const Instance& instance, const GduForecast& forecast, const ModelSpec& spec,
                              const GaParams& params, const RunOptions& options = {});

// Rank-0 members of a population.
std::vector<Member> first_front(const EvaluatedPopulation& population);

} // namespace cornsched
