#include "cornsched/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <sstream>

#include "cornsched/errors.hpp"
#include "cornsched/parallel.hpp"

namespace cornsched {

int scaled_population_size(double size) {
    const auto even = 2 * std::llround(size / 2.0);
    return static_cast<int>(std::max<long long>(2, even));
}

std::vector<GridPoint> build_grid(Model model, int instance_size, double scale_factor, std::uint64_t base_seed,
                                  const TuningGrid& grid) {
    if (instance_size < 1) throw ContractError("instance size must be positive");
    if (!(scale_factor > 0.0 && scale_factor <= 1.0)) throw ContractError("scale_factor must lie in (0, 1]");
    const std::vector<int> powers = model == Model::base ? std::vector<int>{1} : grid.penalty_powers;

    std::vector<GridPoint> out;
    int id = 0;
    for (double cr : grid.crossover_rates) {
        for (double mr : grid.mutation_rates) {
            for (int mult : grid.population_multipliers) {
                for (int gens : grid.generation_counts) {
                    for (int power : powers) {
                        GaParams p;
                        p.crossover_rate = cr;
                        p.mutation_rate = mr;
                        p.population_size = scaled_population_size(static_cast<double>(instance_size) * mult * scale_factor);
                        p.generations = static_cast<int>(std::max<long long>(1, std::llround(gens * scale_factor)));
                        p.penalty_power = power;
                        p.rng_seed = derive_seed(base_seed, (static_cast<std::uint64_t>(model_index(model)) << 32) |
                                                                static_cast<std::uint64_t>(id));
                        out.push_back({id, p});
                        ++id;
                    }
                }
            }
        }
    }
    return out;
}

Schedule baseline_schedule(const Instance& instance) {
    Schedule s;
    s.days.reserve(instance.populations.size());
    for (const auto& p : instance.populations) {
        if (!p.original_day) throw DataError("population " + p.id + " has no original planting date");
        s.days.push_back(std::clamp(*p.original_day, p.early_day, p.late_day));
    }
    return s;
}

ObjectiveVector reference_criteria(const Schedule& schedule, const Instance& instance, const GduForecast& forecast) {
    return evaluate(schedule, instance, forecast, Model::base, 1);
}

std::string instance_hash(const Instance& instance, const GduForecast& forecast) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto bytes = [&](const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 0x100000001b3ULL;
        }
    };
    auto integer = [&](std::int64_t v) { bytes(&v, sizeof v); };
    auto real = [&](double v) { integer(std::bit_cast<std::int64_t>(v)); };

    integer(instance.site);
    integer(instance.horizon_days);
    real(instance.capacity.value_or(-1.0));
    for (const auto& p : instance.populations) {
        integer(static_cast<std::int64_t>(p.id.size()));
        bytes(p.id.data(), p.id.size());
        integer(p.site);
        integer(p.early_day);
        integer(p.late_day);
        real(p.required_gdu);
        integer(p.harvest_qty);
        integer(p.original_day.value_or(-1));
    }
    for (double g : forecast.daily()) real(g);

    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

const ModelResult& StrategyReport::selected_result() const {
    for (const auto& m : models) {
        if (m.model == selected_model) return m;
    }
    throw ContractError("report has no result for the selected model");
}

StrategyReport run_strategy(const Instance& instance, const GduForecast& forecast, const StrategyConfig& config) {
    const bool scenario2 = config.capacity_bounds.has_value();
    if (!scenario2 && !instance.capacity) throw ContractError("instance has no capacity");
    if (config.models.empty()) throw ContractError("no models selected");

    StrategyReport report;
    report.scenario2 = scenario2;
    report.capacity_bounds = config.capacity_bounds;
    report.scale_factor = config.scale_factor;
    report.base_seed = config.base_seed;
    report.instance_hash = instance_hash(instance, forecast);
    report.site = instance.site;
    report.horizon_start = forecast.start();

    struct Job {
        std::size_t model_slot;
        GridPoint point;
    };
    std::vector<Job> jobs;
    for (std::size_t k = 0; k < config.models.size(); ++k) {
        ModelResult result;
        result.model = config.models[k];
        for (const auto& point : build_grid(config.models[k], static_cast<int>(instance.size()), config.scale_factor,
                                            config.base_seed, config.grid)) {
            jobs.push_back({k, point});
            result.runs.push_back({point.combination_id, point.params, true, {}, 0});
        }
        report.models.push_back(std::move(result));
    }

    std::vector<EvaluatedPopulation> finals(jobs.size());
    std::vector<std::string> errors(jobs.size());
    std::mutex log_mutex;
    parallel_for(jobs.size(), config.jobs, [&](std::size_t i) {
        const auto& job = jobs[i];
        ModelSpec spec{config.models[job.model_slot], config.capacity_bounds};
        try {
            finals[i] = run_nsga2(instance, forecast, spec, job.point.params);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
        if (config.log) {
            std::lock_guard lock(log_mutex);
            *config.log << "model " << model_index(spec.model) << " combination " << job.point.combination_id
                        << (errors[i].empty() ? " done" : " FAILED: " + errors[i]) << '\n';
        }
    });

    // Pool per model in combination order and map every schedule to the base criteria.
    std::vector<std::vector<Schedule>> pooled(report.models.size());
    std::vector<std::vector<int>> pooled_ids(report.models.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        auto& run = report.models[jobs[i].model_slot].runs[static_cast<std::size_t>(jobs[i].point.combination_id)];
        if (!errors[i].empty()) {
            run.ok = false;
            run.error = errors[i];
            if (config.log) *config.log << "warning: excluding failed run: " << errors[i] << '\n';
            continue;
        }
        run.population = finals[i].members.size();
        for (auto& m : finals[i].members) {
            pooled[jobs[i].model_slot].push_back(std::move(m.schedule));
            pooled_ids[jobs[i].model_slot].push_back(jobs[i].point.combination_id);
        }
    }

    std::vector<Point> meta_pool;
    std::vector<std::vector<Point>> front_points(report.models.size());
    for (std::size_t k = 0; k < report.models.size(); ++k) {
        auto& result = report.models[k];
        if (pooled[k].empty()) {
            throw RunError("model " + std::to_string(model_index(result.model)) + ": every run failed", 0);
        }
        std::vector<Point> criteria(pooled[k].size());
        parallel_for(pooled[k].size(), config.jobs, [&](std::size_t i) {
            criteria[i] = reference_criteria(pooled[k][i], instance, forecast).values;
        });
        result.pooled_size = criteria.size();
        for (auto i : pareto_front(criteria)) {
            FrontMember fm;
            fm.schedule = pooled[k][i];
            fm.combination_id = pooled_ids[k][i];
            fm.criteria = criteria[i];
            front_points[k].push_back(criteria[i]);
            meta_pool.push_back(criteria[i]);
            result.front.push_back(std::move(fm));
        }
    }

    const std::size_t arity = meta_pool.front().size();
    report.bounds = scale_bounds(meta_pool);
    report.reference = config.reference.empty() ? Point(arity, 2.0) : config.reference;
    if (report.reference.size() != arity) throw ContractError("reference point arity does not match the criteria");

    const std::vector<double> weights(arity, 1.0);
    for (std::size_t k = 0; k < report.models.size(); ++k) {
        auto& result = report.models[k];
        const auto scaled = scale_with(front_points[k], report.bounds);
        result.hypervolume = hypervolume(scaled, report.reference);
        const auto topsis = topsis_select(front_points[k], weights);
        for (std::size_t i = 0; i < result.front.size(); ++i) {
            result.front[i].scaled = scaled[i];
            result.front[i].topsis_score = topsis.scores[i];
        }
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k < report.models.size(); ++k) {
        if (report.models[k].hypervolume > report.models[best].hypervolume) best = k;
    }
    report.selected_model = report.models[best].model;
    report.selected_index = topsis_select(front_points[best], weights).selected;
    const FrontMember& chosen = report.models[best].front[report.selected_index];
    report.selected = chosen.schedule;
    report.selected_criteria = chosen.criteria;

    const auto assignment = assign_harvest(report.selected, instance, forecast);
    report.weekly = weekly_harvest(report.selected, instance, forecast);
    report.weekly_capacity = report.selected.capacity_hat.value_or(instance.capacity.value_or(0.0));
    for (std::size_t i = 0; i < instance.size(); ++i) {
        report.final_schedule.push_back({instance.populations[i].id, report.selected.days[i],
                                         assignment.harvest_days[i], assignment.harvest_weeks[i]});
    }

    const bool has_original = std::all_of(instance.populations.begin(), instance.populations.end(),
                                          [](const SeedPopulation& p) { return p.original_day.has_value(); });
    if (has_original && !instance.populations.empty()) {
        Schedule base = baseline_schedule(instance);
        // Compare at the chosen capacity when capacity is a decision variable.
        base.capacity_hat = report.selected.capacity_hat;
        report.baseline_criteria = reference_criteria(base, instance, forecast).values;
        report.baseline = std::move(base);
    }
    return report;
}

} // namespace cornsched
