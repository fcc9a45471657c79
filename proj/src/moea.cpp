#include "cornsched/moea.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cornsched/errors.hpp"
#include "cornsched/front.hpp"
#include "cornsched/parallel.hpp"

namespace cornsched {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void check_params(const GaParams& params) {
    std::ostringstream msg;
    if (params.population_size < 2 || params.population_size % 2 != 0) {
        msg << "population_size must be even and >= 2, got " << params.population_size;
    } else if (params.generations < 1) {
        msg << "generations must be >= 1, got " << params.generations;
    } else if (!(params.crossover_rate >= 0.0 && params.crossover_rate <= 1.0)) {
        msg << "crossover_rate must lie in [0, 1], got " << params.crossover_rate;
    } else if (!(params.mutation_rate >= 0.0 && params.mutation_rate <= 1.0)) {
        msg << "mutation_rate must lie in [0, 1], got " << params.mutation_rate;
    } else if (params.penalty_power < 1 || params.penalty_power > 3) {
        msg << "penalty_power must be 1, 2 or 3, got " << params.penalty_power;
    } else {
        return;
    }
    throw ContractError(msg.str());
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const ObjectiveVector> objectives) {
    const std::size_t n = objectives.size();
    if (n == 0) return {};
    const std::size_t m = objectives.front().arity();
    for (const auto& o : objectives) {
        if (o.arity() != m) throw ContractError("objective vectors of mixed arity");
    }

    std::vector<std::vector<std::size_t>> dominated_by_me(n);
    std::vector<std::size_t> domination_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (strictly_dominates(objectives[i].values, objectives[j].values)) {
                dominated_by_me[i].push_back(j);
                ++domination_count[j];
            } else if (strictly_dominates(objectives[j].values, objectives[i].values)) {
                dominated_by_me[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) current.push_back(i);
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto i : current) {
            for (auto j : dominated_by_me[i]) {
                if (--domination_count[j] == 0) next.push_back(j);
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front) {
    const std::size_t n = front.size();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), kInf);
        return dist;
    }
    const std::size_t m = front.front().arity();
    std::vector<std::size_t> order(n);
    for (std::size_t o = 0; o < m; ++o) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return front[a][o] < front[b][o]; });
        dist[order.front()] = kInf;
        dist[order.back()] = kInf;
        const double range = front[order.back()][o] - front[order.front()][o];
        if (!(range > 0.0)) continue;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            dist[order[k]] += (front[order[k + 1]][o] - front[order[k - 1]][o]) / range;
        }
    }
    return dist;
}

std::pair<Schedule, Schedule> crossover(const Schedule& parent_a, const Schedule& parent_b, double rate, Rng& rng) {
    if (parent_a.days.size() != parent_b.days.size() ||
        parent_a.capacity_hat.has_value() != parent_b.capacity_hat.has_value()) {
        throw ContractError("crossover parents come from different instances");
    }
    std::pair<Schedule, Schedule> children{parent_a, parent_b};
    if (!rng.bernoulli(rate)) return children;

    auto& [a, b] = children;
    for (std::size_t i = 0; i < a.days.size(); ++i) {
        if (rng.bernoulli(0.5)) std::swap(a.days[i], b.days[i]);
    }
    if (a.capacity_hat) {
        const double lo = std::min(*parent_a.capacity_hat, *parent_b.capacity_hat);
        const double hi = std::max(*parent_a.capacity_hat, *parent_b.capacity_hat);
        const double mid = 0.5 * (lo + hi);
        const double jitter = rng.uniform(-0.5, 0.5) * (hi - lo);
        a.capacity_hat = std::clamp(mid + jitter, lo, hi);
        b.capacity_hat = std::clamp(mid - jitter, lo, hi);
    }
    return children;
}

Schedule mutate(const Schedule& schedule, const Instance& instance, double rate, Rng& rng,
                const std::optional<CapacityBounds>& bounds) {
    if (schedule.days.size() != instance.populations.size()) {
        throw ContractError("schedule length does not match the instance");
    }
    Schedule out = schedule;
    for (std::size_t i = 0; i < out.days.size(); ++i) {
        if (rng.bernoulli(rate)) {
            const auto& p = instance.populations[i];
            out.days[i] = static_cast<Day>(rng.uniform_int(p.early_day, p.late_day));
        }
    }
    if (out.capacity_hat && rng.bernoulli(rate)) {
        double c = *out.capacity_hat * rng.uniform(0.9, 1.1);
        if (bounds) c = std::clamp(c, bounds->lo, bounds->hi);
        out.capacity_hat = c;
    }
    assert(within_windows(out, instance));
    return out;
}

Schedule random_schedule(const Instance& instance, Rng& rng, const std::optional<CapacityBounds>& bounds) {
    Schedule s;
    s.days.reserve(instance.populations.size());
    for (const auto& p : instance.populations) s.days.push_back(static_cast<Day>(rng.uniform_int(p.early_day, p.late_day)));
    if (bounds) s.capacity_hat = rng.uniform(bounds->lo, bounds->hi);
    return s;
}

std::vector<Member> first_front(const EvaluatedPopulation& population) {
    std::vector<Member> out;
    for (const auto& m : population.members) {
        if (m.rank == 0) out.push_back(m);
    }
    return out;
}

namespace {

// Crowded comparison: lower rank, then larger crowding, then lower index.
std::size_t tournament(const std::vector<Member>& pop, Rng& rng) {
    const auto last = static_cast<std::int64_t>(pop.size()) - 1;
    const auto i = static_cast<std::size_t>(rng.uniform_int(0, last));
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, last));
    const Member& a = pop[i];
    const Member& b = pop[j];
    if (a.rank != b.rank) return a.rank < b.rank ? i : j;
    if (a.crowding != b.crowding) return a.crowding > b.crowding ? i : j;
    return std::min(i, j);
}

// Sorts `pool`, fills `rank` and `crowding`, and keeps the best `keep` members.
std::vector<Member> select_survivors(std::vector<Member> pool, std::size_t keep) {
    std::vector<ObjectiveVector> objectives;
    objectives.reserve(pool.size());
    for (const auto& m : pool) objectives.push_back(m.objectives);
    const auto fronts = fast_nondominated_sort(objectives);

    std::vector<Member> out;
    out.reserve(keep);
    for (std::size_t r = 0; r < fronts.size() && out.size() < keep; ++r) {
        const auto& front = fronts[r];
        std::vector<ObjectiveVector> front_obj;
        front_obj.reserve(front.size());
        for (auto i : front) front_obj.push_back(objectives[i]);
        const auto dist = crowding_distance(front_obj);

        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        if (out.size() + front.size() > keep) {
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] > dist[b]; });
            order.resize(keep - out.size());
        }
        for (auto k : order) {
            Member m = std::move(pool[front[k]]);
            m.rank = static_cast<int>(r);
            m.crowding = dist[k];
            out.push_back(std::move(m));
        }
    }
    return out;
}

void evaluate_all(std::vector<Member>& members, std::size_t from, const Instance& instance,
                  const GduForecast& forecast, const ModelSpec& spec, int power, unsigned jobs, int generation) {
    try {
        parallel_for(members.size() - from, jobs, [&](std::size_t k) {
            auto& m = members[from + k];
            m.objectives = evaluate(m.schedule, instance, forecast, spec.model, power);
        });
    } catch (const std::exception& e) {
        throw RunError("generation " + std::to_string(generation) + ": " + e.what(), generation);
    }
}

void report_progress(std::ostream& out, int generation, const std::vector<Member>& pop) {
    std::size_t rank0 = 0;
    std::vector<double> best;
    for (const auto& m : pop) {
        if (m.rank != 0) continue;
        ++rank0;
        if (best.empty()) best = m.objectives.values;
        for (std::size_t o = 0; o < best.size(); ++o) best[o] = std::min(best[o], m.objectives[o]);
    }
    out << "generation " << generation << " rank0=" << rank0 << " best=";
    for (std::size_t o = 0; o < best.size(); ++o) out << (o ? "," : "") << best[o];
    out << '\n';
}

} // namespace

EvaluatedPopulation run_nsga2(const Instance& instance, const GduForecast& forecast, const ModelSpec& spec,
                              const GaParams& params, const RunOptions& options) {
    check_params(params);
    if (!spec.scenario2() && !instance.capacity) throw ContractError("instance has no capacity");
    if (spec.capacity_bounds && !(spec.capacity_bounds->lo > 0.0 && spec.capacity_bounds->lo <= spec.capacity_bounds->hi)) {
        throw ContractError("capacity bounds must satisfy 0 < lo <= hi");
    }
    const int power = spec.model == Model::base ? 1 : params.penalty_power;
    const auto n = static_cast<std::size_t>(params.population_size);
    const unsigned jobs = std::max(1u, options.jobs);
    Rng rng(params.rng_seed);

    std::vector<Member> pop(n);
    for (std::size_t i = 0; i < n; ++i) pop[i].schedule = random_schedule(instance, rng, spec.capacity_bounds);
    if (options.seed_with_original) {
        Schedule s;
        for (const auto& p : instance.populations) {
            s.days.push_back(std::clamp(p.original_day.value_or(p.early_day), p.early_day, p.late_day));
        }
        s.capacity_hat = pop[0].schedule.capacity_hat;
        pop[0].schedule = std::move(s);
    }
    evaluate_all(pop, 0, instance, forecast, spec, power, jobs, 0);
    pop = select_survivors(std::move(pop), n);
    if (options.progress) report_progress(*options.progress, 0, pop);
    if (options.on_generation) options.on_generation(0, EvaluatedPopulation{pop});

    for (int gen = 1; gen <= params.generations; ++gen) {
        std::vector<Member> pool = pop;
        pool.reserve(2 * n);
        for (std::size_t k = 0; k < n / 2; ++k) {
            const std::size_t a = tournament(pop, rng);
            const std::size_t b = tournament(pop, rng);
            auto [c1, c2] = crossover(pop[a].schedule, pop[b].schedule, params.crossover_rate, rng);
            pool.push_back(Member{mutate(c1, instance, params.mutation_rate, rng, spec.capacity_bounds), {}, 0, 0.0});
            pool.push_back(Member{mutate(c2, instance, params.mutation_rate, rng, spec.capacity_bounds), {}, 0, 0.0});
        }
        evaluate_all(pool, n, instance, forecast, spec, power, jobs, gen);
        pop = select_survivors(std::move(pool), n);

        if (options.progress) report_progress(*options.progress, gen, pop);
        if (options.on_generation) options.on_generation(gen, EvaluatedPopulation{pop});
    }
    return EvaluatedPopulation{std::move(pop)};
}

} // namespace cornsched
