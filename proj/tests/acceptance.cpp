// Acceptance checks AC1-AC10. One PASS/FAIL line per criterion; exit status is the
// number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cornsched/errors.hpp"
#include "cornsched/front.hpp"
#include "cornsched/harvest.hpp"
#include "cornsched/moea.hpp"
#include "cornsched/objectives.hpp"
#include "cornsched/pipeline.hpp"
#include "cornsched/report.hpp"
#include "cornsched/synthetic.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cornsched;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << "failed: " << what << "; ";
        ok = ok && cond;
    }
};

std::vector<ObjectiveVector> as_objectives(const std::vector<Point>& pts) {
    std::vector<ObjectiveVector> out;
    for (const auto& p : pts) out.push_back(ObjectiveVector{p, Model::base, 1, false});
    return out;
}

bool weakly_dominates(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) if (a[i] > b[i]) return false;
    return true;
}

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
    return weakly_dominates(a, b) && a != b;
}

WeeklyHarvest weekly(std::vector<std::int64_t> totals) {
    WeeklyHarvest w;
    w.totals = std::move(totals);
    w.first_week_offset = 1;
    return w;
}

bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// AC1
void sorting_oracle(Outcome& out) {
    const auto t0 = Clock::now();
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> coarse(0, 7);
    for (int set = 0; set < 50; ++set) {
        std::vector<Point> pts(200, Point(4));
        for (auto& p : pts) for (auto& x : p) x = set % 2 ? u(gen) : coarse(gen);
        out.require(fast_nondominated_sort(as_objectives(pts)) == oracle::peel_fronts(pts), "sort vs peeling");
        out.require(pareto_front(pts) == oracle::nondominated(pts), "pareto_front vs filter");
    }
    const double t = seconds_since(t0);
    out.require(t < 5.0, "runtime under 5 s");
    out.detail << "50 sets of 200 points, " << t << " s";
}

// AC2
void hypervolume_exactness(Outcome& out) {
    const auto t0 = Clock::now();
    out.require(hypervolume(std::vector<Point>{{0, 0, 0, 0}}, Point(4, 2.0)) == 16.0, "origin gives 16");
    out.require(hypervolume(std::vector<Point>{{1, 1, 1, 1}}, Point(4, 2.0)) == 1.0, "unit cube");
    const std::vector<Point> two{{0, 1, 1, 1}, {1, 0, 1, 1}};
    out.require(hypervolume(two, Point(4, 2.0)) == oracle::inclusion_exclusion_hv(two, Point(4, 2.0)), "two points");
    out.require(hypervolume(two, Point(4, 2.0)) == 3.0, "two points give 3");

    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 5 + static_cast<std::size_t>(k) % 11;
        const auto front = oracle::random_front(n, 4, 1000 + static_cast<std::uint64_t>(k));
        Point lower(4, 2.0);
        for (const auto& p : front) for (std::size_t o = 0; o < 4; ++o) lower[o] = std::min(lower[o], p[o]);
        const Point ref(4, 2.0);
        const double exact = hypervolume(front, ref);
        const double mc = oracle::monte_carlo_hv(front, ref, lower, 10'000'000, 77 + static_cast<std::uint64_t>(k));
        worst = std::max(worst, std::fabs(exact - mc) / exact);
    }
    const double t = seconds_since(t0);
    out.require(worst < 0.005, "Monte Carlo within 0.5%");
    out.require(t < 60.0, "runtime under 60 s");
    out.detail << "20 fronts, worst relative gap " << worst << ", " << t << " s";
}

// AC3
void harvest_oracle(Outcome& out) {
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<int> quarter(1, 120);
    std::vector<double> daily(365);
    // Multiples of 1/4 keep every prefix sum exact, so boundary cases are exact too.
    for (auto& v : daily) v = quarter(gen) / 4.0;
    const GduForecast f(daily);
    std::uniform_int_distribution<int> plant(1, 200);
    std::uniform_real_distribution<double> req(0.0, 2500.0);
    int boundary = 0;
    for (int k = 0; k < 1000; ++k) {
        const int p = plant(gen);
        double g = req(gen);
        if (k % 4 == 0) {
            const int d = std::min(365, p + static_cast<int>(g / 15.0));
            g = cumulative_gdu(f, p, d);
            ++boundary;
        }
        const int expected = oracle::naive_harvest_day(p, g, daily);
        if (expected < 0) {
            bool threw = false;
            try {
                harvest_day(p, g, f);
            } catch (const UnharvestableError&) {
                threw = true;
            }
            out.require(threw, "unharvestable case");
        } else {
            out.require(harvest_day(p, g, f) == expected, "harvest day");
        }
    }
    out.detail << "1000 cases, " << boundary << " on an exact prefix sum";
}

// AC4
void objective_cross_checks(Outcome& out) {
    std::mt19937_64 gen(4);
    std::uniform_int_distribution<int> len(1, 40);
    std::uniform_int_distribution<int> qty(0, 4000);
    std::uniform_real_distribution<double> cap(100.0, 3000.0);
    std::bernoulli_distribution zero(0.2);
    int equal_zero = 0;
    for (int k = 0; k < 10'000; ++k) {
        std::vector<std::int64_t> h(static_cast<std::size_t>(len(gen)));
        for (auto& x : h) x = zero(gen) ? 0 : qty(gen);
        h.front() = std::max<std::int64_t>(h.front(), 1);
        const double c = k % 10 == 0 ? static_cast<double>(h.front()) : std::round(cap(gen));
        const int r = 1 + k % 3;
        const auto w = weekly(h);
        const auto m1 = eval_model1(w, c);
        const auto m2 = eval_model2(w, c, r);
        const auto m3 = eval_model3(w, c, r);
        const auto m3r1 = eval_model3(w, c, 1);
        out.require(m3r1[0] == m1[0] && m3r1[1] == m1[1], "r = 1 equality");
        out.require((m1[3] == 0.0) == (m2[1] == 0.0), "f14 = 0 iff f22 = 0");
        equal_zero += m1[3] == 0.0;
        const auto naive = oracle::naive_criteria(h, c, r);
        for (std::size_t i = 0; i < 4; ++i) {
            out.require(close_rel(m1[i], naive.m1[i], 1e-9), "model 1 vs naive");
            out.require(close_rel(m2[i], naive.m2[i], 1e-9), "model 2 vs naive");
            out.require(close_rel(m3[i], naive.m3[i], 1e-9), "model 3 vs naive");
        }
    }
    out.detail << "10000 vectors, " << equal_zero << " without waste";
}

// AC5
void topsis_golden(Outcome& out) {
    const std::vector<Point> front{{1, 5, 3}, {2, 2, 4}, {4, 1, 1}};
    const auto r = topsis_select(front, Point{1, 1, 1});
    const std::vector<Point> f{{0.21821789023599238127, 0.91287092917527685576, 0.58834840541455209577},
                               {0.43643578047198476253, 0.3651483716701107423, 0.7844645405527361277},
                               {0.87287156094396952506, 0.18257418583505537115, 0.19611613513818403192}};
    const Point s_plus{0.82896289855426411568, 0.65353364649895961284, 0.6546536707079771438};
    const Point s_minus{0.68339810288949956447, 0.70034005345702631474, 0.93780977787991712066};
    const Point c{0.45187498370898143699, 0.51728610540244203196, 0.58890505694903913133};
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            worst = std::max(worst, std::fabs(r.normalized[i][j] - f[i][j]));
            worst = std::max(worst, std::fabs(r.weighted[i][j] - f[i][j]));
        }
        worst = std::max({worst, std::fabs(r.distance_ideal[i] - s_plus[i]),
                          std::fabs(r.distance_anti_ideal[i] - s_minus[i]), std::fabs(r.scores[i] - c[i])});
    }
    out.require(worst <= 1e-12, "values within 1e-12");
    out.require(r.selected == 2, "selects point 3");
    out.detail << "largest deviation " << worst << ", selected index " << r.selected;
}

// AC6
void grid_cardinality(Outcome& out) {
    const auto g1 = build_grid(Model::base, 1376, 1.0, 42);
    const auto g2 = build_grid(Model::overcapacity_penalty, 1376, 1.0, 42);
    const auto g3 = build_grid(Model::uniform_deviation, 1376, 1.0, 42);
    out.require(g1.size() == 81 && g2.size() == 243 && g3.size() == 243, "81/243/243 combinations");
    std::set<double> cr, mr;
    std::set<int> sizes, gens, powers;
    for (const auto& p : g3) {
        cr.insert(p.params.crossover_rate);
        mr.insert(p.params.mutation_rate);
        sizes.insert(p.params.population_size);
        gens.insert(p.params.generations);
        powers.insert(p.params.penalty_power);
    }
    out.require(cr == std::set<double>{0.5, 0.75, 1.0}, "crossover levels");
    out.require(mr == std::set<double>{0.001, 0.01, 0.1}, "mutation levels");
    out.require(sizes == std::set<int>{1376, 2752, 4128}, "population levels");
    out.require(gens == std::set<int>{8000, 10000, 12000}, "generation levels");
    out.require(powers == std::set<int>{1, 2, 3}, "power levels");
    out.detail << g1.size() << "/" << g2.size() << "/" << g3.size() << " combinations";
}

// AC7
void optimizer_efficacy(Outcome& out) {
    const auto s = fixtures::synthetic();
    const auto t0 = Clock::now();
    Rng probe(2024);
    double waste = 0.0;
    std::int64_t total = 0;
    for (const auto& p : s.instance.populations) total += p.harvest_qty;
    for (int k = 0; k < 200; ++k) {
        waste += evaluate(random_schedule(s.instance, probe), s.instance, s.forecast, Model::base, 1)[3];
    }
    const double random_waste = waste / 200.0 / static_cast<double>(total);
    out.require(random_waste >= 0.10, "random schedules waste at least 10%");

    GaParams params;
    params.population_size = 64;
    params.generations = 150;
    params.crossover_rate = 0.9;
    params.mutation_rate = 1.0 / 50.0;
    params.rng_seed = 42;
    std::vector<Point> ga;
    for (const auto& m : first_front(run_nsga2(s.instance, s.forecast, ModelSpec{}, params))) ga.push_back(m.objectives.values);

    // Same number of evaluations as the GA: initial population plus one offspring batch per generation.
    Rng rng(4242);
    std::vector<Point> sampled;
    for (int k = 0; k < 64 * 151; ++k) {
        sampled.push_back(evaluate(random_schedule(s.instance, rng), s.instance, s.forecast, Model::base, 1).values);
    }
    std::vector<Point> random;
    for (auto i : pareto_front(sampled)) random.push_back(sampled[i]);
    std::vector<Point> all = ga;
    all.insert(all.end(), random.begin(), random.end());
    const auto bounds = scale_bounds(all);
    const Point ref(4, 2.0);
    const double hv_ga = hypervolume(scale_with(ga, bounds), ref);
    const double hv_random = hypervolume(scale_with(random, bounds), ref);
    const double t = seconds_since(t0);
    out.require(hv_ga >= 1.05 * hv_random, "GA volume at least 5% above random search");
    out.require(t < 120.0, "runtime under 120 s");
    out.detail << "random waste " << 100.0 * random_waste << "%, HV GA " << hv_ga << " vs random " << hv_random << " (+"
               << 100.0 * (hv_ga / hv_random - 1.0) << "%), " << t << " s";
}

// AC8
void pipeline_reproduction(Outcome& out) {
    const auto s = fixtures::synthetic();
    StrategyConfig config;
    config.scale_factor = 0.02;
    const auto t0 = Clock::now();
    const auto a = run_strategy(s.instance, s.forecast, config);
    const double t = seconds_since(t0);
    const auto b = run_strategy(s.instance, s.forecast, config);
    config.jobs = 8;
    const auto c = run_strategy(s.instance, s.forecast, config);

    std::size_t ok_runs = 0, runs = 0;
    for (const auto& m : a.models) {
        for (const auto& r : m.runs) {
            ++runs;
            ok_runs += r.ok;
        }
    }
    out.require(runs == 567 && ok_runs == 567, "all 81+243+243 runs completed");
    double best = 0.0;
    for (const auto& m : a.models) best = std::max(best, m.hypervolume);
    out.require(a.selected_result().hypervolume == best, "k* maximizes the volume");
    out.require(a.baseline_criteria.has_value(), "baseline evaluated");
    if (a.baseline_criteria) {
        out.require(!dominates(*a.baseline_criteria, a.selected_criteria), "p* not dominated by the baseline");
        for (const auto& fm : a.selected_result().front) {
            out.require(!dominates(*a.baseline_criteria, fm.criteria), "front member not dominated by the baseline");
        }
    }
    const std::string ja = to_json(a).dump(2);
    out.require(ja == to_json(b).dump(2), "repeat runs byte-identical");
    out.require(ja == to_json(c).dump(2), "1 vs 8 workers byte-identical");
    out.detail << "k* = " << model_index(a.selected_model) << ", volumes";
    for (const auto& m : a.models) out.detail << " " << m.hypervolume;
    out.detail << ", f1(p*) = (";
    for (std::size_t i = 0; i < a.selected_criteria.size(); ++i) out.detail << (i ? "," : "") << a.selected_criteria[i];
    out.detail << ")";
    if (a.baseline_criteria) {
        out.detail << ", baseline = (";
        for (std::size_t i = 0; i < a.baseline_criteria->size(); ++i) out.detail << (i ? "," : "") << (*a.baseline_criteria)[i];
        out.detail << ")";
    }
    out.detail << ", " << t << " s per run";
}

// AC9
void determinism_and_elitism(Outcome& out) {
    const auto s = fixtures::synthetic();
    GaParams params;
    params.population_size = 64;
    params.generations = 200;
    params.mutation_rate = 0.02;
    params.rng_seed = 9;
    for (Model model : {Model::base, Model::overcapacity_penalty, Model::uniform_deviation}) {
        params.penalty_power = model == Model::base ? 1 : 2;
        std::vector<double> best;
        int regressions = 0;
        RunOptions opts;
        opts.on_generation = [&](int, const EvaluatedPopulation& pop) {
            std::vector<double> now = pop.members.front().objectives.values;
            for (const auto& m : pop.members) {
                for (std::size_t o = 0; o < now.size(); ++o) now[o] = std::min(now[o], m.objectives[o]);
            }
            if (!best.empty()) {
                for (std::size_t o = 0; o < now.size(); ++o) regressions += now[o] > best[o];
            }
            best = now;
        };
        const auto first = run_nsga2(s.instance, s.forecast, ModelSpec{model, {}}, params, opts);
        const auto second = run_nsga2(s.instance, s.forecast, ModelSpec{model, {}}, params);
        out.require(first == second, "repeat runs identical");
        out.require(regressions == 0, "best-per-objective never increases");
    }
    out.detail << "3 models, 200 generations, population 64";
}

// AC10
void scenario_two(Outcome& out) {
    const auto s = fixtures::synthetic();
    StrategyConfig config;
    config.scale_factor = 0.02;
    config.capacity_bounds = CapacityBounds{500.0, 3000.0};
    const auto report = run_strategy(s.instance, s.forecast, config);
    std::size_t members = 0;
    for (const auto& m : report.models) {
        for (const auto& fm : m.front) {
            ++members;
            out.require(fm.schedule.capacity_hat && config.capacity_bounds->contains(*fm.schedule.capacity_hat),
                        "capacity within bounds");
            out.require(fm.criteria.size() == 5, "five criteria");
            out.require(fm.schedule.capacity_hat && fm.criteria[4] == *fm.schedule.capacity_hat, "fifth criterion is the capacity");
            out.require(within_windows(fm.schedule, s.instance), "planting windows");
            out.require(fm.criteria[0] >= 0 && fm.criteria[1] >= fm.criteria[0] && fm.criteria[3] >= 0, "criteria ranges");
        }
    }
    out.require(report.selected_criteria.size() == 5, "p* has five criteria");

    const Schedule at{{1, 2, 3}, 700.0};
    const auto w = weekly({700, 700, 700, 700});
    const auto v = eval_scenario2(w, at, Model::base, 1);
    out.require(v.values == std::vector<double>{0.0, 0.0, 4.0, 0.0, 700.0}, "at-capacity case gives (0,0,W,0,C)");
    out.detail << members << " front members, selected capacity " << report.selected.capacity_hat.value_or(0.0)
               << ", at-capacity vector (" << v[0] << "," << v[1] << "," << v[2] << "," << v[3] << "," << v[4] << ")";
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"AC1 dominance and sorting oracle", sorting_oracle},
        {"AC2 hypervolume exactness", hypervolume_exactness},
        {"AC3 harvest-day oracle", harvest_oracle},
        {"AC4 objective cross-checks", objective_cross_checks},
        {"AC5 TOPSIS golden trace", topsis_golden},
        {"AC6 grid cardinality", grid_cardinality},
        {"AC7 optimizer efficacy", optimizer_efficacy},
        {"AC8 pipeline reproduction", pipeline_reproduction},
        {"AC9 determinism and elitism", determinism_and_elitism},
        {"AC10 capacity as a decision", scenario_two},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome out;
        try {
            check(out);
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail << "exception: " << e.what();
        }
        failures += !out.ok;
        std::cout << (out.ok ? "PASS " : "FAIL ") << name << ": " << out.detail.str() << std::endl;
    }
    return failures;
}
