// cornsched: synthetic instances, GDU forecasts, single NSGA-II runs and the full
// strategy sweep from the command line.
//
// Exit codes: 0 success, 1 invalid input or arguments, 2 failure while running.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cornsched/calendar.hpp"
#include "cornsched/domain.hpp"
#include "cornsched/errors.hpp"
#include "cornsched/forecast.hpp"
#include "cornsched/harvest.hpp"
#include "cornsched/io.hpp"
#include "cornsched/moea.hpp"
#include "cornsched/pipeline.hpp"
#include "cornsched/report.hpp"
#include "cornsched/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cornsched;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitRuntime = 2;

// Input problems found after argument parsing.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void write_json(const fs::path& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

json read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

std::uint64_t announce_seed(const CLI::Option* opt, std::uint64_t seed) {
    if (opt->count() == 0) std::cerr << "using default seed " << seed << '\n';
    return seed;
}

CapacityBounds parse_bounds(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidInput("--capacity-bounds expects lo:hi, got '" + text + "'");
    CapacityBounds b;
    try {
        std::size_t used = 0;
        b.lo = std::stod(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("lo");
        const auto hi = text.substr(colon + 1);
        b.hi = std::stod(hi, &used);
        if (used != hi.size()) throw std::invalid_argument("hi");
    } catch (const std::logic_error&) {
        throw InvalidInput("--capacity-bounds expects numbers lo:hi, got '" + text + "'");
    }
    if (!(b.lo > 0.0 && b.lo <= b.hi)) throw InvalidInput("--capacity-bounds needs 0 < lo <= hi");
    return b;
}

std::optional<CapacityBounds> scenario_bounds(int scenario, const std::string& bounds) {
    if (scenario == 1) {
        if (!bounds.empty()) throw InvalidInput("--capacity-bounds only applies to --scenario 2");
        return std::nullopt;
    }
    if (bounds.empty()) throw InvalidInput("--scenario 2 requires --capacity-bounds lo:hi");
    return parse_bounds(bounds);
}

// Where an instance comes from. An instance directory written by `generate`
// supplies defaults that individual flags override.
struct InputOptions {
    std::string instance_dir;
    std::string populations;
    std::string history;
    std::string forecast;
    std::string start;
    int days = 0;
    int site = -1;
    double capacity = 0.0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--instance", instance_dir, "Directory written by `generate` (instance.json and CSVs)");
        cmd->add_option("--populations", populations, "Population CSV");
        cmd->add_option("--history", history, "GDU history CSV");
        cmd->add_option("--forecast", forecast, "Daily forecast CSV; replaces --history");
        cmd->add_option("--start", start, "Horizon start date (YYYY-MM-DD)");
        cmd->add_option("--days", days, "Horizon length in days")->check(CLI::PositiveNumber);
        cmd->add_option("--site", site, "Site to schedule")->check(CLI::NonNegativeNumber);
        cmd->add_option("--capacity", capacity, "Weekly harvest capacity (ears)")->check(CLI::PositiveNumber);
    }
};

struct LoadedInstance {
    Instance instance;
    GduForecast forecast;
};

LoadedInstance load_instance(InputOptions in, bool need_capacity) {
    if (!in.instance_dir.empty()) {
        const fs::path dir(in.instance_dir);
        const json meta = read_json(dir / "instance.json");
        if (in.populations.empty()) in.populations = (dir / meta.value("populations", "populations.csv")).string();
        if (in.history.empty() && in.forecast.empty()) in.history = (dir / meta.value("history", "gdu_history.csv")).string();
        if (in.start.empty()) in.start = meta.value("horizon_start", "");
        if (in.days == 0) in.days = meta.value("horizon_days", 0);
        if (in.site < 0) in.site = meta.value("site", 0);
        if (in.capacity == 0.0 && meta.contains("capacity")) in.capacity = meta.at("capacity").get<double>();
    }
    if (in.populations.empty()) throw InvalidInput("no population CSV (use --populations or --instance)");
    if (in.site < 0) in.site = 0;

    std::optional<GduForecast> forecast;
    if (!in.forecast.empty()) {
        forecast = load_forecast_csv(in.forecast);
        if (in.start.empty() && forecast->start()) in.start = format_iso_date(*forecast->start());
        if (in.days == 0) in.days = forecast->days();
    }
    if (in.start.empty()) throw InvalidInput("no horizon start (use --start or --instance)");
    if (in.days <= 0) throw InvalidInput("no horizon length (use --days or --instance)");
    const Date start = parse_iso_date(in.start);

    if (!forecast) {
        if (in.history.empty()) throw InvalidInput("no GDU data (use --history, --forecast or --instance)");
        const auto histories = load_gdu_csv(in.history);
        const auto it = histories.find(in.site);
        if (it == histories.end()) throw InvalidInput("GDU history has no rows for site " + std::to_string(in.site));
        forecast = average_forecast(it->second, start, in.days);
    }

    std::vector<std::string> warnings;
    const auto pops = load_populations(in.populations, start, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    if (need_capacity && in.capacity <= 0.0) throw InvalidInput("no capacity (use --capacity or --instance)");
    std::optional<double> capacity;
    if (in.capacity > 0.0) capacity = in.capacity;
    Instance instance = make_instance(pops, in.site, in.days, capacity);
    if (instance.populations.empty()) throw InvalidInput("no populations for site " + std::to_string(in.site));

    const auto violations = validate_instance(instance, *forecast);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "invalid: " << to_string(v.kind) << ": " << v.message << '\n';
        throw InvalidInput(std::to_string(violations.size()) + " instance violation(s)");
    }
    return {std::move(instance), std::move(*forecast)};
}

// generate ------------------------------------------------------------------

struct GenerateArgs {
    SyntheticConfig config;
    std::string out = "instance";
    std::string start = "2020-01-01";
    const CLI::Option* seed_opt = nullptr;
};

void add_generate(CLI::App& app, GenerateArgs& a) {
    auto* cmd = app.add_subcommand("generate", "Write a synthetic instance (populations, GDU history, metadata)");
    cmd->add_option("--out", a.out, "Output directory")->capture_default_str();
    a.seed_opt = cmd->add_option("--seed", a.config.seed, "Generator seed")->capture_default_str();
    cmd->add_option("--populations", a.config.n_populations, "Number of seed populations")
        ->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--days", a.config.horizon_days, "Horizon length in days")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--start", a.start, "Horizon start date")->capture_default_str();
    cmd->add_option("--history-years", a.config.history_years, "Years of GDU history")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--first-history-year", a.config.first_history_year, "First history year")->capture_default_str();
    cmd->add_option("--capacity", a.config.capacity, "Weekly capacity")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--site", a.config.site, "Site id")->check(CLI::NonNegativeNumber)->capture_default_str();
    cmd->add_option("--window-min", a.config.window_min, "Shortest planting window (days)")->capture_default_str();
    cmd->add_option("--window-max", a.config.window_max, "Longest planting window (days)")->capture_default_str();
}

int run_generate(const GenerateArgs& a) {
    SyntheticConfig config = a.config;
    config.seed = announce_seed(a.seed_opt, config.seed);
    config.horizon_start = parse_iso_date(a.start);
    const auto s = generate_instance(config);

    const fs::path dir(a.out);
    fs::create_directories(dir);
    {
        auto out = open_out(dir / "populations.csv");
        write_populations(out, s.instance.populations, s.horizon_start);
    }
    {
        auto out = open_out(dir / "gdu_history.csv");
        write_gdu_csv(out, {s.history});
    }
    write_json(dir / "instance.json", json{{"site", config.site},
                                           {"capacity", config.capacity},
                                           {"horizon_start", format_iso_date(s.horizon_start)},
                                           {"horizon_days", config.horizon_days},
                                           {"seed", config.seed},
                                           {"populations", "populations.csv"},
                                           {"history", "gdu_history.csv"}});
    std::cout << "wrote " << s.instance.size() << " populations and " << s.history.records.size()
              << " GDU records to " << dir.string() << '\n';
    return 0;
}

// forecast ------------------------------------------------------------------

struct ForecastArgs {
    InputOptions input;
    std::string out = "forecast.csv";
};

void add_forecast(CLI::App& app, ForecastArgs& a) {
    auto* cmd = app.add_subcommand("forecast", "Average the GDU history into a daily forecast CSV");
    cmd->add_option("--instance", a.input.instance_dir, "Directory written by `generate`");
    cmd->add_option("--history", a.input.history, "GDU history CSV");
    cmd->add_option("--start", a.input.start, "Horizon start date (YYYY-MM-DD)");
    cmd->add_option("--days", a.input.days, "Horizon length in days")->check(CLI::PositiveNumber);
    cmd->add_option("--site", a.input.site, "Site")->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", a.out, "Output CSV")->capture_default_str();
}

int run_forecast(ForecastArgs a) {
    auto& in = a.input;
    if (!in.instance_dir.empty()) {
        const fs::path dir(in.instance_dir);
        const json meta = read_json(dir / "instance.json");
        if (in.history.empty()) in.history = (dir / meta.value("history", "gdu_history.csv")).string();
        if (in.start.empty()) in.start = meta.value("horizon_start", "");
        if (in.days == 0) in.days = meta.value("horizon_days", 0);
        if (in.site < 0) in.site = meta.value("site", 0);
    }
    if (in.history.empty() || in.start.empty() || in.days <= 0) {
        throw InvalidInput("forecast needs --history, --start and --days (or --instance)");
    }
    if (in.site < 0) in.site = 0;
    const auto histories = load_gdu_csv(in.history);
    const auto it = histories.find(in.site);
    if (it == histories.end()) throw InvalidInput("GDU history has no rows for site " + std::to_string(in.site));
    const auto f = average_forecast(it->second, parse_iso_date(in.start), in.days);
    auto out = open_out(a.out);
    write_forecast_csv(out, f);
    std::cout << "wrote " << f.days() << " forecast days to " << a.out << '\n';
    return 0;
}

// solve ---------------------------------------------------------------------

struct SolveArgs {
    InputOptions input;
    GaParams params;
    int model = 1;
    int scenario = 1;
    std::string bounds;
    unsigned jobs = 1;
    bool seed_with_original = false;
    bool verbose = false;
    std::string out = "solve";
    const CLI::Option* seed_opt = nullptr;
};

void add_solve(CLI::App& app, SolveArgs& a) {
    auto* cmd = app.add_subcommand("solve", "Run NSGA-II once for one model");
    a.input.add_to(cmd);
    cmd->add_option("--model", a.model, "Objective model (1, 2 or 3)")->check(CLI::Range(1, 3))->capture_default_str();
    cmd->add_option("--scenario", a.scenario, "1: fixed capacity, 2: capacity is a decision")
        ->check(CLI::IsMember({1, 2}))->capture_default_str();
    cmd->add_option("--capacity-bounds", a.bounds, "lo:hi range of the capacity gene (scenario 2)");
    cmd->add_option("--population-size", a.params.population_size, "Population size (even)")->capture_default_str();
    cmd->add_option("--generations", a.params.generations, "Generations")->capture_default_str();
    cmd->add_option("--crossover-rate", a.params.crossover_rate, "Crossover probability")->capture_default_str();
    cmd->add_option("--mutation-rate", a.params.mutation_rate, "Per-gene mutation probability")->capture_default_str();
    cmd->add_option("--power", a.params.penalty_power, "Penalty power r (models 2 and 3)")->capture_default_str();
    a.seed_opt = cmd->add_option("--seed", a.params.rng_seed, "RNG seed")->capture_default_str();
    cmd->add_option("--jobs", a.jobs, "Evaluation workers")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_flag("--seed-original", a.seed_with_original, "Put the original planting dates into the first population");
    cmd->add_flag("--verbose", a.verbose, "Print one line per generation");
    cmd->add_option("--out", a.out, "Output directory")->capture_default_str();
}

int run_solve(const SolveArgs& a) {
    GaParams params = a.params;
    params.rng_seed = announce_seed(a.seed_opt, params.rng_seed);
    try {
        check_params(params);
    } catch (const ContractError& e) {
        throw InvalidInput(e.what());
    }
    const ModelSpec spec{model_from_index(a.model), scenario_bounds(a.scenario, a.bounds)};
    const auto loaded = load_instance(a.input, !spec.scenario2());

    RunOptions opts;
    opts.jobs = a.jobs;
    opts.seed_with_original = a.seed_with_original;
    if (a.verbose) opts.progress = &std::cerr;
    const auto t0 = std::chrono::steady_clock::now();
    const auto front = first_front(run_nsga2(loaded.instance, loaded.forecast, spec, params, opts));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const fs::path dir(a.out);
    fs::create_directories(dir);
    const std::size_t arity = front.front().objectives.arity();
    {
        auto out = open_out(dir / "front.csv");
        out << "member";
        for (std::size_t o = 0; o < arity; ++o) out << ",f" << a.model << o + 1;
        out << '\n';
        for (std::size_t i = 0; i < front.size(); ++i) {
            out << i;
            for (double v : front[i].objectives.values) out << ',' << v;
            out << '\n';
        }
    }
    {
        auto out = open_out(dir / "front_schedules.csv");
        out << "member,population_id,planting_day,harvest_day,harvest_week\n";
        for (std::size_t i = 0; i < front.size(); ++i) {
            const auto h = assign_harvest(front[i].schedule, loaded.instance, loaded.forecast);
            for (std::size_t p = 0; p < loaded.instance.size(); ++p) {
                out << i << ',' << loaded.instance.populations[p].id << ',' << front[i].schedule.days[p] << ','
                    << h.harvest_days[p] << ',' << h.harvest_weeks[p] << '\n';
            }
        }
    }
    write_json(dir / "run_manifest.json", run_manifest(params, spec, instance_hash(loaded.instance, loaded.forecast)));
    write_json(dir / "timing.json", json{{"seconds", seconds}});
    std::cout << "model " << a.model << ": " << front.size() << " rank-0 members written to " << dir.string() << '\n';
    return 0;
}

// strategy ------------------------------------------------------------------

struct StrategyArgs {
    InputOptions input;
    StrategyConfig config;
    int scenario = 1;
    std::string bounds;
    std::vector<int> models{1, 2, 3};
    bool quiet = false;
    std::string out = "strategy";
    const CLI::Option* seed_opt = nullptr;
};

void add_strategy(CLI::App& app, StrategyArgs& a) {
    auto* cmd = app.add_subcommand("strategy", "Sweep the tuning grid for every model, pool fronts and pick a schedule");
    a.input.add_to(cmd);
    cmd->add_option("--scale-factor", a.config.scale_factor, "Multiplier for population sizes and generations")
        ->check(CLI::Range(0.0, 1.0))->capture_default_str();
    a.seed_opt = cmd->add_option("--seed", a.config.base_seed, "Base seed for per-run seeds")->capture_default_str();
    cmd->add_option("--jobs", a.config.jobs, "Concurrent runs")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--scenario", a.scenario, "1: fixed capacity, 2: capacity is a decision")
        ->check(CLI::IsMember({1, 2}))->capture_default_str();
    cmd->add_option("--capacity-bounds", a.bounds, "lo:hi range of the capacity gene (scenario 2)");
    cmd->add_option("--models", a.models, "Models to sweep")->delimiter(',')->check(CLI::Range(1, 3))->capture_default_str();
    cmd->add_option("--reference", a.config.reference, "Hypervolume reference point in scaled space (default 2,...,2)")
        ->delimiter(',');
    cmd->add_option("--crossover-rates", a.config.grid.crossover_rates, "Crossover levels")->delimiter(',')->capture_default_str();
    cmd->add_option("--mutation-rates", a.config.grid.mutation_rates, "Mutation levels")->delimiter(',')->capture_default_str();
    cmd->add_option("--population-multipliers", a.config.grid.population_multipliers, "Population sizes as multiples of N")
        ->delimiter(',')->capture_default_str();
    cmd->add_option("--generation-counts", a.config.grid.generation_counts, "Generation levels")->delimiter(',')->capture_default_str();
    cmd->add_option("--penalty-powers", a.config.grid.penalty_powers, "Power levels (models 2 and 3)")
        ->delimiter(',')->capture_default_str();
    cmd->add_flag("--quiet", a.quiet, "Do not log each finished run");
    cmd->add_option("--out", a.out, "Output directory")->capture_default_str();
}

void print_vector(std::ostream& out, const std::vector<double>& v) {
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ')';
}

int run_strategy_cmd(const StrategyArgs& a) {
    StrategyConfig config = a.config;
    config.base_seed = announce_seed(a.seed_opt, config.base_seed);
    config.capacity_bounds = scenario_bounds(a.scenario, a.bounds);
    config.models.clear();
    for (int m : a.models) config.models.push_back(model_from_index(m));
    if (!a.quiet) config.log = &std::cerr;
    const auto loaded = load_instance(a.input, !config.capacity_bounds);

    const auto t0 = std::chrono::steady_clock::now();
    const auto report = run_strategy(loaded.instance, loaded.forecast, config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    fs::create_directories(a.out);
    write_report_files(a.out, report);
    write_json(fs::path(a.out) / "timing.json", json{{"seconds", seconds}, {"jobs", config.jobs}});

    for (const auto& m : report.models) {
        std::size_t ok = 0;
        for (const auto& r : m.runs) ok += r.ok;
        std::cout << "model " << model_index(m.model) << ": " << ok << "/" << m.runs.size() << " runs, pooled "
                  << m.pooled_size << ", front " << m.front.size() << ", hypervolume " << m.hypervolume << '\n';
    }
    std::cout << "selected model " << model_index(report.selected_model) << ", criteria ";
    print_vector(std::cout, report.selected_criteria);
    std::cout << '\n';
    if (report.baseline_criteria) {
        std::cout << "baseline criteria ";
        print_vector(std::cout, *report.baseline_criteria);
        std::cout << '\n';
    }
    std::cout << "report written to " << a.out << '\n';
    return 0;
}

// report --------------------------------------------------------------------

struct ReportArgs {
    std::string input;
    std::string out;
};

void add_report(CLI::App& app, ReportArgs& a) {
    auto* cmd = app.add_subcommand("report", "Re-render CSVs and the chart from a report.json");
    cmd->add_option("input", a.input, "report.json written by `strategy`")->required();
    cmd->add_option("--out", a.out, "Output directory (default: the report's directory)");
}

int run_report(const ReportArgs& a) {
    StrategyReport report;
    try {
        report = report_from_json(read_json(a.input));
    } catch (const json::exception& e) {
        throw InvalidInput(a.input + ": " + e.what());
    }
    const std::string dir = a.out.empty() ? fs::path(a.input).parent_path().string() : a.out;
    fs::create_directories(dir.empty() ? "." : dir);
    write_report_files(dir.empty() ? "." : dir, report);
    std::cout << "re-rendered report into " << (dir.empty() ? "." : dir) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Corn planting scheduler: weekly harvest vs. storage capacity"};
    app.require_subcommand(1);
    GenerateArgs gen;
    ForecastArgs fc;
    SolveArgs solve;
    StrategyArgs strat;
    ReportArgs rep;
    add_generate(app, gen);
    add_forecast(app, fc);
    add_solve(app, solve);
    add_strategy(app, strat);
    add_report(app, rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (app.got_subcommand("generate")) return run_generate(gen);
        if (app.got_subcommand("forecast")) return run_forecast(fc);
        if (app.got_subcommand("solve")) return run_solve(solve);
        if (app.got_subcommand("strategy")) return run_strategy_cmd(strat);
        if (app.got_subcommand("report")) return run_report(rep);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const UnharvestableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const DegenerateInstanceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitInvalid;
}
