#include "cornsched/report.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "cornsched/errors.hpp"

namespace cornsched {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "cornsched-strategy-report/1";

std::string fmt_real(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

json params_json(const GaParams& p) {
    return {{"population_size", p.population_size}, {"generations", p.generations},
            {"crossover_rate", p.crossover_rate},   {"mutation_rate", p.mutation_rate},
            {"penalty_power", p.penalty_power},     {"rng_seed", p.rng_seed}};
}

GaParams params_from(const json& j) {
    GaParams p;
    p.population_size = j.at("population_size").get<int>();
    p.generations = j.at("generations").get<int>();
    p.crossover_rate = j.at("crossover_rate").get<double>();
    p.mutation_rate = j.at("mutation_rate").get<double>();
    p.penalty_power = j.at("penalty_power").get<int>();
    p.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    return p;
}

json capacity_json(const std::optional<double>& c) { return c ? json(*c) : json(nullptr); }

std::optional<double> capacity_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

std::vector<std::string> criteria_names(std::size_t arity) {
    std::vector<std::string> names{"f11", "f12", "f13", "f14"};
    if (arity > 4) names.push_back("capacity");
    names.resize(arity);
    return names;
}

std::optional<std::string> date_text(const std::optional<Date>& start, Day day) {
    if (!start) return std::nullopt;
    return format_iso_date(date_of_day(*start, day));
}

} // namespace

json to_json(const StrategyReport& r) {
    json j;
    j["format"] = kFormat;
    j["scenario"] = r.scenario2 ? 2 : 1;
    if (r.scenario2) {
        j["scenario_note"] = "interpretation: the capacity gene replaces C in the base criteria and is appended as a "
                             "fifth minimized criterion";
        j["capacity_bounds"] = {{"lo", r.capacity_bounds->lo}, {"hi", r.capacity_bounds->hi}};
    } else {
        j["capacity_bounds"] = nullptr;
    }
    j["scale_factor"] = r.scale_factor;
    j["base_seed"] = r.base_seed;
    j["instance_hash"] = r.instance_hash;
    j["site"] = r.site;
    j["horizon_start"] = r.horizon_start ? json(format_iso_date(*r.horizon_start)) : json(nullptr);
    j["criteria"] = criteria_names(r.reference.size());
    j["reference"] = r.reference;
    j["reference_note"] = "the hypervolume ordering of the fronts is expected to be insensitive to the reference point";
    j["scaling_bounds"] = {{"min", r.bounds.min}, {"max", r.bounds.max}};

    json models = json::array();
    for (const auto& m : r.models) {
        json runs = json::array();
        for (const auto& run : m.runs) {
            json jr = params_json(run.params);
            jr["combination_id"] = run.combination_id;
            jr["ok"] = run.ok;
            jr["error"] = run.error;
            jr["final_population"] = run.population;
            runs.push_back(std::move(jr));
        }
        json front = json::array();
        for (const auto& f : m.front) {
            front.push_back({{"combination_id", f.combination_id},
                             {"days", f.schedule.days},
                             {"capacity_hat", capacity_json(f.schedule.capacity_hat)},
                             {"criteria", f.criteria},
                             {"scaled", f.scaled},
                             {"topsis_score", f.topsis_score}});
        }
        models.push_back({{"model", model_index(m.model)},
                          {"hypervolume", m.hypervolume},
                          {"pooled_size", m.pooled_size},
                          {"runs", std::move(runs)},
                          {"front", std::move(front)}});
    }
    j["models"] = std::move(models);

    j["selected"] = {{"model", model_index(r.selected_model)},
                     {"index", r.selected_index},
                     {"days", r.selected.days},
                     {"capacity_hat", capacity_json(r.selected.capacity_hat)},
                     {"criteria", r.selected_criteria}};

    json schedule = json::array();
    for (const auto& a : r.final_schedule) {
        auto date = date_text(r.horizon_start, a.planting_day);
        schedule.push_back({{"population_id", a.population_id},
                            {"planting_day", a.planting_day},
                            {"planting_date", date ? json(*date) : json(nullptr)},
                            {"harvest_day", a.harvest_day},
                            {"harvest_week", a.harvest_week}});
    }
    j["final_schedule"] = std::move(schedule);
    j["weekly_harvest"] = {{"first_week_offset", r.weekly.first_week_offset},
                           {"totals", r.weekly.totals},
                           {"capacity", r.weekly_capacity}};
    if (r.baseline) {
        j["baseline"] = {{"days", r.baseline->days},
                         {"capacity_hat", capacity_json(r.baseline->capacity_hat)},
                         {"criteria", *r.baseline_criteria}};
    } else {
        j["baseline"] = nullptr;
    }
    return j;
}

StrategyReport report_from_json(const json& j) {
    if (j.value("format", std::string{}) != kFormat) throw DataError("not a strategy report");
    StrategyReport r;
    r.scenario2 = j.at("scenario").get<int>() == 2;
    if (!j.at("capacity_bounds").is_null()) {
        r.capacity_bounds = CapacityBounds{j["capacity_bounds"].at("lo").get<double>(),
                                           j["capacity_bounds"].at("hi").get<double>()};
    }
    r.scale_factor = j.at("scale_factor").get<double>();
    r.base_seed = j.at("base_seed").get<std::uint64_t>();
    r.instance_hash = j.at("instance_hash").get<std::string>();
    r.site = j.at("site").get<int>();
    if (!j.at("horizon_start").is_null()) r.horizon_start = parse_iso_date(j["horizon_start"].get<std::string>());
    r.reference = j.at("reference").get<std::vector<double>>();
    r.bounds.min = j.at("scaling_bounds").at("min").get<std::vector<double>>();
    r.bounds.max = j.at("scaling_bounds").at("max").get<std::vector<double>>();

    for (const auto& jm : j.at("models")) {
        ModelResult m;
        m.model = model_from_index(jm.at("model").get<int>());
        m.hypervolume = jm.at("hypervolume").get<double>();
        m.pooled_size = jm.at("pooled_size").get<std::size_t>();
        for (const auto& jr : jm.at("runs")) {
            RunRecord run;
            run.combination_id = jr.at("combination_id").get<int>();
            run.params = params_from(jr);
            run.ok = jr.at("ok").get<bool>();
            run.error = jr.at("error").get<std::string>();
            run.population = jr.at("final_population").get<std::size_t>();
            m.runs.push_back(std::move(run));
        }
        for (const auto& jf : jm.at("front")) {
            FrontMember f;
            f.combination_id = jf.at("combination_id").get<int>();
            f.schedule.days = jf.at("days").get<std::vector<Day>>();
            f.schedule.capacity_hat = capacity_from(jf.at("capacity_hat"));
            f.criteria = jf.at("criteria").get<std::vector<double>>();
            f.scaled = jf.at("scaled").get<std::vector<double>>();
            f.topsis_score = jf.at("topsis_score").get<double>();
            m.front.push_back(std::move(f));
        }
        r.models.push_back(std::move(m));
    }

    const auto& sel = j.at("selected");
    r.selected_model = model_from_index(sel.at("model").get<int>());
    r.selected_index = sel.at("index").get<std::size_t>();
    r.selected.days = sel.at("days").get<std::vector<Day>>();
    r.selected.capacity_hat = capacity_from(sel.at("capacity_hat"));
    r.selected_criteria = sel.at("criteria").get<std::vector<double>>();

    for (const auto& ja : j.at("final_schedule")) {
        r.final_schedule.push_back({ja.at("population_id").get<std::string>(), ja.at("planting_day").get<Day>(),
                                    ja.at("harvest_day").get<Day>(), ja.at("harvest_week").get<int>()});
    }
    const auto& wh = j.at("weekly_harvest");
    r.weekly.first_week_offset = wh.at("first_week_offset").get<int>();
    r.weekly.totals = wh.at("totals").get<std::vector<std::int64_t>>();
    r.weekly_capacity = wh.at("capacity").get<double>();
    if (!j.at("baseline").is_null()) {
        Schedule b;
        b.days = j["baseline"].at("days").get<std::vector<Day>>();
        b.capacity_hat = capacity_from(j["baseline"].at("capacity_hat"));
        r.baseline = std::move(b);
        r.baseline_criteria = j["baseline"].at("criteria").get<std::vector<double>>();
    }
    return r;
}

json run_manifest(const GaParams& params, const ModelSpec& spec, const std::string& hash) {
    json j = params_json(params);
    j["model"] = model_index(spec.model);
    j["scenario"] = spec.scenario2() ? 2 : 1;
    if (spec.capacity_bounds) {
        j["capacity_bounds"] = {{"lo", spec.capacity_bounds->lo}, {"hi", spec.capacity_bounds->hi}};
    }
    j["instance_hash"] = hash;
    return j;
}

void write_front_csv(std::ostream& out, const ModelResult& result) {
    const std::size_t arity = result.front.empty() ? 4 : result.front.front().criteria.size();
    const auto names = criteria_names(arity);
    out << "model,combination_id";
    for (const auto& n : names) out << ',' << n;
    for (const auto& n : names) out << ",scaled_" << n;
    out << ",topsis_score\n";
    for (const auto& f : result.front) {
        out << model_index(result.model) << ',' << f.combination_id;
        for (double v : f.criteria) out << ',' << fmt_real(v);
        for (double v : f.scaled) out << ',' << fmt_real(v);
        out << ',' << fmt_real(f.topsis_score) << '\n';
    }
}

void write_schedule_csv(std::ostream& out, const StrategyReport& report) {
    out << "population_id,planting_day,planting_date,harvest_day,harvest_week\n";
    for (const auto& a : report.final_schedule) {
        out << a.population_id << ',' << a.planting_day << ',' << date_text(report.horizon_start, a.planting_day).value_or("")
            << ',' << a.harvest_day << ',' << a.harvest_week << '\n';
    }
}

void write_weekly_csv(std::ostream& out, const WeeklyHarvest& weekly, double capacity) {
    out << "week,total,capacity,deviation\n";
    for (std::size_t w = 0; w < weekly.totals.size(); ++w) {
        const auto total = weekly.totals[w];
        out << w + 1 << ',' << total << ',' << fmt_real(capacity) << ','
            << fmt_real(static_cast<double>(total) - capacity) << '\n';
    }
}

void write_weekly_svg(std::ostream& out, const WeeklyHarvest& weekly, double capacity, const std::string& title) {
    const double width = 960.0;
    const double height = 420.0;
    const double left = 70.0;
    const double right = 20.0;
    const double top = 40.0;
    const double bottom = 50.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double peak = capacity;
    for (auto t : weekly.totals) peak = std::max(peak, static_cast<double>(t));
    if (!(peak > 0.0)) peak = 1.0;
    peak *= 1.1;
    const std::size_t n = std::max<std::size_t>(weekly.totals.size(), 1);
    const double slot = plot_w / static_cast<double>(n);
    auto y_of = [&](double v) { return top + plot_h * (1.0 - v / peak); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
        << top + plot_h << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
        << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double v = peak * k / 4.0;
        out << "<text x=\"" << left - 6 << "\" y=\"" << y_of(v) + 4 << "\" text-anchor=\"end\">"
            << static_cast<long long>(v) << "</text>\n";
    }
    for (std::size_t w = 0; w < weekly.totals.size(); ++w) {
        const double v = static_cast<double>(weekly.totals[w]);
        const double x = left + slot * static_cast<double>(w) + slot * 0.1;
        const std::string fill = v > capacity ? "#d9534f" : "#5b8ff9";
        out << "<rect x=\"" << x << "\" y=\"" << y_of(v) << "\" width=\"" << slot * 0.8 << "\" height=\""
            << top + plot_h - y_of(v) << "\" fill=\"" << fill << "\"/>\n";
        if (n <= 60 || w % 5 == 0) {
            out << "<text x=\"" << x + slot * 0.4 << "\" y=\"" << top + plot_h + 16 << "\" text-anchor=\"middle\">"
                << w + 1 << "</text>\n";
        }
    }
    out << "<line x1=\"" << left << "\" y1=\"" << y_of(capacity) << "\" x2=\"" << left + plot_w << "\" y2=\""
        << y_of(capacity) << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";
    out << "<text x=\"" << left + plot_w << "\" y=\"" << y_of(capacity) - 6 << "\" text-anchor=\"end\">capacity "
        << fmt_real(capacity) << "</text>\n";
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">week</text>\n";
    out << "</svg>\n";
}

void write_report_files(const std::string& dir, const StrategyReport& report) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto open = [&](const std::string& name) {
        std::ofstream f(fs::path(dir) / name);
        if (!f) throw DataError("cannot write " + (fs::path(dir) / name).string());
        return f;
    };
    {
        auto f = open("report.json");
        f << to_json(report).dump(2) << '\n';
    }
    for (const auto& m : report.models) {
        auto f = open("front_model" + std::to_string(model_index(m.model)) + ".csv");
        write_front_csv(f, m);
    }
    {
        auto f = open("schedule_final.csv");
        write_schedule_csv(f, report);
    }
    {
        auto f = open("weekly_harvest.csv");
        write_weekly_csv(f, report.weekly, report.weekly_capacity);
    }
    {
        auto f = open("weekly_harvest.svg");
        write_weekly_svg(f, report.weekly, report.weekly_capacity,
                         "Weekly harvest, model " + std::to_string(model_index(report.selected_model)) +
                             " selection, site " + std::to_string(report.site));
    }
}

} // namespace cornsched
