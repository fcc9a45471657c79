#pragma once

#include <iosfwd>
#include <string>

#include "cornsched/moea.hpp"
#include "cornsched/pipeline.hpp"
#include "json.hpp"

namespace cornsched {

nlohmann::json to_json(const StrategyReport& report);
StrategyReport report_from_json(const nlohmann::json& j);

nlohmann::json run_manifest(const GaParams& params, const ModelSpec& spec, const std::string& instance_hash);

// One row per front member: model, combination id, raw criteria, scaled criteria, TOPSIS score.
void write_front_csv(std::ostream& out, const ModelResult& result);
// population_id, planting_day, planting_date, harvest_day, harvest_week
void write_schedule_csv(std::ostream& out, const StrategyReport& report);
// week, total, capacity, deviation (total - capacity)
void write_weekly_csv(std::ostream& out, const WeeklyHarvest& weekly, double capacity);
// Bar chart of weekly totals with the capacity as a horizontal line.
void write_weekly_svg(std::ostream& out, const WeeklyHarvest& weekly, double capacity, const std::string& title);

// Writes report.json, front_model<k>.csv, schedule_final.csv, weekly_harvest.csv and
// weekly_harvest.svg into `dir`.
void write_report_files(const std::string& dir, const StrategyReport& report);

} // namespace cornsched
