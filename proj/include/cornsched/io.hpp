#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cornsched/calendar.hpp"
#include "cornsched/domain.hpp"
#include "cornsched/forecast.hpp"

namespace cornsched {

// Population CSV: id, site, early_date, late_date, required_gdu, harvest_qty, original_date.
// original_date may be empty or the column may be absent. Unknown columns are
// reported through `warnings`.
std::vector<SeedPopulation> read_populations(std::istream& in, const Date& horizon_start,
                                             std::vector<std::string>* warnings = nullptr);
std::vector<SeedPopulation> load_populations(const std::string& path, const Date& horizon_start,
                                             std::vector<std::string>* warnings = nullptr);

void write_populations(std::ostream& out, const std::vector<SeedPopulation>& populations, const Date& horizon_start);

// Populations of one site assembled into an instance.
Instance make_instance(const std::vector<SeedPopulation>& populations, int site, int horizon_days,
                       std::optional<double> capacity);

// GDU CSV: site, date, gdu. One history per site present in the file.
std::map<int, GduHistory> read_gdu_csv(std::istream& in);
std::map<int, GduHistory> load_gdu_csv(const std::string& path);
void write_gdu_csv(std::ostream& out, const std::vector<GduHistory>& histories);

// Forecast CSV: day_index, calendar_date, gdu. calendar_date may be empty when the
// forecast has no start date.
void write_forecast_csv(std::ostream& out, const GduForecast& forecast);
GduForecast read_forecast_csv(std::istream& in);
GduForecast load_forecast_csv(const std::string& path);

} // namespace cornsched
