#include "cornsched/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>

#include "cornsched/csv.hpp"
#include "cornsched/errors.hpp"

namespace cornsched {

namespace {

[[noreturn]] void row_error(const CsvRow& row, const std::string& what) {
    throw DataError("line " + std::to_string(row.line) + ": " + what);
}

template <typename T>
T parse_number(const CsvRow& row, const std::string& text, const char* column) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        row_error(row, std::string("invalid ") + column + " '" + text + "'");
    }
    return value;
}

Date parse_date(const CsvRow& row, const std::string& text, const char* column) {
    try {
        return parse_iso_date(text);
    } catch (const DataError& e) {
        row_error(row, std::string(column) + ": " + e.what());
    }
}

// Maps required column names to positions; warns on unknown columns.
std::vector<int> resolve_columns(const CsvTable& table, const std::vector<std::string>& required,
                                 const std::vector<std::string>& optional, std::vector<std::string>* warnings) {
    std::vector<int> pos;
    for (const auto& name : required) {
        const int c = table.column(name);
        if (c < 0) throw DataError("missing required column '" + name + "'");
        pos.push_back(c);
    }
    for (const auto& name : optional) pos.push_back(table.column(name));
    for (const auto& h : table.header) {
        const bool known = std::find(required.begin(), required.end(), h) != required.end() ||
                           std::find(optional.begin(), optional.end(), h) != optional.end();
        if (!known && warnings) warnings->push_back("ignoring unknown column '" + h + "'");
    }
    return pos;
}

std::string format_real(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

} // namespace

std::vector<SeedPopulation> read_populations(std::istream& in, const Date& horizon_start,
                                             std::vector<std::string>* warnings) {
    const CsvTable table = parse_csv(in);
    const auto col = resolve_columns(table, {"id", "site", "early_date", "late_date", "required_gdu", "harvest_qty"},
                                     {"original_date"}, warnings);
    std::vector<SeedPopulation> out;
    std::set<std::string> ids;
    for (const auto& row : table.rows) {
        const auto& f = row.fields;
        SeedPopulation p;
        p.id = f[static_cast<std::size_t>(col[0])];
        if (p.id.empty()) row_error(row, "empty id");
        if (!ids.insert(p.id).second) row_error(row, "duplicate population id '" + p.id + "'");
        p.site = parse_number<int>(row, f[static_cast<std::size_t>(col[1])], "site");
        p.early_day = day_of_date(horizon_start, parse_date(row, f[static_cast<std::size_t>(col[2])], "early_date"));
        p.late_day = day_of_date(horizon_start, parse_date(row, f[static_cast<std::size_t>(col[3])], "late_date"));
        p.required_gdu = parse_number<double>(row, f[static_cast<std::size_t>(col[4])], "required_gdu");
        p.harvest_qty = parse_number<std::int64_t>(row, f[static_cast<std::size_t>(col[5])], "harvest_qty");
        if (col[6] >= 0 && !f[static_cast<std::size_t>(col[6])].empty()) {
            p.original_day =
                day_of_date(horizon_start, parse_date(row, f[static_cast<std::size_t>(col[6])], "original_date"));
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<SeedPopulation> load_populations(const std::string& path, const Date& horizon_start,
                                             std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    try {
        return read_populations(in, horizon_start, warnings);
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

void write_populations(std::ostream& out, const std::vector<SeedPopulation>& populations, const Date& horizon_start) {
    out << "id,site,early_date,late_date,required_gdu,harvest_qty,original_date\n";
    for (const auto& p : populations) {
        out << p.id << ',' << p.site << ',' << format_iso_date(date_of_day(horizon_start, p.early_day)) << ','
            << format_iso_date(date_of_day(horizon_start, p.late_day)) << ',' << format_real(p.required_gdu) << ','
            << p.harvest_qty << ',';
        if (p.original_day) out << format_iso_date(date_of_day(horizon_start, *p.original_day));
        out << '\n';
    }
}

Instance make_instance(const std::vector<SeedPopulation>& populations, int site, int horizon_days,
                       std::optional<double> capacity) {
    Instance inst;
    inst.site = site;
    inst.horizon_days = horizon_days;
    inst.capacity = capacity;
    for (const auto& p : populations) {
        if (p.site == site) inst.populations.push_back(p);
    }
    return inst;
}

std::map<int, GduHistory> read_gdu_csv(std::istream& in) {
    const CsvTable table = parse_csv(in);
    const auto col = resolve_columns(table, {"site", "date", "gdu"}, {}, nullptr);
    std::map<int, GduHistory> out;
    for (const auto& row : table.rows) {
        const auto& f = row.fields;
        const int site = parse_number<int>(row, f[static_cast<std::size_t>(col[0])], "site");
        const Date date = parse_date(row, f[static_cast<std::size_t>(col[1])], "date");
        const double gdu = parse_number<double>(row, f[static_cast<std::size_t>(col[2])], "gdu");
        if (!(gdu >= 0.0)) row_error(row, "negative gdu");
        auto& h = out[site];
        h.site = site;
        if (!h.records.emplace(date, gdu).second) row_error(row, "duplicate date " + format_iso_date(date));
    }
    return out;
}

std::map<int, GduHistory> load_gdu_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    try {
        return read_gdu_csv(in);
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

void write_gdu_csv(std::ostream& out, const std::vector<GduHistory>& histories) {
    out << "site,date,gdu\n";
    for (const auto& h : histories) {
        for (const auto& [date, gdu] : h.records) {
            out << h.site << ',' << format_iso_date(date) << ',' << format_real(gdu) << '\n';
        }
    }
}

void write_forecast_csv(std::ostream& out, const GduForecast& forecast) {
    out << "day_index,calendar_date,gdu\n";
    const auto daily = forecast.daily();
    for (int d = 1; d <= forecast.days(); ++d) {
        out << d << ',';
        if (forecast.start()) out << format_iso_date(date_of_day(*forecast.start(), d));
        out << ',' << format_real(daily[static_cast<std::size_t>(d - 1)]) << '\n';
    }
}

GduForecast read_forecast_csv(std::istream& in) {
    const CsvTable table = parse_csv(in);
    const auto col = resolve_columns(table, {"day_index", "gdu"}, {"calendar_date"}, nullptr);
    std::vector<double> daily;
    std::optional<Date> start;
    for (const auto& row : table.rows) {
        const auto& f = row.fields;
        const int day = parse_number<int>(row, f[static_cast<std::size_t>(col[0])], "day_index");
        if (day != static_cast<int>(daily.size()) + 1) {
            row_error(row, "day_index " + std::to_string(day) + " out of sequence");
        }
        const double gdu = parse_number<double>(row, f[static_cast<std::size_t>(col[1])], "gdu");
        if (!(gdu >= 0.0)) row_error(row, "negative gdu");
        if (day == 1 && col[2] >= 0 && !f[static_cast<std::size_t>(col[2])].empty()) {
            start = parse_date(row, f[static_cast<std::size_t>(col[2])], "calendar_date");
        }
        daily.push_back(gdu);
    }
    if (daily.empty()) throw DataError("forecast has no rows");
    return GduForecast(std::move(daily), start);
}

GduForecast load_forecast_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    try {
        return read_forecast_csv(in);
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

} // namespace cornsched
