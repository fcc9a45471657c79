#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cornsched {

struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    // Column position or -1.
    int column(std::string_view name) const;
};

// Comma separated, optional double quotes, header on the first non-empty line.
CsvTable parse_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

std::vector<std::string> split_csv_line(std::string_view line);

} // namespace cornsched
