#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace bergman {

using TableCell = std::variant<double, std::int64_t, std::string>;

/// Flat record table: one header row, uniform columns, CSV or JSON output.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<TableCell>> rows;

    std::vector<TableCell>& add_row() {
        rows.emplace_back();
        rows.back().reserve(columns.size());
        return rows.back();
    }
};

/// 17-significant-digit form: parses back to the identical double.
std::string format_g17(double x);

void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, std::ostream& os);

} // namespace bergman
