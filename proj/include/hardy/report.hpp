#pragma once

#include "hardy/verification.hpp"

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace hardy::report {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest decimal that round-trips to the same double; "nan", "inf", "-inf" otherwise.
std::string format_number(double x);

/// RFC 4180 with a header row and LF line endings.
void write_csv(const Table& table, std::ostream& os);

/// {"columns": [...], "rows": [[...], ...]} plus any extra members.
nlohmann::json table_to_json(const Table& table);

nlohmann::json record_to_json(const ResidualRecord& r);

Table records_to_table(const std::vector<ResidualRecord>& records);

/// Pretty-printed with sorted keys and a trailing newline.
void write_json(const nlohmann::json& doc, std::ostream& os);

} // namespace hardy::report
