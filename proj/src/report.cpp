#include "hardy/report.hpp"

#include <charconv>
#include <cmath>

namespace hardy::report {

namespace {

std::string cell_text(const Cell& c)
{
    if (const auto* d = std::get_if<double>(&c)) {
        return format_number(*d);
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) {
        return std::to_string(*i);
    }
    return std::get<std::string>(c);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') {
            q += '"';
        }
        q += ch;
    }
    q += '"';
    return q;
}

nlohmann::json cell_json(const Cell& c)
{
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) {
            return format_number(*d);
        }
        return *d;
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) {
        return *i;
    }
    return std::get<std::string>(c);
}

nlohmann::json number_json(double x)
{
    if (!std::isfinite(x)) {
        return format_number(x);
    }
    return x;
}

} // namespace

std::string format_number(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_csv(const Table& table, std::ostream& os)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << csv_field(table.columns[i]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_field(cell_text(row[i]));
        }
        os << '\n';
    }
}

nlohmann::json table_to_json(const Table& table)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row) {
            r.push_back(cell_json(c));
        }
        rows.push_back(std::move(r));
    }
    return {{"columns", table.columns}, {"rows", std::move(rows)}};
}

nlohmann::json record_to_json(const ResidualRecord& r)
{
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.parameters) {
        params[k] = number_json(v);
    }
    return {{"name", r.name},
            {"parameters", std::move(params)},
            {"lhs", number_json(r.lhs)},
            {"rhs", number_json(r.rhs)},
            {"abs_residual", number_json(r.abs_residual)},
            {"tolerance", number_json(r.tolerance)},
            {"pass", r.pass}};
}

Table records_to_table(const std::vector<ResidualRecord>& records)
{
    Table t;
    t.columns = {"name", "parameters", "lhs", "rhs", "abs_residual", "tolerance", "pass"};
    for (const auto& r : records) {
        std::string params;
        for (const auto& [k, v] : r.parameters) {
            params += (params.empty() ? "" : ";") + k + "=" + format_number(v);
        }
        t.rows.push_back({r.name, params, r.lhs, r.rhs, r.abs_residual, r.tolerance,
                          std::string(r.pass ? "true" : "false")});
    }
    return t;
}

void write_json(const nlohmann::json& doc, std::ostream& os)
{
    os << doc.dump(2) << '\n';
}

} // namespace hardy::report
