#include "bergman/io.hpp"

#include <json.hpp>

#include <cstdio>

namespace bergman {

std::string format_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << (c ? "," : "") << csv_escape(table.columns[c]);
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ",";
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>)
                        os << format_g17(v);
                    else if constexpr (std::is_same_v<T, std::int64_t>)
                        os << v;
                    else
                        os << csv_escape(v);
                },
                row[c]);
        }
        os << "\n";
    }
}

void write_json(const Table& table, std::ostream& os) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json rec = nlohmann::json::object();
        for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
            std::visit([&](const auto& v) { rec[table.columns[c]] = v; }, row[c]);
        }
        arr.push_back(std::move(rec));
    }
    os << arr.dump(2) << "\n";
}

} // namespace bergman
