#include "dyadic/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

#include "dyadic/errors.hpp"

namespace dyadic {

namespace {

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

nlohmann::ordered_json to_json(const ReportValue& value) {
    if (std::holds_alternative<std::int64_t>(value)) return std::get<std::int64_t>(value);
    if (std::holds_alternative<double>(value)) return std::get<double>(value);
    return std::get<std::string>(value);
}

std::string to_csv(const ReportValue& value) {
    if (std::holds_alternative<std::int64_t>(value)) {
        return std::to_string(std::get<std::int64_t>(value));
    }
    if (std::holds_alternative<double>(value)) {
        return format_double(std::get<double>(value));
    }
    return std::get<std::string>(value);
}

}  // namespace

ReportFormat parse_format(const std::string& text) {
    if (text == "json") return ReportFormat::json;
    if (text == "csv") return ReportFormat::csv;
    throw ParameterError("format must be json or csv, got " + text);
}

void emit(const ExperimentReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::json) {
        nlohmann::ordered_json doc;
        doc["experiment"] = report.experiment;
        nlohmann::ordered_json params;
        for (const auto& [key, value] : report.parameters) params[key] = to_json(value);
        doc["parameters"] = std::move(params);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : report.rows) {
            nlohmann::ordered_json entry;
            for (std::size_t c = 0; c < report.columns.size(); ++c) {
                entry[report.columns[c]] = to_json(row[c]);
            }
            rows.push_back(std::move(entry));
        }
        doc["rows"] = std::move(rows);
        nlohmann::ordered_json summary;
        for (const auto& [key, value] : report.summary) summary[key] = to_json(value);
        doc["summary"] = std::move(summary);
        doc["verdict"] = report.pass ? "pass" : "fail";
        out << doc.dump(2) << '\n';
        return;
    }

    for (std::size_t c = 0; c < report.columns.size(); ++c) {
        out << (c == 0 ? "" : ",") << report.columns[c];
    }
    out << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c == 0 ? "" : ",") << to_csv(row[c]);
        }
        out << '\n';
    }
    for (const auto& [key, value] : report.parameters) {
        out << "# param " << key << " = " << to_csv(value) << '\n';
    }
    for (const auto& [key, value] : report.summary) {
        out << "# " << key << " = " << to_csv(value) << '\n';
    }
    out << "# verdict = " << (report.pass ? "pass" : "fail") << '\n';
}

void emit_to_path(const ExperimentReport& report, ReportFormat format, const std::string& path) {
    if (path.empty()) {
        emit(report, format, std::cout);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw std::runtime_error("cannot write report to " + path);
    }
    emit(report, format, file);
    if (!file.flush()) {
        throw std::runtime_error("failed writing report to " + path);
    }
}

}  // namespace dyadic
