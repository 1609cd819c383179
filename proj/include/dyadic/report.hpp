#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dyadic {

using ReportValue = std::variant<std::int64_t, double, std::string>;

/// Structured record of one verification run. Deterministic for a fixed
/// parameter set: emission is byte-identical across runs.
struct ExperimentReport {
    std::string experiment;
    std::vector<std::pair<std::string, ReportValue>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<ReportValue>> rows;
    std::vector<std::pair<std::string, ReportValue>> summary;
    bool pass = false;
};

enum class ReportFormat { json, csv };

ReportFormat parse_format(const std::string& text);

/// JSON: one object {experiment, parameters, rows, summary, verdict} with
/// rows keyed by column name. CSV: a header line, one line per row, then
/// summary and verdict as '#'-prefixed trailing comments. Doubles are
/// printed with round-trip precision in both formats.
void emit(const ExperimentReport& report, ReportFormat format, std::ostream& out);

/// Convenience: emit to a file, or to standard output when path is empty.
/// Throws std::runtime_error when the path cannot be written.
void emit_to_path(const ExperimentReport& report, ReportFormat format, const std::string& path);

}  // namespace dyadic
