#pragma once
// LAS 2.0 (unwrapped) and flat CSV readers/writers for WellLog.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "swv/well_log.hpp"

namespace swv {

class LasParseError : public std::runtime_error {
public:
    LasParseError(const std::string& message, std::size_t line)
        : std::runtime_error("LAS line " + std::to_string(line) + ": " + message),
          line_number(line) {}
    std::size_t line_number;
};

class CsvParseError : public std::runtime_error {
public:
    CsvParseError(const std::string& message, std::size_t line)
        : std::runtime_error("CSV line " + std::to_string(line) + ": " + message),
          line_number(line) {}
    std::size_t line_number;
};

// LAS 2.0 text with ~V, ~W, ~C, ~A sections, one depth per data line.
// Wrapped files (WRAP YES) are rejected. A descending depth column is
// normalized to ascending with curves reversed to match. Samples equal to
// the declared NULL become missing.
WellLog parse_las(std::istream& in);
WellLog parse_las_text(const std::string& text);
WellLog read_las_file(const std::filesystem::path& path);

// Emits LAS 2.0 with 10 significant digits; missing samples are written as
// the well's null_value literal.
void write_las(const WellLog& log, std::ostream& out);
std::string write_las_text(const WellLog& log);
void write_las_file(const WellLog& log, const std::filesystem::path& path);

// Comma-delimited with a header row; depth_column names the depth.
// Empty cells and NaN literals become missing.
WellLog parse_csv(std::istream& in, const std::string& depth_column);
WellLog parse_csv_text(const std::string& text, const std::string& depth_column);
WellLog read_csv_file(const std::filesystem::path& path, const std::string& depth_column);

}  // namespace swv
