#include "swv/las_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "swv/util.hpp"

namespace swv {

namespace {

bool parse_double_strict(const std::string& token, double& out) {
    if (token.empty()) return false;
    char* end = nullptr;
    out = std::strtod(token.c_str(), &end);
    return end == token.c_str() + token.size();
}

std::vector<std::string> split_whitespace(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

struct HeaderLine {
    std::string mnemonic;
    std::string unit;
    std::string value;
    std::string description;
};

// "MNEM.UNIT  VALUE : DESC" — first dot ends the mnemonic, unit runs to the
// first whitespace, first colon starts the description.
HeaderLine parse_header_line(const std::string& line, std::size_t line_no) {
    const std::size_t dot = line.find('.');
    if (dot == std::string::npos) {
        throw LasParseError("header line missing '.' delimiter: " + line, line_no);
    }
    HeaderLine h;
    h.mnemonic = trim(line.substr(0, dot));
    std::size_t pos = dot + 1;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])) &&
           line[pos] != ':') {
        h.unit.push_back(line[pos]);
        ++pos;
    }
    const std::size_t colon = line.find(':', pos);
    if (colon == std::string::npos) {
        h.value = trim(line.substr(pos));
    } else {
        h.value = trim(line.substr(pos, colon - pos));
        h.description = trim(line.substr(colon + 1));
    }
    return h;
}

void reverse_log(WellLog& log) {
    std::reverse(log.depth.begin(), log.depth.end());
    for (Curve& c : log.curves) std::reverse(c.samples.begin(), c.samples.end());
}

// ascending: fine; descending: reverse in place.
// Returns the index of the first out-of-order row when neither, SIZE_MAX otherwise.
std::size_t normalize_depth_order(WellLog& log) {
    const auto& d = log.depth;
    if (d.size() < 2) return SIZE_MAX;

    bool ascending = true, descending = true;
    std::size_t first_bad = SIZE_MAX;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (!(d[i] > d[i - 1])) ascending = false;
        if (!(d[i] < d[i - 1])) descending = false;
        if (!ascending && !descending && first_bad == SIZE_MAX) first_bad = i;
    }
    if (ascending) return SIZE_MAX;
    if (descending) {
        reverse_log(log);
        return SIZE_MAX;
    }
    return first_bad;
}

}  // namespace

WellLog parse_las(std::istream& in) {
    WellLog log;
    std::vector<HeaderLine> curve_defs;
    std::vector<std::size_t> row_lines;
    char section = 0;
    bool seen_data_section = false;
    std::size_t line_no = 0;
    std::string raw;

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        if (line[0] == '~') {
            section = line.size() > 1
                          ? static_cast<char>(std::toupper(static_cast<unsigned char>(line[1])))
                          : 0;
            if (section == 'A') {
                seen_data_section = true;
                if (curve_defs.empty()) {
                    throw LasParseError("~A section before any ~C curve definitions", line_no);
                }
            }
            continue;
        }

        switch (section) {
            case 'V': {
                const HeaderLine h = parse_header_line(line, line_no);
                const std::string mnem = to_upper(h.mnemonic);
                if (mnem == "WRAP" && to_upper(h.value).rfind("YES", 0) == 0) {
                    throw LasParseError("wrapped (WRAP YES) files are not supported", line_no);
                }
                if (mnem == "VERS") {
                    double v = 0.0;
                    if (parse_double_strict(h.value, v) && v >= 3.0) {
                        throw LasParseError("LAS version " + h.value + " is not supported",
                                            line_no);
                    }
                }
                break;
            }
            case 'W': {
                const HeaderLine h = parse_header_line(line, line_no);
                const std::string mnem = to_upper(h.mnemonic);
                if (mnem == "NULL") {
                    double v = 0.0;
                    if (!parse_double_strict(h.value, v)) {
                        throw LasParseError("unparseable NULL value '" + h.value + "'", line_no);
                    }
                    log.null_value = v;
                } else if (mnem == "WELL") {
                    log.well_name = h.value.empty() ? h.description : h.value;
                }
                break;
            }
            case 'C':
                curve_defs.push_back(parse_header_line(line, line_no));
                break;
            case 'A': {
                const std::vector<std::string> tokens = split_whitespace(line);
                if (tokens.size() != curve_defs.size()) {
                    throw LasParseError("expected " + std::to_string(curve_defs.size()) +
                                            " columns, found " + std::to_string(tokens.size()),
                                        line_no);
                }
                std::vector<double> row(tokens.size());
                for (std::size_t j = 0; j < tokens.size(); ++j) {
                    if (!parse_double_strict(tokens[j], row[j])) {
                        throw LasParseError("unparseable value '" + tokens[j] + "'", line_no);
                    }
                }
                if (log.curves.empty()) {
                    log.depth_unit = curve_defs[0].unit;
                    log.curves.resize(curve_defs.size() - 1);
                    for (std::size_t j = 1; j < curve_defs.size(); ++j) {
                        log.curves[j - 1].mnemonic = curve_defs[j].mnemonic;
                        log.curves[j - 1].unit = curve_defs[j].unit;
                        log.curves[j - 1].description = curve_defs[j].description;
                    }
                }
                log.depth.push_back(row[0]);
                for (std::size_t j = 1; j < row.size(); ++j) {
                    const double v = row[j];
                    log.curves[j - 1].samples.push_back(
                        v == log.null_value ? std::numeric_limits<double>::quiet_NaN() : v);
                }
                row_lines.push_back(line_no);
                break;
            }
            default:
                break;  // ~P, ~O and unknown sections are ignored
        }
    }

    if (!seen_data_section) {
        throw LasParseError("missing ~A data section", line_no);
    }
    if (log.curves.empty() && !curve_defs.empty()) {
        // data section had zero rows; still expose the curve shells
        log.depth_unit = curve_defs[0].unit;
        log.curves.resize(curve_defs.size() - 1);
        for (std::size_t j = 1; j < curve_defs.size(); ++j) {
            log.curves[j - 1].mnemonic = curve_defs[j].mnemonic;
            log.curves[j - 1].unit = curve_defs[j].unit;
            log.curves[j - 1].description = curve_defs[j].description;
        }
    }

    if (const std::size_t bad = normalize_depth_order(log); bad != SIZE_MAX) {
        const std::size_t at = bad < row_lines.size() ? row_lines[bad] : 0;
        if (log.depth[bad] == log.depth[bad - 1]) {
            throw LasParseError("duplicate depth value " + format_double(log.depth[bad]), at);
        }
        throw LasParseError("depth column is not monotonic", at);
    }
    validate_well_log(log);
    return log;
}

WellLog parse_las_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_las(ss);
}

WellLog read_las_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open LAS file: " + path.string());
    return parse_las(in);
}

void write_las(const WellLog& log, std::ostream& out) {
    validate_well_log(log);
    const std::size_t n = log.depth.size();
    const double strt = n ? log.depth.front() : 0.0;
    const double stop = n ? log.depth.back() : 0.0;

    double step = 0.0;
    if (n >= 2) {
        step = log.depth[1] - log.depth[0];
        for (std::size_t i = 2; i < n; ++i) {
            if (std::abs((log.depth[i] - log.depth[i - 1]) - step) > 1e-9 * std::abs(step)) {
                step = 0.0;  // variable spacing
                break;
            }
        }
    }

    out << "~Version\n";
    out << "VERS.          2.0 : CWLS LOG ASCII STANDARD - VERSION 2.0\n";
    out << "WRAP.          NO  : ONE LINE PER DEPTH STEP\n";
    out << "~Well\n";
    out << "STRT.M         " << format_double(strt) << " : START DEPTH\n";
    out << "STOP.M         " << format_double(stop) << " : STOP DEPTH\n";
    out << "STEP.M         " << format_double(step) << " : STEP\n";
    out << "NULL.          " << format_double(log.null_value) << " : NULL VALUE\n";
    out << "WELL.          " << log.well_name << " : WELL NAME\n";
    out << "~Curve\n";
    out << "DEPT." << (log.depth_unit.empty() ? "M" : log.depth_unit) << "          : DEPTH\n";
    for (const Curve& c : log.curves) {
        out << c.mnemonic << "." << c.unit << "          : " << c.description << "\n";
    }
    out << "~ASCII\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << format_double(log.depth[i]);
        for (const Curve& c : log.curves) {
            const double v = c.samples[i];
            out << " " << format_double(is_missing(v) ? log.null_value : v);
        }
        out << "\n";
    }
}

std::string write_las_text(const WellLog& log) {
    std::ostringstream ss;
    write_las(log, ss);
    return ss.str();
}

void write_las_file(const WellLog& log, const std::filesystem::path& path) {
    write_file_atomic(path, write_las_text(log));
}

WellLog parse_csv(std::istream& in, const std::string& depth_column) {
    WellLog log;
    std::string raw;
    std::size_t line_no = 0;

    // The header is the first non-blank, non-comment ('#') line.
    for (;;) {
        if (!std::getline(in, raw)) throw CsvParseError("no header row found", line_no + 1);
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string t = trim(raw);
        if (!t.empty() && t[0] != '#') break;
    }

    std::vector<std::string> header = split(raw, ',');
    for (std::string& h : header) h = trim(h);

    std::size_t depth_col = header.size();
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (canonical_mnemonic(header[j]) == canonical_mnemonic(depth_column)) {
            depth_col = j;
            break;
        }
    }
    if (depth_col == header.size()) {
        throw CsvParseError("depth column '" + depth_column + "' not found in header", 1);
    }

    log.curves.resize(header.size() - 1);
    std::size_t k = 0;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j == depth_col) continue;
        log.curves[k++].mnemonic = header[j];
    }

    std::vector<std::size_t> row_lines;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string stripped = trim(raw);
        if (stripped.empty() || stripped[0] == '#') continue;

        std::vector<std::string> cells = split(raw, ',');
        if (cells.size() != header.size()) {
            throw CsvParseError("expected " + std::to_string(header.size()) + " cells, found " +
                                    std::to_string(cells.size()),
                                line_no);
        }
        k = 0;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const std::string cell = trim(cells[j]);
            double v = std::numeric_limits<double>::quiet_NaN();
            if (!cell.empty() && !parse_double_strict(cell, v)) {
                throw CsvParseError("unparseable value '" + cell + "'", line_no);
            }
            if (j == depth_col) {
                if (is_missing(v)) throw CsvParseError("missing depth value", line_no);
                log.depth.push_back(v);
            } else {
                log.curves[k++].samples.push_back(v == log.null_value
                                                      ? std::numeric_limits<double>::quiet_NaN()
                                                      : v);
            }
        }
        row_lines.push_back(line_no);
    }

    if (const std::size_t bad = normalize_depth_order(log); bad != SIZE_MAX) {
        const std::size_t at = bad < row_lines.size() ? row_lines[bad] : 0;
        if (log.depth[bad] == log.depth[bad - 1]) {
            throw CsvParseError("duplicate depth value " + format_double(log.depth[bad]), at);
        }
        throw CsvParseError("depth column is not monotonic", at);
    }
    validate_well_log(log);
    return log;
}

WellLog parse_csv_text(const std::string& text, const std::string& depth_column) {
    std::istringstream ss(text);
    return parse_csv(ss, depth_column);
}

WellLog read_csv_file(const std::filesystem::path& path, const std::string& depth_column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + path.string());
    WellLog log = parse_csv(in, depth_column);
    if (log.well_name.empty()) log.well_name = path.stem().string();
    return log;
}

}  // namespace swv
