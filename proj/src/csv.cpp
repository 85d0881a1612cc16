// csv.cpp — see csv.hpp

#include "admed/csv.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace admed {

std::string format_double(double x) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, result.ptr);
}

std::optional<double> parse_double_field(const std::string& text) {
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw std::invalid_argument("parse_double_field: malformed number '" + text + "'");
    }
    return value;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::string csv_header(const PhaseGrid& grid) {
    if (grid.config.observable == Observable::vnee_profile) return "g1,g2,k,E,value";
    if (!grid.t_axis.empty()) return "g1,g2,T,value";
    return "g1,g2,value";
}

}  // namespace

std::string grid_to_csv(const PhaseGrid& grid) {
    std::string out = csv_header(grid);
    out += '\n';
    if (grid.config.observable == Observable::vnee_profile) {
        const std::string prefix =
            format_double(grid.g1_axis.at(0)) + ',' + format_double(grid.g2_axis.at(0)) + ',';
        for (const auto& row : grid.profile) {
            out += prefix;
            out += format_double(row[0]);
            out += ',';
            out += format_double(row[1]);
            out += ',';
            out += format_double(row[2]);
            out += '\n';
        }
        return out;
    }
    size_t idx = 0;
    for (double g1 : grid.g1_axis) {
        for (double g2 : grid.g2_axis) {
            if (grid.t_axis.empty()) {
                out += format_double(g1);
                out += ',';
                out += format_double(g2);
                out += ',';
                if (grid.values[idx]) out += format_double(*grid.values[idx]);
                out += '\n';
                ++idx;
            } else {
                for (double t : grid.t_axis) {
                    out += format_double(g1);
                    out += ',';
                    out += format_double(g2);
                    out += ',';
                    out += format_double(t);
                    out += ',';
                    if (grid.values[idx]) out += format_double(*grid.values[idx]);
                    out += '\n';
                    ++idx;
                }
            }
        }
    }
    return out;
}

std::string quench_to_csv(const QuenchRun& run) {
    std::string out = "g1,g2,t,value\n";
    const std::string prefix = format_double(run.g1) + ',' + format_double(run.g2) + ',';
    for (size_t i = 0; i < run.result.times.size(); ++i) {
        out += prefix;
        out += format_double(run.result.times[i]);
        out += ',';
        out += format_double(run.result.pr[i]);
        out += '\n';
    }
    return out;
}

std::string thermal_to_csv(double g1, double g2, const MiCurve& curve) {
    std::string out = "g1,g2,T,value\n";
    const std::string prefix = format_double(g1) + ',' + format_double(g2) + ',';
    for (size_t i = 0; i < curve.temps.size(); ++i) {
        out += prefix;
        out += format_double(curve.temps[i]);
        out += ',';
        out += format_double(curve.mi[i]);
        out += '\n';
    }
    return out;
}

bool load_resume_values(const std::string& csv_text, PhaseGrid& grid) {
    if (grid.config.observable == Observable::vnee_profile) return false;

    std::vector<std::string> lines;
    std::string line;
    std::stringstream ss(csv_text);
    while (std::getline(ss, line)) lines.push_back(line);
    if (lines.empty() || lines[0] != csv_header(grid)) return false;
    if (lines.size() > grid.values.size() + 1) return false;

    const size_t axis_fields = grid.t_axis.empty() ? 2 : 3;
    std::vector<std::optional<double>> loaded(grid.values.size());
    for (size_t row = 0; row + 1 < lines.size(); ++row) {
        const std::vector<std::string> fields = split_fields(lines[row + 1]);
        if (fields.size() != axis_fields + 1) return false;

        const size_t nt = static_cast<size_t>(grid.nt());
        const size_t i1 = row / (static_cast<size_t>(grid.n2()) * nt);
        const size_t i2 = (row / nt) % static_cast<size_t>(grid.n2());
        if (fields[0] != format_double(grid.g1_axis[i1]) ||
            fields[1] != format_double(grid.g2_axis[i2])) {
            return false;
        }
        if (!grid.t_axis.empty() &&
            fields[2] != format_double(grid.t_axis[row % nt])) {
            return false;
        }
        try {
            loaded[row] = parse_double_field(fields[axis_fields]);
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
    for (size_t i = 0; i < loaded.size(); ++i) {
        if (loaded[i]) grid.values[i] = loaded[i];
    }
    return true;
}

}  // namespace admed
