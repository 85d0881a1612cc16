// csv.hpp — Deterministic CSV serialization for phase grids
// Full-double-precision, locale-independent numbers (shortest round-trip
// form via std::to_chars); schema `g1,g2,value`, `g1,g2,T,value` for
// thermal grids, `g1,g2,k,E,value` for per-eigenstate profiles, and
// `g1,g2,t,value` for quench traces.  Missing cells serialize as an empty
// value field.

#pragma once

#include <optional>
#include <string>

#include "admed/grid.hpp"

namespace admed {

// Shortest representation that round-trips to the same double ("1.25",
// "0.3333333333333333", "1e+300"); always uses '.' regardless of locale.
std::string format_double(double x);

// Inverse of format_double; empty → nullopt; throws on malformed text.
std::optional<double> parse_double_field(const std::string& text);

// Whole-grid CSV including the header row.
std::string grid_to_csv(const PhaseGrid& grid);

// Quench trace CSV (g1,g2,t,value).
std::string quench_to_csv(const QuenchRun& run);

// MI(T) curve CSV (g1,g2,T,value).
std::string thermal_to_csv(double g1, double g2, const MiCurve& curve);

// Reads previously computed cell values out of a scan.csv produced with the
// same axes (axis fields compared by formatted text).  Returns false — and
// loads nothing — when header or axes disagree.
bool load_resume_values(const std::string& csv_text, PhaseGrid& grid);

}  // namespace admed
