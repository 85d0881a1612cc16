// svg.hpp — Self-contained vector heatmaps for phase grids
// One rect per cell, linear color scale, axis labels, colorbar, hatched
// missing cells.  Output is byte-deterministic for fixed input.

#pragma once

#include <optional>
#include <string>

#include "admed/grid.hpp"

namespace admed {

struct HeatmapStyle {
    int cell_px = 36;                     // square cell edge, pixels
    std::string title;                    // empty → observable name
    std::string x_label = "g1";
    std::string y_label = "g2";
    std::optional<double> vmin, vmax;     // default: data range over present cells
};

// Renders a static (g1,g2) grid (a thermal grid is accepted only with a
// single temperature).  Throws std::invalid_argument for empty grids,
// all-missing grids, or multi-temperature input.
std::string render_heatmap(const PhaseGrid& grid, const HeatmapStyle& style = {});

}  // namespace admed
