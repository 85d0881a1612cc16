// svg.cpp — see svg.hpp

#include "admed/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "admed/csv.hpp"

namespace admed {

namespace {

// Five-anchor piecewise-linear approximation of the viridis colormap.
constexpr int kStops[5][3] = {
    {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};

std::string color_at(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const double pos = t * 4.0;
    const int lo = std::min(3, static_cast<int>(pos));
    const double frac = pos - lo;
    std::string out = "rgb(";
    for (int c = 0; c < 3; ++c) {
        const double v = kStops[lo][c] + frac * (kStops[lo + 1][c] - kStops[lo][c]);
        out += std::to_string(static_cast<int>(std::lround(v)));
        out += c < 2 ? "," : ")";
    }
    return out;
}

void append_text(std::string& svg, int x, int y, const std::string& anchor,
                 const std::string& text, const std::string& extra = "") {
    svg += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"" + anchor + "\"" +
           extra + ">" + text + "</text>\n";
}

}  // namespace

std::string render_heatmap(const PhaseGrid& grid, const HeatmapStyle& style) {
    if (grid.config.observable == Observable::vnee_profile) {
        throw std::invalid_argument("render_heatmap: per-eigenstate profiles have no heatmap form");
    }
    if (grid.n1() < 1 || grid.n2() < 1 || grid.values.empty()) {
        throw std::invalid_argument("render_heatmap: empty grid");
    }
    if (grid.t_axis.size() > 1) {
        throw std::invalid_argument(
            "render_heatmap: thermal grids need a single temperature to render");
    }

    double vmin = 0.0, vmax = 0.0;
    bool any = false;
    for (const auto& v : grid.values) {
        if (!v) continue;
        vmin = any ? std::min(vmin, *v) : *v;
        vmax = any ? std::max(vmax, *v) : *v;
        any = true;
    }
    if (!any) {
        throw std::invalid_argument("render_heatmap: all cells are missing");
    }
    if (style.vmin) vmin = *style.vmin;
    if (style.vmax) vmax = *style.vmax;
    const double range = vmax - vmin;

    const int cell = style.cell_px;
    const int n1 = grid.n1(), n2 = grid.n2();
    const int left = 70, right = 120, top = 44, bottom = 56;
    const int plot_w = cell * n1, plot_h = cell * n2;
    const int width = left + plot_w + right, height = top + plot_h + bottom;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" "
           "patternUnits=\"userSpaceOnUse\">"
           "<path d=\"M0,6 L6,0\" stroke=\"#999999\" stroke-width=\"1\"/>"
           "</pattern></defs>\n";
    svg += "<rect width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" fill=\"white\"/>\n";

    const std::string title =
        style.title.empty()
            ? to_string(grid.config.observable) + "  N=" + std::to_string(grid.config.n_atoms) +
                  " n_max=" + std::to_string(grid.config.n_max)
            : style.title;
    append_text(svg, left + plot_w / 2, 24, "middle", title);

    // Cells: g1 rightward, g2 upward.
    for (int i1 = 0; i1 < n1; ++i1) {
        for (int i2 = 0; i2 < n2; ++i2) {
            const int x = left + i1 * cell;
            const int y = top + (n2 - 1 - i2) * cell;
            const std::optional<double> v = grid.at(i1, i2);
            std::string fill;
            std::string extra;
            if (v) {
                fill = color_at(range == 0.0 ? 0.5 : (*v - vmin) / range);
            } else {
                fill = "url(#hatch)";
                extra = " stroke=\"#bbbbbb\" stroke-width=\"1\"";
            }
            svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
                   "\" width=\"" + std::to_string(cell) + "\" height=\"" + std::to_string(cell) +
                   "\" fill=\"" + fill + "\"" + extra + "/>\n";
        }
    }

    // Axis labels: min/max ticks plus a centered title per axis.
    append_text(svg, left, top + plot_h + 16, "middle", format_double(grid.g1_axis.front()));
    append_text(svg, left + plot_w, top + plot_h + 16, "middle",
                format_double(grid.g1_axis.back()));
    append_text(svg, left + plot_w / 2, top + plot_h + 36, "middle", style.x_label);
    append_text(svg, left - 8, top + plot_h, "end", format_double(grid.g2_axis.front()));
    append_text(svg, left - 8, top + 12, "end", format_double(grid.g2_axis.back()));
    append_text(svg, left - 40, top + plot_h / 2, "middle", style.y_label,
                " transform=\"rotate(-90 " + std::to_string(left - 40) + " " +
                    std::to_string(top + plot_h / 2) + ")\"");

    // Colorbar: 64 bands, vmax on top.
    const int bar_x = left + plot_w + 24, bar_w = 16, bands = 64;
    for (int b = 0; b < bands; ++b) {
        const int y0 = top + b * plot_h / bands;
        const int y1 = top + (b + 1) * plot_h / bands;
        svg += "<rect x=\"" + std::to_string(bar_x) + "\" y=\"" + std::to_string(y0) +
               "\" width=\"" + std::to_string(bar_w) + "\" height=\"" + std::to_string(y1 - y0) +
               "\" fill=\"" + color_at(1.0 - (b + 0.5) / bands) + "\"/>\n";
    }
    append_text(svg, bar_x + bar_w + 6, top + 12, "start", format_double(vmax));
    append_text(svg, bar_x + bar_w + 6, top + plot_h, "start", format_double(vmin));

    svg += "</svg>\n";
    return svg;
}

}  // namespace admed
