// admed — exact-diagonalization sweeps for the anisotropic Dicke model.
// Subcommands: scan, quench, thermal, tc, converge, plot.
// Exit codes: 0 success, 1 config error, 2 partial result (missing cells),
// 3 fatal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "admed/csv.hpp"
#include "admed/grid.hpp"
#include "admed/svg.hpp"

namespace {

namespace fs = std::filesystem;

// Flag storage for one subcommand; only flags the user actually passed
// override a --config file.
struct SweepFlags {
    CLI::App* cmd = nullptr;
    std::string config, observable, g1, g2, temps, state, out, times, nmax_list;
    int n_atoms = 0, n_max = 0, workers = 0;
    double omega = 0.0, omega0 = 0.0;
    bool resume = false;

    void attach(CLI::App* app, bool nmax_as_list = false) {
        cmd = app;
        app->add_option("--config", config, "JSON config file (flags override it)");
        app->add_option("--observable", observable, "what to compute per cell");
        app->add_option("--g1", g1, "g1 range min:max:steps (or a single value)");
        app->add_option("--g2", g2, "g2 range min:max:steps (or a single value)");
        app->add_option("--N", n_atoms, "even atom count");
        if (nmax_as_list) {
            app->add_option("--nmax", nmax_list, "comma-separated boson cutoffs, ascending");
        } else {
            app->add_option("--nmax", n_max, "boson cutoff");
        }
        app->add_option("--omega", omega, "boson frequency");
        app->add_option("--omega0", omega0, "atomic splitting");
        app->add_option("--state", state, "state selector: ground|middle|<index>");
        app->add_option("--temps", temps, "temperature range min:max:steps");
        app->add_option("--times", times, "comma-separated quench sample times");
        app->add_option("--out", out, "output directory");
        app->add_option("--workers", workers, "parallel workers over grid cells");
        app->add_flag("--resume", resume, "skip cells already present in the output CSV");
    }

    bool passed(const std::string& flag) const { return cmd->count(flag) > 0; }

    admed::RunConfig build() const {
        admed::RunConfig cfg;
        if (passed("--config")) cfg = admed::config_from_json_file(config);
        if (passed("--observable")) cfg.observable = admed::observable_from_string(observable);
        if (passed("--g1")) cfg.g1 = admed::parse_axis_spec(g1);
        if (passed("--g2")) cfg.g2 = admed::parse_axis_spec(g2);
        if (passed("--N")) cfg.n_atoms = n_atoms;
        if (passed("--nmax") && nmax_list.empty()) cfg.n_max = n_max;
        if (passed("--omega")) cfg.omega = omega;
        if (passed("--omega0")) cfg.omega0 = omega0;
        if (passed("--state")) admed::set_state_selector(cfg, state);
        if (passed("--temps")) {
            cfg.temps = admed::parse_axis_spec(temps);
            cfg.has_temps = true;
        }
        if (passed("--times")) {
            cfg.times.clear();
            std::stringstream ss(times);
            std::string part;
            while (std::getline(ss, part, ',')) {
                const auto t = admed::parse_double_field(part);
                if (!t) throw std::invalid_argument("--times entry '" + part + "' is empty");
                cfg.times.push_back(*t);
            }
        }
        if (passed("--out")) cfg.out_dir = out;
        if (passed("--workers")) cfg.workers = workers;
        if (passed("--resume")) cfg.resume = resume;
        return cfg;
    }
};

std::vector<int> parse_cutoff_list(const std::string& text) {
    std::vector<int> cutoffs;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto c = admed::parse_double_field(part);
        if (!c) throw std::invalid_argument("--nmax entry '" + part + "' is empty");
        cutoffs.push_back(static_cast<int>(*c));
    }
    if (cutoffs.empty()) {
        throw std::invalid_argument("--nmax list '" + text + "' is empty");
    }
    return cutoffs;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_plot(const std::string& csv_arg, const std::string& out_arg,
             const std::string& title) {
    const fs::path csv_path(csv_arg);
    const fs::path manifest_path = csv_path.parent_path() / "manifest.json";
    admed::RunConfig cfg = admed::config_from_json_file(manifest_path.string());

    admed::PhaseGrid grid;
    grid.config = cfg;
    grid.g1_axis = cfg.g1.points();
    grid.g2_axis = cfg.g2.points();
    if (cfg.observable == admed::Observable::mi_grid) grid.t_axis = cfg.temps.points();
    grid.values.assign(static_cast<size_t>(grid.n1()) * static_cast<size_t>(grid.n2()) *
                           static_cast<size_t>(grid.nt()),
                       std::nullopt);
    if (!admed::load_resume_values(read_file(csv_path), grid)) {
        throw std::invalid_argument("CSV '" + csv_arg + "' does not match its manifest");
    }

    admed::HeatmapStyle style;
    style.title = title;
    const std::string svg = admed::render_heatmap(grid, style);
    const fs::path out_path =
        out_arg.empty() ? csv_path.parent_path() / "scan.svg" : fs::path(out_arg);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write '" + out_path.string() + "'");
    out << svg;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-diagonalization phase maps of the anisotropic Dicke model"};
    app.set_version_flag("--version", "admed 0.1.0");
    app.require_subcommand(1);

    SweepFlags scan_flags, quench_flags, thermal_flags, tc_flags, converge_flags;
    scan_flags.attach(app.add_subcommand("scan", "(g1,g2) grid sweep of one observable"));
    quench_flags.attach(app.add_subcommand("quench", "PR(t) after a middle-state quench"));
    thermal_flags.attach(
        app.add_subcommand("thermal", "two-spin mutual information vs temperature"));
    tc_flags.attach(app.add_subcommand("tc", "analytic critical-temperature grid"));
    converge_flags.attach(
        app.add_subcommand("converge", "repeat a scan over a list of boson cutoffs"),
        /*nmax_as_list=*/true);

    std::string plot_csv, plot_out, plot_title;
    CLI::App* plot_cmd = app.add_subcommand("plot", "render a scan CSV as an SVG heatmap");
    plot_cmd->add_option("csv", plot_csv, "scan.csv produced by a sweep")->required();
    plot_cmd->add_option("--out", plot_out, "output SVG path (default: sibling scan.svg)");
    plot_cmd->add_option("--title", plot_title, "plot title override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (scan_flags.cmd->parsed()) {
            if (!scan_flags.passed("--observable") && !scan_flags.passed("--config")) {
                throw std::invalid_argument("scan needs --observable or --config");
            }
            const admed::PhaseGrid grid = admed::run_scan(scan_flags.build());
            if (!grid.reasons.empty()) {
                std::cerr << "scan: " << grid.reasons.size()
                          << " cell(s) missing; see reasons.json\n";
                return 2;
            }
            return 0;
        }
        if (quench_flags.cmd->parsed()) {
            admed::run_quench(quench_flags.build());
            return 0;
        }
        if (thermal_flags.cmd->parsed()) {
            const admed::MiCurve curve = admed::run_thermal(thermal_flags.build());
            std::cout << "t_star=" << admed::format_double(curve.t_star);
            if (curve.analytic) {
                std::cout << " analytic_tc=" << admed::format_double(*curve.analytic);
            }
            std::cout << "\n";
            if (curve.coarse_grid_warning) {
                std::cerr << "thermal: warning: temperature grid spacing exceeds 0.1\n";
            }
            return 0;
        }
        if (tc_flags.cmd->parsed()) {
            admed::RunConfig cfg = tc_flags.build();
            cfg.observable = admed::Observable::tc_curve;
            const admed::PhaseGrid grid = admed::run_scan(cfg);
            return grid.reasons.empty() ? 0 : 2;
        }
        if (converge_flags.cmd->parsed()) {
            if (!converge_flags.passed("--observable") && !converge_flags.passed("--config")) {
                throw std::invalid_argument("converge needs --observable or --config");
            }
            admed::RunConfig cfg = converge_flags.build();
            if (!converge_flags.passed("--nmax")) {
                throw std::invalid_argument("converge needs --nmax as a comma-separated list");
            }
            const std::vector<int> cutoffs = parse_cutoff_list(converge_flags.nmax_list);
            const admed::ConvergenceReport report = admed::convergence_scan(cfg, cutoffs);

            nlohmann::json doc{{"cutoffs", report.cutoffs},
                               {"max_abs_diff", report.max_abs_diff},
                               {"non_convergent", report.non_convergent}};
            const fs::path report_path = fs::path(cfg.out_dir) / "report.json";
            std::ofstream out(report_path, std::ios::trunc);
            out << doc.dump(2) << "\n";
            std::cout << doc.dump() << "\n";
            return 0;
        }
        if (plot_cmd->parsed()) {
            return run_plot(plot_csv, plot_out, plot_title);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
