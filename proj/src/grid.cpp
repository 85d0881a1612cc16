// grid.cpp — see grid.hpp

#include "admed/grid.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "admed/csv.hpp"

// OpenBLAS resolves this symbol; other BLAS providers may not, hence weak.
// Worker-level parallelism over cells with single-threaded BLAS underneath
// keeps sweep results byte-identical for any worker count.
extern "C" void openblas_set_num_threads(int) __attribute__((weak));

namespace admed {

namespace fs = std::filesystem;
using nlohmann::json;

// ------------------------------ enum plumbing --------------------------------

namespace {

const std::pair<Observable, const char*> kObservableNames[] = {
    {Observable::gs_energy_density, "gs_energy_density"},
    {Observable::photon_density, "photon_density"},
    {Observable::ipr_gs, "ipr_gs"},
    {Observable::pr_state_k, "pr_state_k"},
    {Observable::d1_state_k, "d1_state_k"},
    {Observable::vnee_profile, "vnee_profile"},
    {Observable::chi_lower, "chi_lower"},
    {Observable::chi_upper, "chi_upper"},
    {Observable::r_central, "r_central"},
    {Observable::quench_pr, "quench_pr"},
    {Observable::mi_grid, "mi_grid"},
    {Observable::tc_curve, "tc_curve"},
};

void pin_blas_threads() {
    if (openblas_set_num_threads) openblas_set_num_threads(1);
}

}  // namespace

std::string to_string(Observable obs) {
    for (const auto& [value, name] : kObservableNames) {
        if (value == obs) return name;
    }
    throw std::invalid_argument("to_string: unknown observable");
}

Observable observable_from_string(const std::string& name) {
    for (const auto& [value, obs_name] : kObservableNames) {
        if (name == obs_name) return value;
    }
    throw std::invalid_argument("unknown observable '" + name + "'");
}

// -------------------------------- axes ---------------------------------------

std::vector<double> AxisSpec::points() const {
    std::vector<double> out(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        out[static_cast<size_t>(i)] =
            steps == 1 ? min : min + (max - min) * i / (steps - 1);
    }
    return out;
}

AxisSpec parse_axis_spec(const std::string& text) {
    std::stringstream ss(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    try {
        if (parts.size() == 1) {
            return {parse_double_field(parts[0]).value(), parse_double_field(parts[0]).value(), 1};
        }
        if (parts.size() == 3) {
            AxisSpec axis{parse_double_field(parts[0]).value(),
                          parse_double_field(parts[1]).value(),
                          static_cast<int>(parse_double_field(parts[2]).value())};
            if (axis.steps < 1) throw std::invalid_argument("steps < 1");
            return axis;
        }
    } catch (const std::exception&) {
        // fall through to the uniform error below
    }
    throw std::invalid_argument("axis spec '" + text + "' is not 'min:max:steps' or a number");
}

// ----------------------------- configuration ---------------------------------

ModelParams RunConfig::cell_params(double g1_val, double g2_val) const {
    return {omega, omega0, g1_val, g2_val, n_atoms, n_max};
}

void RunConfig::validate() const {
    cell_params(g1.min, g2.min).validate();  // N/n_max/omega/coupling signs
    for (const AxisSpec* axis : {&g1, &g2}) {
        if (axis->steps < 1) throw std::invalid_argument("grid steps must be >= 1");
        if (axis->min < 0.0 || axis->max < axis->min) {
            throw std::invalid_argument("coupling ranges must satisfy 0 <= min <= max");
        }
    }
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (observable == Observable::vnee_profile && (g1.steps != 1 || g2.steps != 1)) {
        throw std::invalid_argument("vnee_profile scans are per-point: use 1x1 grids");
    }
    if (observable == Observable::mi_grid) {
        if (!has_temps) throw std::invalid_argument("mi_grid needs a temperature grid (--temps)");
        if (temps.steps < 1 || temps.min < 0.0 || temps.max < temps.min) {
            throw std::invalid_argument("temperature range must satisfy 0 <= min <= max");
        }
        ModelParams guard = cell_params(g1.min, g2.min);
        if (spinspace_dimension(guard) > (1L << 16)) {
            throw std::invalid_argument("mi_grid spin product space exceeds the 2^16 guard");
        }
    } else if (has_temps) {
        throw std::invalid_argument("--temps only applies to mi_grid/thermal runs");
    }
    if (selector == StateSelector::index) {
        ModelParams p = cell_params(g1.min, g2.min);
        if (state_index < 0 || state_index >= p.dimension()) {
            throw std::invalid_argument("state index out of range for dimension " +
                                        std::to_string(p.dimension()));
        }
    }
    for (double t : times) {
        if (t < 0.0) throw std::invalid_argument("quench times must be >= 0");
    }
}

std::string state_selector_name(const RunConfig& config) {
    switch (config.selector) {
        case StateSelector::ground: return "ground";
        case StateSelector::middle: return "middle";
        case StateSelector::index: return std::to_string(config.state_index);
    }
    return "ground";
}

void set_state_selector(RunConfig& config, const std::string& text) {
    if (text == "ground") {
        config.selector = StateSelector::ground;
    } else if (text == "middle") {
        config.selector = StateSelector::middle;
    } else {
        try {
            config.selector = StateSelector::index;
            config.state_index = std::stoi(text);
        } catch (const std::exception&) {
            throw std::invalid_argument("state selector '" + text +
                                        "' is not ground|middle|<index>");
        }
    }
}

namespace {

AxisSpec axis_from_json(const json& j, const std::string& key) {
    if (j.is_string()) return parse_axis_spec(j.get<std::string>());
    if (j.is_object()) {
        AxisSpec axis{j.at("min").get<double>(), j.at("max").get<double>(),
                      j.at("steps").get<int>()};
        return axis;
    }
    throw std::invalid_argument("config key '" + key +
                                "' must be 'min:max:steps' or {min,max,steps}");
}

json axis_to_json(const AxisSpec& axis) {
    return json{{"min", axis.min}, {"max", axis.max}, {"steps", axis.steps}};
}

}  // namespace

RunConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config file '" + path + "': " + e.what());
    }

    RunConfig config;
    try {
    for (const auto& [key, value] : doc.items()) {
        if (key == "observable") {
            config.observable = observable_from_string(value.get<std::string>());
        } else if (key == "omega") {
            config.omega = value.get<double>();
        } else if (key == "omega0") {
            config.omega0 = value.get<double>();
        } else if (key == "N") {
            config.n_atoms = value.get<int>();
        } else if (key == "nmax" || key == "n_max") {
            config.n_max = value.get<int>();
        } else if (key == "g1") {
            config.g1 = axis_from_json(value, key);
        } else if (key == "g2") {
            config.g2 = axis_from_json(value, key);
        } else if (key == "temps") {
            if (!value.is_null()) {
                config.temps = axis_from_json(value, key);
                config.has_temps = true;
            }
        } else if (key == "state") {
            set_state_selector(config, value.is_number_integer()
                                             ? std::to_string(value.get<int>())
                                             : value.get<std::string>());
        } else if (key == "times") {
            if (!value.is_null()) config.times = value.get<std::vector<double>>();
        } else if (key == "out") {
            config.out_dir = value.get<std::string>();
        } else if (key == "workers") {
            config.workers = value.get<int>();
        } else if (key == "resume") {
            config.resume = value.get<bool>();
        } else if (key == "version" || key == "grid" || key == "dimension" ||
                   key == "spinspace_dimension" || key == "quench_tie_break") {
            // manifest echo fields: accepted so a manifest can be re-used as config
        } else {
            throw std::invalid_argument("config file: unknown key '" + key + "'");
        }
    }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config file: ") + e.what());
    }
    return config;
}

// -------------------------------- results ------------------------------------

std::optional<double> PhaseGrid::at(int i1, int i2, int it) const {
    if (i1 < 0 || i1 >= n1() || i2 < 0 || i2 >= n2() || it < 0 || it >= nt()) {
        throw std::out_of_range("PhaseGrid::at: cell index out of range");
    }
    return values[static_cast<size_t>((static_cast<long>(i1) * n2() + i2) * nt() + it)];
}

// ------------------------------- execution -----------------------------------

namespace {

// Memoized ground-state energies at critical-line projections: every cell
// whose direction projects to the same point shares one diagonalization.
class CutoffCache {
  public:
    ReferenceCutoffs get(const ModelParams& cell, const Spectrum& cell_spectrum) {
        const double e_max = cell.omega * cell.n_max + cell.omega0 * cell.j();
        const double line = std::sqrt(cell.omega * cell.omega0);
        const double sum = cell.g1 + cell.g2;
        if (sum <= line) return {cell_spectrum.energies[0], e_max};

        ModelParams projected = cell;
        projected.g1 = cell.g1 * line / sum;
        projected.g2 = cell.g2 * line / sum;
        const std::pair<double, double> key{projected.g1, projected.g2};
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (const auto it = memo_.find(key); it != memo_.end()) return {it->second, e_max};
        }
        const Basis basis = build_basis(projected);
        const double e0 = eigh(build_hamiltonian(projected, basis)).energies[0];
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.emplace(key, e0);
        return {e0, e_max};
    }

  private:
    std::mutex mutex_;
    std::map<std::pair<double, double>, double> memo_;
};

struct CellOutput {
    std::vector<std::optional<double>> values;       // one per temperature (or one)
    std::vector<std::string> reasons, flags;         // aligned with values; empty = none
    std::vector<std::array<double, 3>> profile;
};

int select_state(const RunConfig& config, const Basis& basis) {
    switch (config.selector) {
        case StateSelector::ground: return 0;
        // Mid-spectrum eigenstate (multifractal maps probe the band center).
        case StateSelector::middle: return basis.size() / 2;
        case StateSelector::index: return config.state_index;
    }
    return 0;
}

CellOutput compute_cell(const RunConfig& config, double g1, double g2,
                        const std::vector<double>& temps, CutoffCache& cache) {
    const int nt = temps.empty() ? 1 : static_cast<int>(temps.size());
    CellOutput out;
    out.values.assign(static_cast<size_t>(nt), std::nullopt);
    out.reasons.assign(static_cast<size_t>(nt), "");
    out.flags.assign(static_cast<size_t>(nt), "");

    const ModelParams params = config.cell_params(g1, g2);

    switch (config.observable) {
        case Observable::tc_curve: {
            if (const auto tc = analytic_tc(params)) {
                out.values[0] = *tc;
            } else {
                out.reasons[0] = "no transition: (g1+g2)^2 <= omega*omega0";
            }
            return out;
        }
        case Observable::mi_grid: {
            const Spectrum spectrum = eigh(build_spinspace_hamiltonian(params));
            for (int it = 0; it < nt; ++it) {
                const DensityMatrix rho = temps[static_cast<size_t>(it)] == 0.0
                                              ? ground_state_projector(spectrum)
                                              : gibbs_state(spectrum, temps[static_cast<size_t>(it)]);
                out.values[static_cast<size_t>(it)] =
                    mutual_information_two_spins(rho, params);
            }
            return out;
        }
        default: break;
    }

    const Basis basis = build_basis(params);
    const Spectrum spectrum = eigh(build_hamiltonian(params, basis));

    switch (config.observable) {
        case Observable::gs_energy_density:
            out.values[0] = spectrum.energies[0] / params.n_atoms;
            break;
        case Observable::ipr_gs:
            out.values[0] = inverse_participation_ratio(spectrum.vectors.col(0));
            break;
        case Observable::photon_density:
            out.values[0] =
                mean_photon_number(spectrum.vectors.col(select_state(config, basis)), basis) /
                params.j();
            break;
        case Observable::pr_state_k:
            out.values[0] = participation_ratio(spectrum.vectors.col(select_state(config, basis)));
            break;
        case Observable::d1_state_k:
            out.values[0] = multifractal_dimension(
                spectrum.vectors.col(select_state(config, basis)), 1.0, basis.size());
            break;
        case Observable::vnee_profile: {
            const auto profile = vnee_profile(spectrum, basis);
            out.profile.reserve(profile.size());
            for (size_t k = 0; k < profile.size(); ++k) {
                out.profile.push_back(
                    {static_cast<double>(k), profile[k].energy, profile[k].vnee});
            }
            break;
        }
        case Observable::chi_lower:
        case Observable::chi_upper: {
            const BandAnalysis analysis =
                analyze_spectrum(spectrum, basis, cache.get(params, spectrum));
            const auto& chi = config.observable == Observable::chi_lower ? analysis.chi_lower
                                                                         : analysis.chi_upper;
            if (chi) {
                out.values[0] = *chi;
            } else {
                out.reasons[0] = "degenerate profile: VNEE jumps vanish on this half";
            }
            break;
        }
        case Observable::r_central: {
            const CentralBandR central =
                central_band_r(spectrum, basis, cache.get(params, spectrum));
            if (central.stats.pair_count > 0) {
                out.values[0] = central.stats.mean;
                if (central.low_statistics) {
                    out.flags[0] = "low statistics: central band has " +
                                   std::to_string(central.band_levels) + " levels";
                }
            } else {
                out.reasons[0] = "central band has fewer than 3 levels";
            }
            break;
        }
        case Observable::quench_pr: {
            const int start = middle_decoupled_state(basis);
            Eigen::VectorXd psi = Eigen::VectorXd::Zero(basis.size());
            psi[start] = 1.0;
            out.values[0] = evolve_pr(spectrum, psi, {1000.0}).pr[0];
            break;
        }
        default:
            throw std::logic_error("compute_cell: unhandled observable");
    }
    return out;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot write to '" + tmp.string() + "'");
        out << content;
    }
    fs::rename(tmp, path);
}

json manifest_json(const RunConfig& config, const PhaseGrid& grid) {
    json manifest{
        {"version", "admed 0.1.0"},
        {"observable", to_string(config.observable)},
        {"omega", config.omega},
        {"omega0", config.omega0},
        {"N", config.n_atoms},
        {"nmax", config.n_max},
        {"g1", axis_to_json(config.g1)},
        {"g2", axis_to_json(config.g2)},
        {"temps", config.has_temps ? axis_to_json(config.temps) : json(nullptr)},
        {"state", state_selector_name(config)},
        {"times", config.times.empty() ? json(nullptr) : json(config.times)},
        {"out", config.out_dir},
        {"workers", config.workers},
        {"resume", config.resume},
        {"grid", {{"n1", grid.n1()}, {"n2", grid.n2()}, {"nt", grid.nt()}}},
        {"dimension", config.cell_params(0, 0).dimension()},
    };
    if (config.observable == Observable::mi_grid) {
        manifest["spinspace_dimension"] = spinspace_dimension(config.cell_params(0, 0));
    }
    return manifest;
}

std::string cell_key(const PhaseGrid& grid, size_t flat) {
    const size_t nt = static_cast<size_t>(grid.nt());
    const size_t i1 = flat / (static_cast<size_t>(grid.n2()) * nt);
    const size_t i2 = (flat / nt) % static_cast<size_t>(grid.n2());
    std::string key = std::to_string(i1) + "," + std::to_string(i2);
    if (!grid.t_axis.empty()) key += "," + std::to_string(flat % nt);
    return key;
}

void run_workers(int n_cells, int workers, const std::function<void(int)>& work) {
    workers = std::min(workers, n_cells);
    if (workers <= 1) {
        for (int i = 0; i < n_cells; ++i) work(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n_cells; i = next.fetch_add(1)) work(i);
        });
    }
    for (auto& thread : pool) thread.join();
}

}  // namespace

PhaseGrid run_scan(const RunConfig& config) {
    config.validate();
    if (config.out_dir.empty()) {
        throw std::invalid_argument("run_scan: output directory is required");
    }
    pin_blas_threads();

    PhaseGrid grid;
    grid.config = config;
    grid.g1_axis = config.g1.points();
    grid.g2_axis = config.g2.points();
    if (config.observable == Observable::mi_grid) grid.t_axis = config.temps.points();
    grid.values.assign(static_cast<size_t>(grid.n1()) * static_cast<size_t>(grid.n2()) *
                           static_cast<size_t>(grid.nt()),
                       std::nullopt);

    // Fail on unwritable output before any compute.
    const fs::path out_dir(config.out_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    const fs::path csv_path = out_dir / "scan.csv";
    {
        std::ofstream probe(out_dir / ".write_probe", std::ios::trunc);
        if (!probe) {
            throw std::invalid_argument("run_scan: output directory '" + config.out_dir +
                                        "' is not writable");
        }
    }
    fs::remove(out_dir / ".write_probe", ec);

    if (config.resume && fs::exists(csv_path)) {
        std::ifstream in(csv_path, std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        load_resume_values(buffer.str(), grid);
    }

    // One work unit per (g1,g2) point; a thermal unit fills its whole
    // temperature column from a single diagonalization.
    const int n_points = grid.n1() * grid.n2();
    const size_t nt = static_cast<size_t>(grid.nt());
    CutoffCache cache;
    std::mutex sink;
    run_workers(n_points, config.workers, [&](int point) {
        const int i1 = point / grid.n2();
        const int i2 = point % grid.n2();
        const size_t base = static_cast<size_t>(point) * nt;

        bool todo = false;
        for (size_t it = 0; it < nt; ++it) todo = todo || !grid.values[base + it];
        if (!todo && config.observable != Observable::vnee_profile) return;

        CellOutput out;
        try {
            out = compute_cell(config, grid.g1_axis[static_cast<size_t>(i1)],
                               grid.g2_axis[static_cast<size_t>(i2)], grid.t_axis, cache);
        } catch (const std::exception& e) {
            out.values.assign(nt, std::nullopt);
            out.flags.assign(nt, "");
            out.reasons.assign(nt, std::string("error: ") + e.what());
        }
        std::lock_guard<std::mutex> lock(sink);
        for (size_t it = 0; it < nt; ++it) {
            grid.values[base + it] = out.values[it];
            if (!out.reasons[it].empty()) grid.reasons[cell_key(grid, base + it)] = out.reasons[it];
            if (!out.flags[it].empty()) grid.flags[cell_key(grid, base + it)] = out.flags[it];
        }
        if (!out.profile.empty()) grid.profile = std::move(out.profile);
    });

    write_file_atomic(csv_path, grid_to_csv(grid));
    write_file_atomic(out_dir / "manifest.json", manifest_json(config, grid).dump(2) + "\n");
    if (!grid.reasons.empty() || !grid.flags.empty()) {
        const json reasons{{"missing", grid.reasons}, {"flags", grid.flags}};
        write_file_atomic(out_dir / "reasons.json", reasons.dump(2) + "\n");
    }
    return grid;
}

QuenchRun run_quench(const RunConfig& config) {
    RunConfig cfg = config;
    cfg.observable = Observable::quench_pr;
    cfg.g1.steps = 1;
    cfg.g2.steps = 1;
    cfg.validate();
    if (cfg.out_dir.empty()) {
        throw std::invalid_argument("run_quench: output directory is required");
    }
    pin_blas_threads();

    QuenchRun run;
    run.g1 = cfg.g1.min;
    run.g2 = cfg.g2.min;
    const ModelParams params = cfg.cell_params(run.g1, run.g2);
    const Basis basis = build_basis(params);
    const Spectrum spectrum = eigh(build_hamiltonian(params, basis));
    const int start = middle_decoupled_state(basis);
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(basis.size());
    psi[start] = 1.0;
    const std::vector<double>& times = cfg.times.empty() ? kDefaultQuenchTimes : cfg.times;
    run.result = evolve_pr(spectrum, psi, times);
    run.diag_ensemble_pr = diagonal_ensemble_pr(spectrum, psi);

    const fs::path out_dir(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    write_file_atomic(out_dir / "quench.csv", quench_to_csv(run));

    PhaseGrid meta;
    meta.config = cfg;
    meta.g1_axis = {run.g1};
    meta.g2_axis = {run.g2};
    json manifest = manifest_json(cfg, meta);
    manifest["times"] = times;
    manifest["initial_index"] = run.result.initial_index;
    manifest["quench_tie_break"] = "stable canonical basis order";
    manifest["max_norm_drift"] = run.result.max_norm_drift;
    manifest["diag_ensemble_pr"] = run.diag_ensemble_pr;
    write_file_atomic(out_dir / "manifest.json", manifest.dump(2) + "\n");
    return run;
}

MiCurve run_thermal(const RunConfig& config) {
    RunConfig cfg = config;
    cfg.observable = Observable::mi_grid;
    cfg.g1.steps = 1;
    cfg.g2.steps = 1;
    cfg.validate();
    if (cfg.out_dir.empty()) {
        throw std::invalid_argument("run_thermal: output directory is required");
    }
    pin_blas_threads();

    const ModelParams params = cfg.cell_params(cfg.g1.min, cfg.g2.min);
    const MiCurve curve = mi_transition_temperature(params, cfg.temps.points());

    const fs::path out_dir(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    write_file_atomic(out_dir / "thermal.csv", thermal_to_csv(cfg.g1.min, cfg.g2.min, curve));

    PhaseGrid meta;
    meta.config = cfg;
    meta.g1_axis = {cfg.g1.min};
    meta.g2_axis = {cfg.g2.min};
    meta.t_axis = curve.temps;
    json manifest = manifest_json(cfg, meta);
    manifest["t_star"] = curve.t_star;
    manifest["analytic_tc"] = curve.analytic ? json(*curve.analytic) : json(nullptr);
    manifest["coarse_grid_warning"] = curve.coarse_grid_warning;
    write_file_atomic(out_dir / "manifest.json", manifest.dump(2) + "\n");
    return curve;
}

ConvergenceReport convergence_scan(const RunConfig& config,
                                   const std::vector<int>& n_max_list) {
    if (n_max_list.size() < 2) {
        throw std::invalid_argument("convergence_scan: need at least 2 cutoffs");
    }
    if (!std::is_sorted(n_max_list.begin(), n_max_list.end())) {
        throw std::invalid_argument("convergence_scan: cutoffs must be ascending");
    }

    ConvergenceReport report;
    report.cutoffs = n_max_list;
    std::vector<PhaseGrid> grids;
    grids.reserve(n_max_list.size());
    for (int cutoff : n_max_list) {
        RunConfig sub = config;
        sub.n_max = cutoff;
        sub.out_dir = (fs::path(config.out_dir) / ("nmax_" + std::to_string(cutoff))).string();
        grids.push_back(run_scan(sub));
    }
    for (size_t c = 1; c < grids.size(); ++c) {
        double max_diff = 0.0;
        for (size_t i = 0; i < grids[c].values.size(); ++i) {
            if (grids[c].values[i] && grids[c - 1].values[i]) {
                max_diff = std::max(max_diff,
                                    std::abs(*grids[c].values[i] - *grids[c - 1].values[i]));
            }
        }
        report.max_abs_diff.push_back(max_diff);
    }
    for (size_t d = 1; d < report.max_abs_diff.size(); ++d) {
        if (report.max_abs_diff[d] > report.max_abs_diff[d - 1]) report.non_convergent = true;
    }
    return report;
}

}  // namespace admed
