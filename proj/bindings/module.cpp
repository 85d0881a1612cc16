// Python bindings for the admed core: basis/Hamiltonian construction,
// dense diagonalization, eigenstate observables, spectral-band analysis,
// thermal states, and quench dynamics.  Heavy calls release the GIL.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "admed/bands.hpp"
#include "admed/basis.hpp"
#include "admed/dynamics.hpp"
#include "admed/eigensolve.hpp"
#include "admed/hamiltonian.hpp"
#include "admed/observables.hpp"
#include "admed/thermal.hpp"

namespace py = pybind11;
using namespace admed;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact diagonalization of the anisotropic Dicke model";

    // ---- model + basis ----
    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double omega, double omega0, double g1, double g2,
                         int n_atoms, int n_max) {
                 ModelParams p{omega, omega0, g1, g2, n_atoms, n_max};
                 p.validate();
                 return p;
             }),
             py::arg("omega") = 1.0, py::arg("omega0") = 1.0, py::arg("g1") = 0.0,
             py::arg("g2") = 0.0, py::arg("n_atoms") = 2, py::arg("n_max") = 0)
        .def_readwrite("omega", &ModelParams::omega)
        .def_readwrite("omega0", &ModelParams::omega0)
        .def_readwrite("g1", &ModelParams::g1)
        .def_readwrite("g2", &ModelParams::g2)
        .def_readwrite("n_atoms", &ModelParams::n_atoms)
        .def_readwrite("n_max", &ModelParams::n_max)
        .def_property_readonly("j", &ModelParams::j)
        .def_property_readonly("dimension", &ModelParams::dimension)
        .def("validate", &ModelParams::validate)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(omega=" + std::to_string(p.omega) +
                   ", omega0=" + std::to_string(p.omega0) + ", g1=" + std::to_string(p.g1) +
                   ", g2=" + std::to_string(p.g2) + ", n_atoms=" + std::to_string(p.n_atoms) +
                   ", n_max=" + std::to_string(p.n_max) + ")";
        });

    py::class_<BasisState>(m, "BasisState")
        .def_readonly("n", &BasisState::n)
        .def_readonly("m_offset", &BasisState::m_offset);

    py::class_<Basis>(m, "Basis")
        .def_readonly("params", &Basis::params)
        .def("size", &Basis::size)
        .def("state_at", &Basis::state_at, py::arg("k"))
        .def("index_of", &Basis::index_of, py::arg("n"), py::arg("m_offset"))
        .def("m_signed", &Basis::m_signed, py::arg("k"))
        .def("parity", &Basis::parity, py::arg("k"))
        .def("__len__", &Basis::size);

    m.def("build_basis", &build_basis, py::arg("params"));
    m.def("parity_sector", &parity_sector, py::arg("basis"), py::arg("sector"),
          "Basis indices whose parity matches `sector` (+1 or -1)");

    // ---- Hamiltonians ----
    m.def("build_hamiltonian", &build_hamiltonian, py::arg("params"), py::arg("basis"),
          py::call_guard<py::gil_scoped_release>(),
          "Dense symmetric Hamiltonian in the product basis");
    m.def("build_decoupled", &build_decoupled, py::arg("params"), py::arg("basis"),
          py::call_guard<py::gil_scoped_release>(),
          "Same geometry with g1 = g2 = 0");
    m.def("spinspace_dimension", &spinspace_dimension, py::arg("params"));
    m.def("build_spinspace_hamiltonian", &build_spinspace_hamiltonian, py::arg("params"),
          py::call_guard<py::gil_scoped_release>(),
          "Hamiltonian on the (n_max+1)*2^N distinguishable-spin space");

    // ---- diagonalization ----
    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("energies", &Spectrum::energies)
        .def_readonly("vectors", &Spectrum::vectors)
        .def_property_readonly("dim", &Spectrum::dim);

    m.def("eigh", &eigh, py::arg("matrix"), py::call_guard<py::gil_scoped_release>(),
          "Full symmetric eigendecomposition; ascending energies, sign-fixed columns");

    // ---- eigenstate observables ----
    m.def("participation_ratio", &participation_ratio, py::arg("v"));
    m.def("inverse_participation_ratio", &inverse_participation_ratio, py::arg("v"));
    m.def("shannon_entropy", &shannon_entropy, py::arg("v"));
    m.def("multifractal_dimension", &multifractal_dimension, py::arg("v"), py::arg("q"),
          py::arg("dim"));
    m.def("mean_photon_number", &mean_photon_number, py::arg("v"), py::arg("basis"));
    m.def("vnee_spins", &vnee_spins, py::arg("v"), py::arg("basis"),
          "Von Neumann entanglement entropy of the spin block");

    py::class_<EigenstateMetrics>(m, "EigenstateMetrics")
        .def_readonly("pr", &EigenstateMetrics::pr)
        .def_readonly("ipr", &EigenstateMetrics::ipr)
        .def_readonly("photon_density", &EigenstateMetrics::photon_density)
        .def_readonly("vnee", &EigenstateMetrics::vnee)
        .def_readonly("d_q", &EigenstateMetrics::d_q);
    m.def("eigenstate_metrics", &eigenstate_metrics, py::arg("v"), py::arg("basis"),
          py::arg("qs") = std::vector<double>{0.5, 1.0, 2.0, 3.0});

    // ---- spectral bands ----
    py::class_<ProfilePoint>(m, "ProfilePoint")
        .def_readonly("energy", &ProfilePoint::energy)
        .def_readonly("vnee", &ProfilePoint::vnee);
    m.def("vnee_profile", &vnee_profile, py::arg("spectrum"), py::arg("basis"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<CharacteristicEnergies>(m, "CharacteristicEnergies")
        .def_readonly("lower", &CharacteristicEnergies::lower)
        .def_readonly("upper", &CharacteristicEnergies::upper);
    m.def("characteristic_energies", &characteristic_energies, py::arg("profile"));

    py::class_<ReferenceCutoffs>(m, "ReferenceCutoffs")
        .def_readonly("e_normal0", &ReferenceCutoffs::e_normal0)
        .def_readonly("e_max_decoupled", &ReferenceCutoffs::e_max_decoupled);
    m.def("reference_cutoffs", &reference_cutoffs, py::arg("params"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<RStatistic>(m, "RStatistic")
        .def_readonly("mean", &RStatistic::mean)
        .def_readonly("degenerate_gaps", &RStatistic::degenerate_gaps)
        .def_readonly("pair_count", &RStatistic::pair_count);
    m.def("r_statistic", &r_statistic, py::arg("energies"),
          "Mean consecutive-gap ratio; ~0.386 Poisson, ~0.53 GOE");

    py::class_<CentralBandR>(m, "CentralBandR")
        .def_readonly("stats", &CentralBandR::stats)
        .def_readonly("band_levels", &CentralBandR::band_levels)
        .def_readonly("low_statistics", &CentralBandR::low_statistics);
    m.def("central_band_r", &central_band_r, py::arg("spectrum"), py::arg("basis"),
          py::arg("cutoffs"), py::call_guard<py::gil_scoped_release>());

    py::class_<BandAnalysis>(m, "BandAnalysis")
        .def_readonly("profile", &BandAnalysis::profile)
        .def_readonly("e_lower", &BandAnalysis::e_lower)
        .def_readonly("e_upper", &BandAnalysis::e_upper)
        .def_readonly("chi_lower", &BandAnalysis::chi_lower)
        .def_readonly("chi_upper", &BandAnalysis::chi_upper)
        .def_readonly("e_normal0", &BandAnalysis::e_normal0)
        .def_readonly("e_max_decoupled", &BandAnalysis::e_max_decoupled)
        .def_readonly("central", &BandAnalysis::central);
    m.def("analyze_spectrum", &analyze_spectrum, py::arg("spectrum"), py::arg("basis"),
          py::arg("cutoffs") = std::nullopt, py::call_guard<py::gil_scoped_release>(),
          "VNEE profile, characteristic energies, chi ratios, central-band <r>");

    // ---- thermal ----
    m.def("analytic_tc", &analytic_tc, py::arg("params"),
          "Mean-field critical temperature, or None in the normal phase");
    m.def("solve_saddle_eta", [](const ModelParams& params, double beta) {
              return solve_saddle_eta(SaddleParams::from(params), beta);
          },
          py::arg("params"), py::arg("beta"),
          "Self-consistent eta of the thermal free-energy saddle point");
    m.def("saddle_function", [](const ModelParams& params, double beta, double y) {
              return saddle_function(SaddleParams::from(params), beta, y);
          },
          py::arg("params"), py::arg("beta"), py::arg("y"));
    m.def("gibbs_state",
          py::overload_cast<const SymmetricMatrix&, double>(&gibbs_state),
          py::arg("h"), py::arg("temperature"), py::call_guard<py::gil_scoped_release>());
    m.def("ground_state_projector", &ground_state_projector, py::arg("spectrum"));
    m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("dims"), py::arg("keep"),
          py::call_guard<py::gil_scoped_release>());
    m.def("vn_entropy", &vn_entropy, py::arg("rho"),
          py::call_guard<py::gil_scoped_release>());
    m.def("mutual_information_two_spins", &mutual_information_two_spins, py::arg("rho"),
          py::arg("params"), py::call_guard<py::gil_scoped_release>());

    // ---- dynamics ----
    m.def("middle_decoupled_state", &middle_decoupled_state, py::arg("basis"));
    py::class_<QuenchResult>(m, "QuenchResult")
        .def_readonly("times", &QuenchResult::times)
        .def_readonly("pr", &QuenchResult::pr)
        .def_readonly("initial_index", &QuenchResult::initial_index)
        .def_readonly("max_norm_drift", &QuenchResult::max_norm_drift);
    m.def("evolve_pr", &evolve_pr, py::arg("spectrum"), py::arg("psi_in"), py::arg("times"),
          py::call_guard<py::gil_scoped_release>(),
          "Participation ratio of e^{-iHt}|psi_in> at the sampled times");
    m.def("diagonal_ensemble_pr", &diagonal_ensemble_pr, py::arg("spectrum"),
          py::arg("psi_in"), py::call_guard<py::gil_scoped_release>());
}
