#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sqtransfer/io.hpp"
#include "sqtransfer/moments.hpp"
#include "sqtransfer/regularity.hpp"

namespace py = pybind11;
using namespace sqt;

PYBIND11_MODULE(_core, m) {
    m.doc() = "transference machinery for Roth-type theorems in the squares";

    // arith
    m.def("primes_upto", &primes_upto);
    m.def("compute_W", &compute_W);
    m.def("is_smooth", &is_smooth);
    m.def("sigma_count", &sigma_count);
    m.def("sqrt_classes", &sqrt_classes);
    m.def("divisor_count", &divisor_count);
    m.def("default_w", &default_w);
    m.def("gcd_ll", &gcd_ll);
    m.def("isqrt64", &isqrt64);

    // majorant
    py::class_<Majorant>(m, "Majorant")
        .def_readonly("support_len", &Majorant::support_len)
        .def_readonly("scale_num", &Majorant::scale_num)
        .def_readonly("scale_den", &Majorant::scale_den)
        .def_readonly("entries", &Majorant::entries)
        .def("scale", &Majorant::scale)
        .def("weight", &Majorant::weight)
        .def("mass", &Majorant::mass);
    py::class_<WParams>(m, "WParams")
        .def_readonly("X", &WParams::X)
        .def_readonly("b1", &WParams::b1)
        .def_readonly("b2", &WParams::b2)
        .def_readonly("sigma", &WParams::sigma)
        .def_readonly("Nb", &WParams::Nb)
        .def_property_readonly("w", [](const WParams& p) { return p.ctx.w; })
        .def_property_readonly("W", [](const WParams& p) { return p.ctx.W; });
    m.def("make_wparams", &make_wparams, py::arg("X"), py::arg("w"), py::arg("b1") = 1,
          py::arg("b2") = 0);
    m.def("default_b2", &default_b2);
    m.def("plain_majorant", &plain_majorant);
    m.def("wtricked_majorant", &wtricked_majorant);
    m.def("lift_set", &lift_set);
    m.def("scaled_wparams", &scaled_wparams, py::arg("w"), py::arg("pow2") = 12);
    py::class_<SelectResult>(m, "SelectResult")
        .def_readonly("params", &SelectResult::params)
        .def_readonly("statistic", &SelectResult::statistic)
        .def_readonly("normalized", &SelectResult::normalized)
        .def_readonly("delta", &SelectResult::delta);
    m.def("select_b", &select_b);
    m.def("smooth_numbers_upto", &smooth_numbers_upto);

    // expsum
    m.def("fourier_at", &fourier_at);
    m.def("gauss_sum", &gauss_sum);
    m.def("integral_I", &integral_I);
    m.def("major_arc_main", &major_arc_main);
    m.def("major_arc_error", &major_arc_error);
    m.def("weyl_ratio", &weyl_ratio);
    py::class_<DecayResult>(m, "DecayResult")
        .def_readonly("sup_ratio", &DecayResult::sup_ratio)
        .def_readonly("bernstein_slack", &DecayResult::bernstein_slack)
        .def_readonly("grid_points", &DecayResult::grid_points);
    m.def("decay_sup", &decay_sup, py::arg("nu"), py::arg("grid_factor") = 8,
          py::arg("pass_len") = 0);
    py::class_<FourierGrid>(m, "FourierGrid")
        .def_readonly("M", &FourierGrid::M)
        .def_readonly("values", &FourierGrid::values);
    m.def("fourier_grid", &fourier_grid);
    py::class_<Arc>(m, "Arc")
        .def_readonly("q", &Arc::q)
        .def_readonly("a", &Arc::a)
        .def_readonly("center", &Arc::center)
        .def_readonly("radius", &Arc::radius);
    py::class_<ArcDecomposition>(m, "ArcDecomposition")
        .def_readonly("tau", &ArcDecomposition::tau)
        .def_readonly("N", &ArcDecomposition::N)
        .def_readonly("arcs", &ArcDecomposition::arcs);
    m.def("arcs", &arcs);

    // counting
    py::class_<Equation>(m, "Equation")
        .def_readonly("coeffs", &Equation::coeffs)
        .def_readonly("sum_zero", &Equation::sum_zero)
        .def_readonly("n_pos", &Equation::n_pos)
        .def_readonly("n_neg", &Equation::n_neg)
        .def("s", &Equation::s);
    m.def("make_equation", &make_equation);
    py::class_<Subspace>(m, "Subspace")
        .def_readonly("forms", &Subspace::forms)
        .def_readonly("contains_diagonal", &Subspace::contains_diagonal);
    py::class_<SubspaceFamily>(m, "SubspaceFamily")
        .def_readonly("eq", &SubspaceFamily::eq)
        .def_readonly("subs", &SubspaceFamily::subs);
    m.def("make_family", &make_family);
    m.def("pairs_equal_family", &pairs_equal_family);
    m.def("diagonal_family", &diagonal_family);
    py::class_<CountValue>(m, "CountValue")
        .def_readonly("scale_num", &CountValue::scale_num)
        .def_readonly("scale_den", &CountValue::scale_den)
        .def_property_readonly("numer",
                               [](const CountValue& c) { return (double)c.numer; })
        .def("value", &CountValue::value);
    m.def("count_brute", &count_brute);
    m.def("count_dft", &count_dft);
    m.def("count_ktrivial", &count_ktrivial);
    py::class_<KWeightedValue>(m, "KWeightedValue")
        .def_readonly("count", &KWeightedValue::count)
        .def_readonly("ratio", &KWeightedValue::ratio);
    m.def("ktrivial_weighted", &ktrivial_weighted);
    m.def("telescope_check", &telescope_check);
    m.def("config_gap", &config_gap);
    m.def("system_direction", &system_direction);

    // moments
    py::class_<MomentValue>(m, "MomentValue")
        .def_readonly("scale_num", &MomentValue::scale_num)
        .def_readonly("scale_den", &MomentValue::scale_den)
        .def_property_readonly("numer",
                               [](const MomentValue& v) { return (double)v.numer; })
        .def("value", &MomentValue::value);
    m.def("moment_even", &moment_even);
    py::class_<QuadratureResult>(m, "QuadratureResult")
        .def_readonly("value", &QuadratureResult::value)
        .def_readonly("slack", &QuadratureResult::slack)
        .def_readonly("grid_points", &QuadratureResult::grid_points);
    m.def("moment_quadrature", &moment_quadrature);
    m.def("restriction_ratio", &restriction_ratio);
    py::class_<FourthMomentReport>(m, "FourthMomentReport")
        .def_readonly("ratio", &FourthMomentReport::ratio)
        .def_readonly("curve_c1", &FourthMomentReport::curve_c1)
        .def_readonly("curve_c2", &FourthMomentReport::curve_c2)
        .def_readonly("curve_c4", &FourthMomentReport::curve_c4);
    m.def("fourth_moment_ratio", &fourth_moment_ratio);
    py::class_<SpectrumReport>(m, "SpectrumReport")
        .def_readonly("delta", &SpectrumReport::delta)
        .def_readonly("points", &SpectrumReport::points)
        .def_readonly("R", &SpectrumReport::R)
        .def_readonly("measure_estimate", &SpectrumReport::measure_estimate);
    m.def("large_spectrum", &large_spectrum);

    // regularity
    py::enum_<RadoStatus>(m, "RadoStatus")
        .value("regular_at_n", RadoStatus::regular_at_n)
        .value("no_witness_up_to_n", RadoStatus::no_witness_up_to_n)
        .value("exhausted_budget", RadoStatus::exhausted_budget);
    py::class_<Budget>(m, "Budget")
        .def(py::init<>())
        .def_readwrite("max_nodes", &Budget::max_nodes)
        .def_readwrite("max_seconds", &Budget::max_seconds);
    py::class_<ColoringResult>(m, "ColoringResult")
        .def_readonly("r", &ColoringResult::r)
        .def_readonly("n", &ColoringResult::n)
        .def_readonly("status", &ColoringResult::status)
        .def_readonly("witness", &ColoringResult::witness)
        .def_readonly("certificate", &ColoringResult::certificate)
        .def_readonly("nodes", &ColoringResult::nodes)
        .def_readonly("seconds", &ColoringResult::seconds);
    m.def("distinct_solutions", &distinct_solutions);
    m.def("has_distinct_solution", &has_distinct_solution);
    m.def("rado_number", &rado_number, py::arg("eq"), py::arg("r"), py::arg("n_max"),
          py::arg("budget") = Budget{});
    py::class_<GreedyResult>(m, "GreedyResult")
        .def_readonly("set", &GreedyResult::set)
        .def_readonly("density", &GreedyResult::density);
    m.def("solution_free_greedy", &solution_free_greedy);
    py::class_<TransferenceReport>(m, "TransferenceReport")
        .def_readonly("selection", &TransferenceReport::selection)
        .def_readonly("delta", &TransferenceReport::delta)
        .def_readonly("delta_sq_N", &TransferenceReport::delta_sq_N)
        .def_readonly("statistic", &TransferenceReport::statistic)
        .def_readonly("decay", &TransferenceReport::decay)
        .def_readonly("count_brute_value", &TransferenceReport::count_brute_value)
        .def_readonly("count_dft_value", &TransferenceReport::count_dft_value)
        .def_readonly("ktrivial_value", &TransferenceReport::ktrivial_value)
        .def_readonly("ktrivial_ratio", &TransferenceReport::ktrivial_ratio)
        .def_readonly("heuristic_scale", &TransferenceReport::heuristic_scale)
        .def_readonly("lifted_size", &TransferenceReport::lifted_size);
    m.def("transference_statistic", &transference_statistic);
}
