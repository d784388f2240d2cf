// Copyright 2026 The schmidtkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "schmidtkit/cli.hpp"
#include "schmidtkit/json_io.hpp"
#include "schmidtkit/locc.hpp"
#include "schmidtkit/mixed_pure.hpp"
#include "schmidtkit/physics.hpp"
#include "schmidtkit/random.hpp"
#include "schmidtkit/schmidt.hpp"
#include "schmidtkit/truncation.hpp"

namespace py = pybind11;
using namespace schmidtkit;

namespace {

py::object variant_to_object(const StateVariant& state) {
    return std::visit([](const auto& s) { return py::cast(s); }, state);
}

ProductSumState product_sum_from_tuples(
    int d, int n, const std::vector<std::tuple<Complex, Vector, Vector>>& terms) {
    std::vector<ProductTerm> converted;
    converted.reserve(terms.size());
    for (const auto& [c, left, right] : terms) {
        converted.push_back(ProductTerm{c, left, right});
    }
    return make_product_sum(d, n, std::move(converted));
}

DiracSpinor spinor_from_matrix(const Matrix& coeffs) {
    if (coeffs.rows() != 4) {
        throw Error(ErrorCode::DimensionError, "spinor coefficient matrix must have 4 rows");
    }
    std::array<Vector, 4> components;
    for (int mu = 0; mu < 4; ++mu) {
        components[static_cast<std::size_t>(mu)] = coeffs.row(mu).transpose();
    }
    return make_dirac_spinor(std::move(components));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite Schmidt analysis of (d, infinity) bipartite states";

    const auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<NoConvergenceError>(m, "NoConvergenceError", error.ptr());

    py::class_<PureState>(m, "PureState")
        .def_readonly("d", &PureState::d)
        .def_readonly("n", &PureState::n)
        .def_readonly("coeffs", &PureState::coeffs);

    py::class_<ProductSumState>(m, "ProductSumState")
        .def_readonly("d", &ProductSumState::d)
        .def_readonly("n", &ProductSumState::n);

    py::class_<MixedPureState>(m, "MixedPureState")
        .def_readonly("d", &MixedPureState::d)
        .def_readonly("n", &MixedPureState::n)
        .def_readonly("slices", &MixedPureState::slices)
        .def_readonly("trace_one", &MixedPureState::trace_one)
        .def_readonly("h_purity", &MixedPureState::h_purity);

    py::class_<SchmidtData>(m, "SchmidtData")
        .def_readonly("rank", &SchmidtData::rank)
        .def_readonly("tau", &SchmidtData::tau)
        .def_readonly("left", &SchmidtData::left)
        .def_readonly("right", &SchmidtData::right);

    py::class_<OperatorSchmidtData>(m, "OperatorSchmidtData")
        .def_readonly("rank", &OperatorSchmidtData::rank)
        .def_readonly("lambdas", &OperatorSchmidtData::lambdas)
        .def_readonly("factors", &OperatorSchmidtData::factors)
        .def_readonly("vectors", &OperatorSchmidtData::vectors)
        .def_readonly("hermitian_factors", &OperatorSchmidtData::hermitian_factors);

    py::enum_<WitnessVerdict>(m, "WitnessVerdict")
        .value("Entangled", WitnessVerdict::Entangled)
        .value("Inconclusive", WitnessVerdict::Inconclusive);

    py::enum_<PptVerdict>(m, "PptVerdict")
        .value("PositiveOnProbes", PptVerdict::PositiveOnProbes)
        .value("ViolationFound", PptVerdict::ViolationFound)
        .value("Inconclusive", PptVerdict::Inconclusive);

    py::enum_<NonnegFactorFlag>(m, "NonnegFactorFlag")
        .value("Yes", NonnegFactorFlag::Yes)
        .value("Inconclusive", NonnegFactorFlag::Inconclusive);

    py::enum_<LowRankFlag>(m, "LowRankFlag")
        .value("Yes", LowRankFlag::Yes)
        .value("No", LowRankFlag::No);

    py::enum_<MajorizationVerdict>(m, "MajorizationVerdict")
        .value("Convertible12", MajorizationVerdict::Convertible12)
        .value("Convertible21", MajorizationVerdict::Convertible21)
        .value("Equivalent", MajorizationVerdict::Equivalent)
        .value("Incomparable", MajorizationVerdict::Incomparable);

    py::enum_<BlochRegime>(m, "BlochRegime")
        .value("Orthogonal", BlochRegime::Orthogonal)
        .value("Dependent", BlochRegime::Dependent)
        .value("Intermediate", BlochRegime::Intermediate);

    py::class_<WitnessReport>(m, "WitnessReport")
        .def_readonly("lambda_sum", &WitnessReport::lambda_sum)
        .def_readonly("verdict", &WitnessReport::verdict)
        .def_readonly("self_pairing", &WitnessReport::self_pairing);

    py::class_<SeparabilityFlags>(m, "SeparabilityFlags")
        .def_readonly("nonneg_factor_separable", &SeparabilityFlags::nonneg_factor_separable)
        .def_readonly("low_rank_separable", &SeparabilityFlags::low_rank_separable)
        .def_readonly("ppt", &SeparabilityFlags::ppt);

    py::class_<PptReport>(m, "PptReport")
        .def_readonly("verdict", &PptReport::verdict)
        .def_readonly("factors_psd", &PptReport::factors_psd)
        .def_readonly("probes_evaluated", &PptReport::probes_evaluated)
        .def_readonly("min_expectation", &PptReport::min_expectation);

    py::class_<ConvergenceReport::Snapshot>(m, "ConvergenceSnapshot")
        .def_readonly("n", &ConvergenceReport::Snapshot::n)
        .def_readonly("tau", &ConvergenceReport::Snapshot::tau);

    py::class_<ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("final_n", &ConvergenceReport::final_n)
        .def_readonly("schmidt", &ConvergenceReport::schmidt)
        .def_readonly("delta_gap", &ConvergenceReport::delta_gap)
        .def_readonly("weyl_bound", &ConvergenceReport::weyl_bound)
        .def_readonly("rank_certified", &ConvergenceReport::rank_certified)
        .def_readonly("iterations", &ConvergenceReport::iterations);

    py::class_<BlochReport>(m, "BlochReport")
        .def_readonly("sigma", &BlochReport::sigma)
        .def_readonly("delta", &BlochReport::delta)
        .def_readonly("rho", &BlochReport::rho)
        .def_readonly("entropy", &BlochReport::entropy)
        .def_readonly("regime", &BlochReport::regime);

    py::class_<DiracSpinor>(m, "DiracSpinor")
        .def_readonly("components", &DiracSpinor::components);

    py::class_<DiracReport>(m, "DiracReport")
        .def_readonly("schmidt", &DiracReport::schmidt)
        .def_readonly("entropy", &DiracReport::entropy);

    py::class_<DiracScanResult>(m, "DiracScanResult")
        .def_readonly("max_entropy", &DiracScanResult::max_entropy)
        .def_readonly("argmax", &DiracScanResult::argmax)
        .def_readonly("samples", &DiracScanResult::samples);

    py::class_<MixedScanResult>(m, "MixedScanResult")
        .def_readonly("max_surrogate_entropy", &MixedScanResult::max_surrogate_entropy)
        .def_readonly("samples", &MixedScanResult::samples);

    py::class_<Truncation>(m, "Truncation")
        .def_readonly("state", &Truncation::state)
        .def_readonly("raw_norm", &Truncation::raw_norm);

    py::class_<CoefficientSource, std::shared_ptr<CoefficientSource>>(m, "CoefficientSource")
        .def("dim", &CoefficientSource::dim)
        .def("coeff", &CoefficientSource::coeff, py::arg("alpha"), py::arg("k"))
        .def("tail_bound", &CoefficientSource::tail_bound, py::arg("n"));

    py::class_<GeometricSource, CoefficientSource, std::shared_ptr<GeometricSource>>(
        m, "GeometricSource")
        .def(py::init<std::vector<double>, std::vector<double>, bool>(), py::arg("weights"),
             py::arg("ratios"), py::arg("interleave") = true);

    py::class_<PowerLawSource, CoefficientSource, std::shared_ptr<PowerLawSource>>(
        m, "PowerLawSource")
        .def(py::init<std::vector<double>, std::vector<double>, bool>(), py::arg("weights"),
             py::arg("exponents"), py::arg("interleave") = true);

    py::class_<FiniteSource, CoefficientSource, std::shared_ptr<FiniteSource>>(m, "FiniteSource")
        .def(py::init<PureState>(), py::arg("state"));

    m.def("make_pure_state", &make_pure_state, py::arg("coeffs"), py::arg("normalize") = false);
    m.def("make_product_sum", &product_sum_from_tuples, py::arg("d"), py::arg("n"),
          py::arg("terms"), "terms is a list of (c, left, right) tuples");
    m.def("make_mixed_pure", &make_mixed_pure, py::arg("slices"), py::arg("normalize") = false);
    m.def("assemble", &assemble, py::arg("state"));

    m.def("delta_matrix", &delta_matrix, py::arg("state"));
    m.def("schmidt_decompose", &schmidt_decompose, py::arg("state"),
          py::arg("rank_tol") = kDefaultRankTol);
    m.def("decompose_product_sum", &decompose_product_sum, py::arg("state"),
          py::arg("rank_tol") = kDefaultRankTol);
    m.def("reduced_density", &reduced_density, py::arg("data"));
    m.def("entanglement_entropy", &entanglement_entropy, py::arg("data"));
    m.def("max_entangled", &max_entangled, py::arg("d"), py::arg("n"));

    m.def("truncate", &schmidtkit::truncate, py::arg("source"), py::arg("n"));
    m.def("truncation_block", &truncation_block, py::arg("source"), py::arg("n"));
    m.def("weyl_gap", &weyl_gap, py::arg("delta_a"), py::arg("delta_b"));
    m.def("converge_schmidt", &converge_schmidt, py::arg("source"), py::arg("tol"),
          py::arg("n0"), py::arg("n_max"), py::arg("rank_tol") = kDefaultRankTol);

    m.def("gellmann_basis", &gellmann_basis, py::arg("d"));
    m.def("matricize", &matricize, py::arg("q"));
    m.def("operator_schmidt", &operator_schmidt, py::arg("q"),
          py::arg("rank_tol") = kDefaultRankTol);
    m.def("reconstruct_mixed", &reconstruct_mixed, py::arg("data"), py::arg("d"), py::arg("n"));
    m.def("hermitian_rotate", &hermitian_rotate, py::arg("data"));
    m.def("witness_test", &witness_test, py::arg("data"), py::arg("tol") = kDefaultWitnessTol);
    m.def("witness_pairing", &witness_pairing, py::arg("probe_q"), py::arg("probe_psi"),
          py::arg("data"));
    m.def("partial_transpose", &partial_transpose, py::arg("q"));
    m.def("factor_expectation", &factor_expectation, py::arg("probe_q"), py::arg("probe_psi"),
          py::arg("data"));
    m.def("ppt_report", &ppt_report, py::arg("q"), py::arg("rank_tol") = kDefaultRankTol,
          py::arg("probe_seed") = kDefaultSeed);
    m.def("ppt_test", &ppt_test, py::arg("q"), py::arg("rank_tol") = kDefaultRankTol,
          py::arg("probe_seed") = kDefaultSeed);
    m.def("separability_flags", &separability_flags, py::arg("q"),
          py::arg("rank_tol") = kDefaultRankTol, py::arg("probe_seed") = kDefaultSeed);

    m.def(
        "to_prob_vector",
        [](const SchmidtData& data) { return to_prob_vector(data).p; }, py::arg("data"));
    m.def(
        "majorizes",
        [](const RealVector& a, const RealVector& b, double tol) {
            return majorizes(SchmidtProbVector{a}, SchmidtProbVector{b}, tol);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultMajorizeTol);
    m.def("locc_verdict", &locc_verdict, py::arg("psi1"), py::arg("psi2"),
          py::arg("tol") = kDefaultMajorizeTol);

    m.def("make_bloch_input", &make_bloch_input, py::arg("c1"), py::arg("c2"), py::arg("theta1"),
          py::arg("theta2"));
    m.def("bloch_input_from_sigma", &bloch_input_from_sigma, py::arg("c1"), py::arg("sigma"));
    m.def(
        "bloch_analyze",
        [](double c1, double sigma) { return bloch_analyze(bloch_input_from_sigma(c1, sigma)); },
        py::arg("c1"), py::arg("sigma"));
    m.def(
        "bloch_analyze_full",
        [](double c1, double c2, const Vector& theta1, const Vector& theta2) {
            return bloch_analyze(make_bloch_input(c1, c2, theta1, theta2));
        },
        py::arg("c1"), py::arg("c2"), py::arg("theta1"), py::arg("theta2"));
    m.def(
        "assemble_bloch",
        [](double c1, double sigma) { return assemble_bloch(bloch_input_from_sigma(c1, sigma)); },
        py::arg("c1"), py::arg("sigma"));

    m.def("make_dirac_spinor", &spinor_from_matrix, py::arg("coeffs"),
          "builds a spinor from a 4 x n coefficient matrix");
    m.def("spinor_state", &spinor_state, py::arg("spinor"));
    m.def("gram_matrix", &gram_matrix, py::arg("spinor"));
    m.def("dirac_analyze", &dirac_analyze, py::arg("spinor"));
    m.def("dirac_conjecture_scan", &dirac_conjecture_scan, py::arg("samples"), py::arg("n"),
          py::arg("seed") = kDefaultSeed, py::arg("extra") = std::vector<DiracSpinor>{});
    m.def("mixed_pure_scan", &mixed_pure_scan, py::arg("samples"), py::arg("n"),
          py::arg("seed") = kDefaultSeed);

    py::class_<BlochInput>(m, "BlochInput")
        .def_readonly("c1", &BlochInput::c1)
        .def_readonly("c2", &BlochInput::c2)
        .def_readonly("theta1", &BlochInput::theta1)
        .def_readonly("theta2", &BlochInput::theta2);

    m.def(
        "parse_state", [](const std::string& text) { return variant_to_object(parse_state(text)); },
        py::arg("text"), "parses a state JSON document");
    m.def(
        "load_state_file",
        [](const std::string& path) { return variant_to_object(load_state_file(path)); },
        py::arg("path"));
    m.def(
        "dump_state",
        [](const py::object& state) {
            StateVariant variant;
            if (py::isinstance<PureState>(state)) {
                variant = state.cast<PureState>();
            } else if (py::isinstance<ProductSumState>(state)) {
                variant = state.cast<ProductSumState>();
            } else if (py::isinstance<MixedPureState>(state)) {
                variant = state.cast<MixedPureState>();
            } else {
                throw Error(ErrorCode::InvalidInput, "expected a state object");
            }
            return dump_line(state_to_json(variant));
        },
        py::arg("state"), "serializes a state to its JSON line format");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "runs the command line interface in-process");
}
