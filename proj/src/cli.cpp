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

#include "schmidtkit/cli.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "schmidtkit/json_io.hpp"
#include "schmidtkit/locc.hpp"
#include "schmidtkit/mixed_pure.hpp"
#include "schmidtkit/physics.hpp"
#include "schmidtkit/schmidt.hpp"
#include "schmidtkit/truncation.hpp"

namespace schmidtkit {

namespace {

struct Options {
    std::string file;
    std::string file2;
    double tol = 0.0;
    double rank_tol = kDefaultRankTol;
    double witness_tol = kDefaultWitnessTol;
    double majorize_tol = kDefaultMajorizeTol;
    bool bits = false;
    std::uint64_t seed = kDefaultSeed;
    int samples = 10000;
    std::string sweep;
    std::string out_path;

    int d = 2;
    int n = 2;
    bool hermitian = false;

    std::string source = "geometric";
    std::vector<double> weights;
    std::vector<double> ratios;
    std::vector<double> exponents;
    bool dense = false;
    double converge_tol = 1e-10;
    int n0 = 2;
    int n_max = 1 << 20;

    double c1 = 1.0 / std::numbers::sqrt2;
    double sigma = 0.0;
    bool sigma_set = false;
    std::string theta1_path;
    std::string theta2_path;

    bool mixed = false;
    std::vector<std::string> inject;
};

void write_output(const std::string& text, std::ostream& out, const std::string& out_path) {
    out << text;
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            throw Error(ErrorCode::InvalidInput, "cannot write file: " + out_path);
        }
        file << text;
    }
}

void emit(const Json& j, std::ostream& out, const Options& opt) {
    write_output(dump_line(j), out, opt.out_path);
}

double entropy_value(double nats, const Options& opt) {
    return opt.bits ? nats / std::numbers::ln2 : nats;
}

const char* entropy_key(const Options& opt) {
    return opt.bits ? "entropy_bits" : "entropy_nats";
}

SchmidtData schmidt_from_variant(const StateVariant& state, double rank_tol) {
    if (const PureState* pure = std::get_if<PureState>(&state)) {
        return schmidt_decompose(*pure, rank_tol);
    }
    if (const ProductSumState* ps = std::get_if<ProductSumState>(&state)) {
        return decompose_product_sum(*ps, rank_tol);
    }
    throw Error(ErrorCode::InvalidInput, "this command expects a pure or product-sum state");
}

const MixedPureState& mixed_from_variant(const StateVariant& state) {
    if (const MixedPureState* mixed = std::get_if<MixedPureState>(&state)) {
        return *mixed;
    }
    throw Error(ErrorCode::InvalidInput, "this command expects a mixed-pure state");
}

PureState pure_from_variant(const StateVariant& state) {
    if (const PureState* pure = std::get_if<PureState>(&state)) {
        return *pure;
    }
    if (const ProductSumState* ps = std::get_if<ProductSumState>(&state)) {
        return assemble(*ps);
    }
    throw Error(ErrorCode::InvalidInput, "this command expects a pure or product-sum state");
}

Vector vector_from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::InvalidInput, "cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const Json j = Json::parse(buffer.str(), nullptr, false);
    if (j.is_discarded()) {
        throw Error(ErrorCode::SchemaError, "document is not valid JSON: " + path);
    }
    return vector_from_json(j, "vector");
}

DiracSpinor spinor_from_file(const std::string& path) {
    const StateVariant state = load_state_file(path);
    const PureState* pure = std::get_if<PureState>(&state);
    if (pure == nullptr || pure->d != 4) {
        throw Error(ErrorCode::DimensionError, "dirac commands expect a pure state with d = 4");
    }
    std::array<Vector, 4> components;
    for (int mu = 0; mu < 4; ++mu) {
        components[static_cast<std::size_t>(mu)] = pure->coeffs.row(mu).transpose();
    }
    return make_dirac_spinor(std::move(components));
}

struct SweepRange {
    double start = 0.0;
    double step = 0.0;
    double end = 0.0;
};

SweepRange parse_sweep(const std::string& text) {
    SweepRange range;
    char colon1 = 0;
    char colon2 = 0;
    std::istringstream in(text);
    in >> range.start >> colon1 >> range.step >> colon2 >> range.end;
    if (in.fail() || colon1 != ':' || colon2 != ':' || !(in >> std::ws).eof()) {
        throw Error(ErrorCode::InvalidInput, "--sweep expects start:step:end");
    }
    if (!(range.step > 0.0) || range.end < range.start) {
        throw Error(ErrorCode::InvalidInput, "--sweep needs step > 0 and end >= start");
    }
    return range;
}

Json convergence_to_json(const ConvergenceReport& report) {
    Json iterations = Json::array();
    for (const ConvergenceReport::Snapshot& snapshot : report.iterations) {
        iterations.push_back(
            Json{{"n", snapshot.n}, {"tau", real_vector_to_json(snapshot.tau)}});
    }
    return Json{{"final_n", report.final_n},
                {"schmidt", schmidt_to_json(report.schmidt)},
                {"delta_gap", report.delta_gap},
                {"weyl_bound", report.weyl_bound},
                {"rank_certified", report.rank_certified},
                {"iterations", iterations}};
}

int cmd_decompose(const Options& opt, std::ostream& out) {
    const SchmidtData data = schmidt_from_variant(load_state_file(opt.file), opt.rank_tol);
    emit(schmidt_to_json(data), out, opt);
    return 0;
}

int cmd_entropy(const Options& opt, std::ostream& out) {
    const SchmidtData data = schmidt_from_variant(load_state_file(opt.file), opt.rank_tol);
    emit(Json{{entropy_key(opt), entropy_value(entanglement_entropy(data), opt)}}, out, opt);
    return 0;
}

int cmd_reduced(const Options& opt, std::ostream& out) {
    const SchmidtData data = schmidt_from_variant(load_state_file(opt.file), opt.rank_tol);
    const Matrix rho = reduced_density(data);
    emit(Json{{"d", static_cast<int>(rho.rows())}, {"rho", matrix_to_json(rho)}}, out, opt);
    return 0;
}

int cmd_maxent(const Options& opt, std::ostream& out) {
    emit(state_to_json(max_entangled(opt.d, opt.n)), out, opt);
    return 0;
}

int cmd_opschmidt(const Options& opt, std::ostream& out) {
    OperatorSchmidtData data =
        operator_schmidt(mixed_from_variant(load_state_file(opt.file)), opt.rank_tol);
    if (opt.hermitian) {
        data = hermitian_rotate(data);
    }
    emit(operator_schmidt_to_json(data), out, opt);
    return 0;
}

int cmd_witness(const Options& opt, std::ostream& out) {
    const OperatorSchmidtData data =
        operator_schmidt(mixed_from_variant(load_state_file(opt.file)), opt.rank_tol);
    const WitnessReport report = witness_test(data, opt.witness_tol);
    emit(Json{{"lambda_sum", report.lambda_sum},
              {"self_pairing", report.self_pairing},
              {"verdict", to_string(report.verdict)}},
         out, opt);
    return 0;
}

int cmd_separability(const Options& opt, std::ostream& out) {
    const SeparabilityFlags flags =
        separability_flags(mixed_from_variant(load_state_file(opt.file)), opt.rank_tol, opt.seed);
    emit(Json{{"nonneg_factor_separable", to_string(flags.nonneg_factor_separable)},
              {"low_rank_separable", to_string(flags.low_rank_separable)},
              {"ppt", to_string(flags.ppt)}},
         out, opt);
    return 0;
}

int cmd_ppt(const Options& opt, std::ostream& out) {
    const PptReport report =
        ppt_report(mixed_from_variant(load_state_file(opt.file)), opt.rank_tol, opt.seed);
    emit(Json{{"verdict", to_string(report.verdict)},
              {"factors_psd", report.factors_psd},
              {"probes_evaluated", report.probes_evaluated},
              {"min_expectation", report.min_expectation}},
         out, opt);
    return 0;
}

int cmd_majorize(const Options& opt, std::ostream& out) {
    const SchmidtData first = schmidt_from_variant(load_state_file(opt.file), opt.rank_tol);
    const SchmidtData second = schmidt_from_variant(load_state_file(opt.file2), opt.rank_tol);
    const MajorizationVerdict verdict = locc_verdict(first, second, opt.majorize_tol);
    emit(Json{{"verdict", to_string(verdict)},
              {"prefix_sums_1", real_vector_to_json(prefix_sums(to_prob_vector(first)))},
              {"prefix_sums_2", real_vector_to_json(prefix_sums(to_prob_vector(second)))}},
         out, opt);
    return 0;
}

int cmd_converge(const Options& opt, std::ostream& out) {
    std::unique_ptr<CoefficientSource> source;
    if (opt.source == "geometric") {
        source = std::make_unique<GeometricSource>(opt.weights, opt.ratios, !opt.dense);
    } else if (opt.source == "powerlaw") {
        source = std::make_unique<PowerLawSource>(opt.weights, opt.exponents, !opt.dense);
    } else if (opt.source == "file") {
        if (opt.file.empty()) {
            throw Error(ErrorCode::InvalidInput, "--source file requires --file");
        }
        source = std::make_unique<FiniteSource>(pure_from_variant(load_state_file(opt.file)));
    } else {
        throw Error(ErrorCode::InvalidInput,
                    "--source must be one of geometric, powerlaw, file");
    }
    const ConvergenceReport report =
        converge_schmidt(*source, opt.converge_tol, opt.n0, opt.n_max, opt.rank_tol);
    emit(convergence_to_json(report), out, opt);
    return 0;
}

int cmd_bloch(const Options& opt, std::ostream& out) {
    if (!opt.sweep.empty()) {
        const SweepRange range = parse_sweep(opt.sweep);
        Json points = Json::array();
        std::ostringstream csv;
        csv << "sigma,delta," << entropy_key(opt) << "\n";
        for (int i = 0;; ++i) {
            const double sigma = range.start + i * range.step;
            if (sigma > range.end + range.step * 1e-9) break;
            const BlochReport report = bloch_analyze(bloch_input_from_sigma(opt.c1, sigma));
            const double entropy = entropy_value(report.entropy, opt);
            points.push_back(Json{{"sigma", sigma},
                                  {"delta", report.delta},
                                  {entropy_key(opt), entropy}});
            csv << Json(sigma).dump() << "," << Json(report.delta).dump() << ","
                << Json(entropy).dump() << "\n";
        }
        // The JSON report goes to stdout; --out captures the CSV table.
        out << dump_line(Json{{"c1", opt.c1}, {"points", points}});
        if (!opt.out_path.empty()) {
            std::ofstream file(opt.out_path, std::ios::binary);
            if (!file) {
                throw Error(ErrorCode::InvalidInput, "cannot write file: " + opt.out_path);
            }
            file << csv.str();
        }
        return 0;
    }

    BlochInput input;
    if (!opt.theta1_path.empty() || !opt.theta2_path.empty()) {
        if (opt.theta1_path.empty() || opt.theta2_path.empty()) {
            throw Error(ErrorCode::InvalidInput, "--theta1 and --theta2 must be given together");
        }
        if (opt.sigma_set) {
            throw Error(ErrorCode::InvalidInput, "--sigma conflicts with orbital factor files");
        }
        const double c2 = std::sqrt(std::max(0.0, 1.0 - opt.c1 * opt.c1));
        input = make_bloch_input(opt.c1, c2, vector_from_file(opt.theta1_path),
                                 vector_from_file(opt.theta2_path));
    } else {
        input = bloch_input_from_sigma(opt.c1, opt.sigma);
    }
    const BlochReport report = bloch_analyze(input);
    emit(Json{{"sigma", complex_to_json(report.sigma)},
              {"delta", report.delta},
              {"rho", matrix_to_json(report.rho)},
              {entropy_key(opt), entropy_value(report.entropy, opt)},
              {"regime", to_string(report.regime)}},
         out, opt);
    return 0;
}

int cmd_dirac(const Options& opt, std::ostream& out) {
    const DiracSpinor spinor = spinor_from_file(opt.file);
    const DiracReport report = dirac_analyze(spinor);
    emit(Json{{"gram", matrix_to_json(gram_matrix(spinor))},
              {"schmidt", schmidt_to_json(report.schmidt)},
              {entropy_key(opt), entropy_value(report.entropy, opt)}},
         out, opt);
    return 0;
}

int cmd_dirac_scan(const Options& opt, std::ostream& out) {
    if (opt.mixed) {
        const MixedScanResult result = mixed_pure_scan(opt.samples, opt.n, opt.seed);
        const char* surrogate_key =
            opt.bits ? "max_surrogate_entropy_bits" : "max_surrogate_entropy";
        emit(Json{{"exploratory", true},
                  {surrogate_key, entropy_value(result.max_surrogate_entropy, opt)},
                  {"n", opt.n},
                  {"samples", result.samples}},
             out, opt);
        return 0;
    }
    std::vector<DiracSpinor> extra;
    extra.reserve(opt.inject.size());
    for (const std::string& path : opt.inject) {
        extra.push_back(spinor_from_file(path));
    }
    const DiracScanResult result = dirac_conjecture_scan(opt.samples, opt.n, opt.seed, extra);
    const char* key = opt.bits ? "max_entropy_bits" : "max_entropy_nats";
    emit(Json{{key, entropy_value(result.max_entropy, opt)},
              {"argmax", state_to_json(spinor_state(result.argmax))},
              {"n", opt.n},
              {"samples", result.samples}},
         out, opt);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite Schmidt analysis of (d, infinity) bipartite states"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* decompose = app.add_subcommand("decompose", "Schmidt decomposition of a state file");
    decompose->add_option("file", opt.file, "pure or product-sum state JSON")->required();
    decompose->add_option("--rank-tol", opt.rank_tol, "relative rank cutoff");
    decompose->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* entropy = app.add_subcommand("entropy", "entanglement entropy of a state file");
    entropy->add_option("file", opt.file, "pure or product-sum state JSON")->required();
    entropy->add_option("--rank-tol", opt.rank_tol, "relative rank cutoff");
    entropy->add_flag("--bits", opt.bits, "report in bits instead of nats");
    entropy->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* reduced = app.add_subcommand("reduced", "reduced density operator of the finite side");
    reduced->add_option("file", opt.file, "pure or product-sum state JSON")->required();
    reduced->add_option("--rank-tol", opt.rank_tol, "relative rank cutoff");
    reduced->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* maxent = app.add_subcommand("maxent", "maximally entangled state as a state file");
    maxent->add_option("--d", opt.d, "finite dimension")->required();
    maxent->add_option("--n", opt.n, "truncation slots")->required();
    maxent->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* opschmidt = app.add_subcommand("opschmidt", "operator Schmidt decomposition");
    opschmidt->add_option("file", opt.file, "mixed-pure state JSON")->required();
    opschmidt->add_option("--rank-tol", opt.rank_tol, "relative rank cutoff");
    opschmidt->add_flag("--hermitian", opt.hermitian, "rotate factors to Hermitian form");
    opschmidt->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* witness = app.add_subcommand("witness", "coefficient-sum entanglement witness");
    witness->add_option("file", opt.file, "mixed-pure state JSON")->required();
    witness->add_option("--tol", opt.witness_tol, "witness tolerance on the coefficient sum");
    witness->add_option("--rank-tol", opt.rank_tol, "relative rank cutoff");
    witness->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* separability = app.add_subcommand("separability", "separability flags");
    separability->add_option("file", opt.file, "mixed-pure state JSON")->required();
    separability->add_option("--rank-tol", opt.rank_tol, "relative rank cutoff");
    separability->add_option("--seed", opt.seed, "probe seed");
    separability->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* ppt = app.add_subcommand("ppt", "positivity of the partial transpose");
    ppt->add_option("file", opt.file, "mixed-pure state JSON")->required();
    ppt->add_option("--rank-tol", opt.rank_tol, "relative rank cutoff");
    ppt->add_option("--seed", opt.seed, "probe seed");
    ppt->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* majorize = app.add_subcommand("majorize", "LOCC convertibility verdict");
    majorize->add_option("file1", opt.file, "first state JSON")->required();
    majorize->add_option("file2", opt.file2, "second state JSON")->required();
    majorize->add_option("--tol", opt.majorize_tol, "prefix-sum tolerance");
    majorize->add_option("--rank-tol", opt.rank_tol, "relative rank cutoff");
    majorize->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* converge = app.add_subcommand("converge", "truncation convergence loop");
    converge->add_option("--source", opt.source, "geometric, powerlaw, or file")->required();
    converge->add_option("--weights", opt.weights, "row weights")->delimiter(',');
    converge->add_option("--ratios", opt.ratios, "geometric row ratios in (0, 1)")->delimiter(',');
    converge->add_option("--exponents", opt.exponents, "power-law row exponents > 1/2")
        ->delimiter(',');
    converge->add_flag("--dense", opt.dense, "rows occupy every slot instead of interleaving");
    converge->add_option("--file", opt.file, "state JSON for --source file");
    converge->add_option("--tol", opt.converge_tol, "convergence tolerance");
    converge->add_option("--n0", opt.n0, "initial truncation size");
    converge->add_option("--n-max", opt.n_max, "truncation size limit");
    converge->add_option("--rank-tol", opt.rank_tol, "relative rank cutoff");
    converge->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* bloch = app.add_subcommand("bloch", "spin-1/2 spin-orbit analysis");
    bloch->add_option("--c1", opt.c1, "first weight, c2 = sqrt(1 - c1^2)");
    bloch->add_option("--sigma", opt.sigma, "real orbital overlap in [0, 1]");
    bloch->add_option("--theta1", opt.theta1_path, "orbital factor file (JSON vector)");
    bloch->add_option("--theta2", opt.theta2_path, "orbital factor file (JSON vector)");
    bloch->add_option("--sweep", opt.sweep, "sweep sigma over start:step:end");
    bloch->add_flag("--bits", opt.bits, "report in bits instead of nats");
    bloch->add_option("--out", opt.out_path, "write JSON (or the sweep CSV) to a file");

    CLI::App* dirac = app.add_subcommand("dirac", "four-component spinor analysis");
    dirac->add_option("file", opt.file, "pure state JSON with d = 4")->required();
    dirac->add_flag("--bits", opt.bits, "report in bits instead of nats");
    dirac->add_option("--out", opt.out_path, "also write the JSON to a file");

    CLI::App* dirac_scan = app.add_subcommand("dirac-scan", "random spinor entropy scan");
    dirac_scan->add_option("--samples", opt.samples, "number of random spinors");
    dirac_scan->add_option("--n", opt.n, "orbital truncation slots")->required();
    dirac_scan->add_option("--seed", opt.seed, "master scan seed");
    dirac_scan->add_option("--inject", opt.inject, "extra spinor files joining the pool");
    dirac_scan->add_flag("--mixed", opt.mixed, "exploratory mixed-pure surrogate scan");
    dirac_scan->add_flag("--bits", opt.bits, "report in bits instead of nats");
    dirac_scan->add_option("--out", opt.out_path, "also write the JSON to a file");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("schmidtkit");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    opt.sigma_set = bloch->count("--sigma") > 0;

    try {
        if (decompose->parsed()) return cmd_decompose(opt, out);
        if (entropy->parsed()) return cmd_entropy(opt, out);
        if (reduced->parsed()) return cmd_reduced(opt, out);
        if (maxent->parsed()) return cmd_maxent(opt, out);
        if (opschmidt->parsed()) return cmd_opschmidt(opt, out);
        if (witness->parsed()) return cmd_witness(opt, out);
        if (separability->parsed()) return cmd_separability(opt, out);
        if (ppt->parsed()) return cmd_ppt(opt, out);
        if (majorize->parsed()) return cmd_majorize(opt, out);
        if (converge->parsed()) return cmd_converge(opt, out);
        if (bloch->parsed()) return cmd_bloch(opt, out);
        if (dirac->parsed()) return cmd_dirac(opt, out);
        if (dirac_scan->parsed()) return cmd_dirac_scan(opt, out);
        err << "no subcommand selected\n";
        return 2;
    } catch (const NoConvergenceError& e) {
        out << dump_line(Json{{"error", error_code_name(e.code())},
                              {"detail", e.what()},
                              {"partial", convergence_to_json(e.partial())}});
        return 1;
    } catch (const Error& e) {
        out << dump_line(Json{{"error", error_code_name(e.code())}, {"detail", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        out << dump_line(Json{{"error", "InternalError"}, {"detail", e.what()}});
        return 1;
    }
}

}  // namespace schmidtkit
