// CLI front end. See README.md for the exit-code contract and the
// output schemas.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "rigiditykit/cli.hpp"

namespace {

using rigiditykit::cli::RunConfig;

struct CommonFlags {
    std::string output = "json";
    std::string out_file;
};

void add_common(CLI::App* cmd, RunConfig& config, CommonFlags& flags) {
    cmd->add_option("--output", flags.output, "Report format: json, csv, or text")
        ->default_val("json");
    cmd->add_option("--out", flags.out_file, "Write the report to FILE instead of stdout");
    cmd->add_option("--strictness-margin", config.tolerances.strictness_margin,
                    "Relative slack for float-evaluated strict bounds");
    cmd->add_option("--distinctness-tol", config.tolerances.distinctness,
                    "Minimum pairwise gap for float spectra");
    cmd->add_option("--residual-tol", config.tolerances.residual,
                    "Residual threshold for float solves");
    cmd->add_option("--curvature-tol", config.tolerances.curvature,
                    "Tolerance on max |R| for curvature sweeps");
    cmd->add_option("--pole-margin", config.pole_margin,
                    "Distance kept from the endpoints of (0, pi/g)");
}

int dispatch(const CommonFlags& flags, RunConfig& config,
             const std::function<int(const RunConfig&, std::ostream&)>& run) {
    config.format = rigiditykit::cli::parse_output_format(flags.output);
    if (flags.out_file.empty()) return run(config, std::cout);
    std::ofstream file(flags.out_file);
    if (!file) throw rigiditykit::ParseError("cannot open output file '" + flags.out_file + "'");
    return run(config, file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rigiditykit — exact certification of the spectral negativity inequality,\n"
                 "eigenvalue-derivative cross-checks, and hypersurface curvature reports"};
    app.require_subcommand(1);

    RunConfig config;
    CommonFlags flags;

    std::string lambdas;
    std::string f_list;
    std::string fj;
    std::string n_range = "3..6";
    std::string multiplicities;
    int r = 0;
    int n = 0;
    int g = 0;
    int samples = 100;
    bool float_kind = false;
    bool minimal = false;

    auto* certify = app.add_subcommand("certify", "Certify L(r) < 0 for one exact spectrum");
    certify->add_option("--lambdas", lambdas, "Comma-separated eigenvalues, p/q or integers")
        ->required();
    certify->add_option("--r", r, "Distinguished index, 1-based")->required();
    add_common(certify, config, flags);

    auto* scan = app.add_subcommand("scan", "Certify random spectra in bulk, deterministically");
    scan->add_option("--n", n_range, "Spectrum sizes, 'lo..hi' or a single value")
        ->default_val("3..6");
    scan->add_option("--trials", config.trials, "Spectra per size")->default_val(100);
    scan->add_option("--seed", config.seed, "RNG seed")->envname("RIGIDITYKIT_SEED");
    scan->add_option("--bound", config.rational_bound,
                     "Max |numerator| and denominator of sampled rationals")
        ->default_val(50);
    add_common(scan, config, flags);

    auto* derivatives =
        app.add_subcommand("derivatives", "Solve the eigenvalue-derivative system both ways");
    derivatives->add_option("--lambdas", lambdas, "Comma-separated eigenvalues")->required();
    derivatives->add_option("--fj", fj, "Driving component of the derivative system")->required();
    derivatives->add_flag("--float", float_kind, "Evaluate in float64 instead of exact rationals");
    add_common(derivatives, config, flags);

    auto* stokes = app.add_subcommand("stokes", "Evaluate the nonpositive quantity A and the verdict");
    stokes->add_option("--lambdas", lambdas, "Comma-separated eigenvalues")->required();
    stokes->add_option("--f", f_list, "Comma-separated gradient components")->required();
    add_common(stokes, config, flags);

    auto* isoparametric =
        app.add_subcommand("isoparametric", "Curvature table for an isoparametric family");
    isoparametric->add_option("--n", n, "Hypersurface dimension")->required();
    isoparametric->add_option("--g", g, "Number of distinct principal curvatures")->required();
    isoparametric->add_option("--multiplicities", multiplicities,
                              "Comma-separated multiplicities (defaults to all ones when g = n)");
    isoparametric->add_option("--samples", samples, "Interior theta samples")->default_val(100);
    isoparametric->add_flag("--minimal", minimal, "Report the minimal member instead of a sweep");
    add_common(isoparametric, config, flags);

    auto* clifford = app.add_subcommand("clifford", "Spectrum and power sums of a Clifford torus");
    clifford->add_option("--n", n, "Hypersurface dimension")->required();
    clifford->add_option("--r", r, "Dimension of the first sphere factor, 0 < r < n")->required();
    add_common(clifford, config, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        using namespace rigiditykit::cli;
        if (certify->parsed())
            return dispatch(flags, config, [&](const RunConfig& c, std::ostream& out) {
                return cmd_certify(lambdas, r, c, out, std::cerr);
            });
        if (scan->parsed())
            return dispatch(flags, config, [&](const RunConfig& c, std::ostream& out) {
                RunConfig scan_config = c;
                std::tie(scan_config.n_lo, scan_config.n_hi) = parse_n_range(n_range);
                return cmd_scan(scan_config, out, std::cerr);
            });
        if (derivatives->parsed())
            return dispatch(flags, config, [&](const RunConfig& c, std::ostream& out) {
                return cmd_derivatives(lambdas, fj, float_kind, c, out, std::cerr);
            });
        if (stokes->parsed())
            return dispatch(flags, config, [&](const RunConfig& c, std::ostream& out) {
                return cmd_stokes(lambdas, f_list, c, out, std::cerr);
            });
        if (isoparametric->parsed())
            return dispatch(flags, config, [&](const RunConfig& c, std::ostream& out) {
                return cmd_isoparametric(n, g, multiplicities, samples, minimal, c, out, std::cerr);
            });
        if (clifford->parsed())
            return dispatch(flags, config, [&](const RunConfig& c, std::ostream& out) {
                return cmd_clifford(n, r, c, out, std::cerr);
            });
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return rigiditykit::cli::exit_code_for(e);
    }
    return 2;
}
