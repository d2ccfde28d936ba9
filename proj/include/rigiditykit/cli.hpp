#pragma once

// Command implementations behind the CLI binary. Each command writes its
// report to `out` (stdout or --out FILE) and keeps diagnostics — error
// messages, wall-clock timing — on `diag`, so that reports for a fixed
// seed are byte-identical across runs.
//
// Exit-code contract:
//   0  success
//   1  verification failure (a certified claim failed on concrete input)
//   2  input error (unparseable flags or values, invalid ranges)
//   3  degenerate input (repeated eigenvalues, below minimum size)
//   4  internal identity violation (an exact identity or bound broke)

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rigiditykit/scalar.hpp"

namespace rigiditykit::cli {

struct Tolerances {
    double distinctness = 1e-9;
    double residual = 1e-6;
    double curvature = 1e-9;
    double strictness_margin = 1e-12;
};

enum class OutputFormat { json, csv, text };

OutputFormat parse_output_format(const std::string& name);

struct RunConfig {
    std::uint64_t seed = 0;
    int trials = 100;
    int n_lo = 3;
    int n_hi = 6;
    int rational_bound = 50;
    Tolerances tolerances;
    OutputFormat format = OutputFormat::json;
    double pole_margin = 1e-6;
};

// Throws ParseError when the configuration violates its invariants.
void validate(const RunConfig& config);

// "lo..hi" or a single integer.
std::pair<int, int> parse_n_range(const std::string& text);

// Comma-separated rationals ("0,1,2" or "1/2,-3/4,7").
std::vector<Rational> parse_rational_list(const std::string& text);

std::vector<int> parse_int_list(const std::string& text);

int exit_code_for(const std::exception& e);

int cmd_certify(const std::string& lambdas, int r, const RunConfig& config, std::ostream& out,
                std::ostream& diag);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_derivatives(const std::string& lambdas, const std::string& f_j, bool float_kind,
                    const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_stokes(const std::string& lambdas, const std::string& f, const RunConfig& config,
               std::ostream& out, std::ostream& diag);
int cmd_isoparametric(int n, int g, const std::string& multiplicities, int samples, bool minimal,
                      const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_clifford(int n, int r, const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace rigiditykit::cli
