#pragma once

// Float models of the isoparametric families in the unit sphere and of
// Clifford tori, used to reproduce the scalar-curvature benchmarks.
//
// A family with g distinct principal curvatures (g in {1,2,3,4,6}) and
// tube parameter theta in (0, pi/g) has curvature values
//
//   cot(theta + (k-1) pi / g),   k = 1..g,
//
// repeated according to the multiplicities. For a hypersurface of S^{n+1}
// the Gauss equation gives the scalar curvature as
//
//   R = n(n-1) + H^2 - S,   H = sum l_i,  S = sum l_i^2.
//
// For the simple-curvature families (all multiplicities 1, so n = g)
// R vanishes identically in theta; the sweep in verify_zero_scalar_curvature measures
// how close the float evaluation stays to that.

#include <vector>

#include "rigiditykit/spectrum.hpp"

namespace rigiditykit {

inline constexpr double kDefaultPoleMargin = 1e-6;
inline constexpr double kDefaultBisectionTol = 1e-12;
inline constexpr int kDefaultIterationCap = 200;

struct IsoparametricFamily {
    int n = 0;
    int g = 0;
    std::vector<int> multiplicities;

    IsoparametricFamily(int n_, int g_, std::vector<int> mults);

    // Convenience: unit multiplicities, n = g.
    static IsoparametricFamily simple(int g_);

    double theta_sup() const;  // pi / g
    bool is_simple() const;
};

struct CurvatureReport {
    double theta = 0.0;
    std::vector<double> lambdas;
    double H = 0.0;
    double S = 0.0;
    double R = 0.0;
};

struct CurvatureSweepReport {
    int samples = 0;
    double max_abs_R = 0.0;
    std::vector<CurvatureReport> table;
};

// The g cotangent values at theta, expanded by multiplicity. Output
// passes full Spectrum distinctness exactly when the family is simple.
Spectrum<double> principal_curvatures(const IsoparametricFamily& fam, double theta,
                                      double pole_margin = kDefaultPoleMargin);

// n(n-1) + (sum l)^2 - sum l^2.
double gauss_scalar_curvature(const Spectrum<double>& s, int n);

// Minimal Clifford torus: sqrt((n-r)/r) with multiplicity r and
// -sqrt(r/(n-r)) with multiplicity n-r. Its power sums satisfy
// p_1 = 0 and p_2 = n for every admissible (n, r).
MultiplicityProfile<double> clifford_torus_spectrum(int n, int r);

// Unique root of p_1(theta) = 0 on the pole-trimmed domain, located by
// bisection; p_1 is strictly decreasing there so the root is unique.
double find_minimal_theta(const IsoparametricFamily& fam, double pole_margin = kDefaultPoleMargin,
                          double tol = kDefaultBisectionTol, int iteration_cap = kDefaultIterationCap);

CurvatureReport curvature_report(const IsoparametricFamily& fam, double theta,
                                 double pole_margin = kDefaultPoleMargin);

// Sweeps sample_count interior thetas and reports max |R| with the full
// table. Restricted to the simple families (3,3), (4,4), (6,6).
CurvatureSweepReport verify_zero_scalar_curvature(const IsoparametricFamily& fam, int sample_count,
                           double pole_margin = kDefaultPoleMargin);

}  // namespace rigiditykit
