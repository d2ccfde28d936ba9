#include "rigiditykit/hypersurface.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace rigiditykit {

namespace {

constexpr double kPi = std::numbers::pi;

bool admissible_g(int g) { return g == 1 || g == 2 || g == 3 || g == 4 || g == 6; }

double cot(double x) { return std::cos(x) / std::sin(x); }

// Sum of the g cotangent values at theta, multiplicity-weighted.
double mean_curvature_sum(const IsoparametricFamily& fam, double theta) {
    double acc = 0.0;
    for (int k = 0; k < fam.g; ++k) acc += fam.multiplicities[k] * cot(theta + k * kPi / fam.g);
    return acc;
}

void require_interior(const IsoparametricFamily& fam, double theta, double pole_margin) {
    if (!(theta >= pole_margin && theta <= fam.theta_sup() - pole_margin))
        throw PoleProximity("theta outside the pole-trimmed domain (0, pi/g)");
}

}  // namespace

IsoparametricFamily::IsoparametricFamily(int n_, int g_, std::vector<int> mults)
    : n(n_), g(g_), multiplicities(std::move(mults)) {
    if (!admissible_g(g)) throw InvalidRange("g must be one of {1, 2, 3, 4, 6}");
    if (static_cast<int>(multiplicities.size()) != g)
        throw InvalidRange("need exactly g multiplicities");
    int total = 0;
    for (int m : multiplicities) {
        if (m < 1) throw InvalidRange("multiplicities must be >= 1");
        total += m;
    }
    if (total != n) throw InvalidRange("multiplicities must sum to n");
}

IsoparametricFamily IsoparametricFamily::simple(int g_) {
    return IsoparametricFamily(g_, g_, std::vector<int>(g_, 1));
}

double IsoparametricFamily::theta_sup() const { return kPi / g; }

bool IsoparametricFamily::is_simple() const {
    for (int m : multiplicities)
        if (m != 1) return false;
    return true;
}

Spectrum<double> principal_curvatures(const IsoparametricFamily& fam, double theta,
                                      double pole_margin) {
    require_interior(fam, theta, pole_margin);

    std::vector<double> base(fam.g);
    for (int k = 0; k < fam.g; ++k) base[k] = cot(theta + k * kPi / fam.g);
    for (int i = 0; i < fam.g; ++i) {
        for (int j = i + 1; j < fam.g; ++j) {
            if (!(std::fabs(base[i] - base[j]) > kDefaultDistinctnessTol))
                throw DegenerateSpectrum("coincident principal curvature values");
        }
    }

    std::vector<double> expanded;
    expanded.reserve(fam.n);
    for (int k = 0; k < fam.g; ++k) expanded.insert(expanded.end(), fam.multiplicities[k], base[k]);
    return Spectrum<double>::expanded(std::move(expanded));
}

double gauss_scalar_curvature(const Spectrum<double>& s, int n) {
    if (s.n() != n) throw InvalidRange("spectrum size does not match n");
    double h = std::accumulate(s.values().begin(), s.values().end(), 0.0);
    double sq = 0.0;
    for (double l : s.values()) sq += l * l;
    return n * (n - 1) + h * h - sq;
}

MultiplicityProfile<double> clifford_torus_spectrum(int n, int r) {
    if (!(0 < r && r < n)) throw InvalidRange("need 0 < r < n");
    double a = std::sqrt(static_cast<double>(n - r) / r);
    double b = -std::sqrt(static_cast<double>(r) / (n - r));
    return MultiplicityProfile<double>({a, b}, {r, n - r});
}

double find_minimal_theta(const IsoparametricFamily& fam, double pole_margin, double tol,
                          int iteration_cap) {
    if (!fam.is_simple()) throw InvalidRange("minimal theta is located for simple families only");
    double lo = pole_margin;
    double hi = fam.theta_sup() - pole_margin;
    double f_lo = mean_curvature_sum(fam, lo);
    double f_hi = mean_curvature_sum(fam, hi);
    if (!(f_lo > 0.0 && f_hi < 0.0))
        throw ConvergenceFailure("mean curvature does not change sign on the trimmed domain");

    int iterations = 0;
    while (hi - lo > tol) {
        if (++iterations > iteration_cap) throw ConvergenceFailure("bisection iteration cap reached");
        double mid = 0.5 * (lo + hi);
        if (mean_curvature_sum(fam, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

CurvatureReport curvature_report(const IsoparametricFamily& fam, double theta, double pole_margin) {
    CurvatureReport rep;
    rep.theta = theta;
    auto s = principal_curvatures(fam, theta, pole_margin);
    rep.lambdas = s.values();
    rep.H = std::accumulate(rep.lambdas.begin(), rep.lambdas.end(), 0.0);
    rep.S = 0.0;
    for (double l : rep.lambdas) rep.S += l * l;
    rep.R = fam.n * (fam.n - 1) + rep.H * rep.H - rep.S;
    return rep;
}

CurvatureSweepReport verify_zero_scalar_curvature(const IsoparametricFamily& fam, int sample_count, double pole_margin) {
    if (!fam.is_simple() || (fam.g != 3 && fam.g != 4 && fam.g != 6))
        throw InvalidRange("sweep is defined for the simple families (3,3), (4,4), (6,6)");
    if (sample_count < 1) throw InvalidRange("need at least one sample");

    CurvatureSweepReport rep;
    rep.samples = sample_count;
    rep.table.reserve(sample_count);
    double lo = pole_margin;
    double width = fam.theta_sup() - 2 * pole_margin;
    for (int i = 0; i < sample_count; ++i) {
        // Midpoint grid: stays strictly interior for every sample count.
        double theta = lo + (i + 0.5) * width / sample_count;
        rep.table.push_back(curvature_report(fam, theta, pole_margin));
        rep.max_abs_R = std::max(rep.max_abs_R, std::fabs(rep.table.back().R));
    }
    return rep;
}

}  // namespace rigiditykit
