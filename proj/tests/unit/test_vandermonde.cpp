#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigiditykit/sampling.hpp"
#include "rigiditykit/vandermonde.hpp"

using namespace rigiditykit;

namespace {

Spectrum<Rational> spec(std::initializer_list<long> vals) {
    std::vector<Rational> v;
    for (long x : vals) v.push_back(rational(x));
    return Spectrum<Rational>(std::move(v));
}

}  // namespace

TEST_CASE("matrix rows are successive powers") {
    auto d = vandermonde_matrix(spec({0, 1, 2}));
    CHECK(d[0] == std::vector<Rational>{1, 1, 1});
    CHECK(d[1] == std::vector<Rational>{0, 1, 2});
    CHECK(d[2] == std::vector<Rational>{0, 1, 4});
}

TEST_CASE("determinant follows the pairwise-difference product") {
    CHECK(vandermonde_det(spec({0, 1, 2})) == rational(2));
    CHECK(vandermonde_det(spec({0, 1})) == rational(1));
    CHECK(vandermonde_det(spec({2, 1, 0})) == rational(-2));
}

TEST_CASE("generic solve matches the hand back-substitution") {
    auto sol = solve_derivatives_generic(spec({0, 1, 2}), rational(6));
    CHECK(sol.lambda_derivs == std::vector<Rational>{1, -2, 1});
    CHECK(sol.residual == 0.0);
    CHECK(moment_identities_hold(spec({0, 1, 2}), sol));

    auto zero = solve_derivatives_generic(spec({0, 1, 2}), rational(0));
    CHECK(zero.lambda_derivs == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("closed form matches the hand evaluation") {
    auto sol = derivatives_closed_form(spec({0, 1, 2}), rational(6));
    CHECK(sol.lambda_derivs == std::vector<Rational>{1, -2, 1});

    auto zero = derivatives_closed_form(spec({0, 1, 2}), rational(0));
    CHECK(zero.lambda_derivs == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("the two routes agree exactly on random exact instances") {
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        auto rng = make_trial_rng(37, 9, trial);
        int n = static_cast<int>(rng.uniform(2, 10));
        auto s = sample_spectrum(rng, n, 20);
        Rational f_j = sample_rational(rng, 20);
        auto generic = solve_derivatives_generic(s, f_j);
        auto closed = derivatives_closed_form(s, f_j);
        CHECK(generic.lambda_derivs == closed.lambda_derivs);
        CHECK(moment_identities_hold(s, closed));
    }
}

TEST_CASE("solution entries alternate in sign on sorted spectra") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        auto rng = make_trial_rng(41, 10, trial);
        int n = static_cast<int>(rng.uniform(2, 9));
        auto s = sample_spectrum(rng, n, 15);
        auto sorted = s.values();
        std::sort(sorted.begin(), sorted.end());
        Rational f_j = sample_rational(rng, 15);
        if (f_j < 0) f_j = -f_j;

        auto sol = derivatives_closed_form(Spectrum<Rational>(sorted), f_j);
        for (int i = 0; i + 1 < n; ++i)
            CHECK(sgn(sol.lambda_derivs[i]) == -sgn(sol.lambda_derivs[i + 1]));
        CHECK(sol.lambda_derivs.back() > 0);  // last entry always positive
    }
}

TEST_CASE("solutions are linear in the driving component") {
    auto s = spec({0, 1, 2, 5});
    auto one = derivatives_closed_form(s, rational(1));
    auto scaled = derivatives_closed_form(s, rational(7, 3));
    for (int i = 0; i < 4; ++i)
        CHECK(scaled.lambda_derivs[i] == rational(7, 3) * one.lambda_derivs[i]);
}

TEST_CASE("float kind records a residual") {
    Spectrum<double> s({0.0, 1.0, 2.0});
    auto sol = solve_derivatives_generic(s, 6.0);
    CHECK(sol.lambda_derivs[0] == doctest::Approx(1.0));
    CHECK(sol.lambda_derivs[1] == doctest::Approx(-2.0));
    CHECK(sol.lambda_derivs[2] == doctest::Approx(1.0));
    CHECK(sol.residual >= 0.0);
    CHECK_FALSE(is_ill_conditioned(sol));
    CHECK(moment_identities_hold(s, sol, 1e-9));
}
