#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rigiditykit/sampling.hpp"
#include "rigiditykit/spectrum.hpp"

using namespace rigiditykit;

namespace {

Spectrum<Rational> spec(std::initializer_list<long> vals) {
    std::vector<Rational> v;
    for (long x : vals) v.push_back(rational(x));
    return Spectrum<Rational>(std::move(v));
}

}  // namespace

TEST_CASE("spectrum construction enforces the invariants") {
    CHECK_THROWS_AS(spec({5}), DegenerateSpectrum);
    CHECK_THROWS_AS(spec({0, 1, 1}), DegenerateSpectrum);
    CHECK_NOTHROW(spec({0, 1, 2}));

    // Float kind: gaps at or below the tolerance are rejected.
    CHECK_THROWS_AS(Spectrum<double>({0.0, 1e-10}), DegenerateSpectrum);
    CHECK_THROWS_AS(Spectrum<double>({0.0, 1e-9}), DegenerateSpectrum);
    CHECK_NOTHROW(Spectrum<double>({0.0, 1e-8}));
    CHECK_THROWS_AS(Spectrum<double>({0.0, std::nan("")}), DegenerateSpectrum);

    auto repeated = Spectrum<double>::expanded({1.0, 1.0, 2.0});
    CHECK_FALSE(repeated.distinct());
    CHECK_THROWS_AS(repeated.require_distinct(), DegenerateSpectrum);
}

TEST_CASE("power sums match direct summation") {
    auto p1 = power_sums(spec({0, 1}), 3);
    CHECK(p1.p == std::vector<Rational>{1, 1, 1});

    auto p2 = power_sums(spec({-1, 1}), 4);
    CHECK(p2.p == std::vector<Rational>{0, 2, 0, 2});

    auto p3 = power_sums(spec({0, 1, 2}), 3);
    CHECK(p3.p == std::vector<Rational>{3, 5, 9});
}

TEST_CASE("power sums are permutation invariant") {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        auto rng = make_trial_rng(7, 1, trial);
        auto s = sample_spectrum(rng, 5, 20);
        auto shuffled = s.values();
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.uniform(0, i - 1)]);
        auto p = power_sums(s, 5);
        auto q = power_sums(Spectrum<Rational>(shuffled), 5);
        CHECK(p.p == q.p);
    }
}

TEST_CASE("newton identities recover elementary symmetric values") {
    CHECK(newton_power_to_elementary(PowerSums<Rational>{{1, 1, 1}}, 2) ==
          std::vector<Rational>{1, 0});
    CHECK(newton_power_to_elementary(PowerSums<Rational>{{0, 2}}, 2) ==
          std::vector<Rational>{0, -1});
    CHECK(newton_power_to_elementary(PowerSums<Rational>{{0, 0}}, 2) ==
          std::vector<Rational>{0, 0});
}

TEST_CASE("characteristic polynomial round-trip vanishes on the spectrum") {
    // Oracle: expanding prod(x - l_i) must give the same coefficients as
    // the monic polynomial rebuilt from Newton's identities, and that
    // polynomial must vanish at each eigenvalue.
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        auto rng = make_trial_rng(11, 2, trial);
        int n = static_cast<int>(rng.uniform(2, 8));
        auto s = sample_spectrum(rng, n, 12);

        auto e = newton_power_to_elementary(power_sums(s, n), n);
        auto monic = monic_from_elementary(e);
        CHECK(poly::equal(monic, poly::from_roots(s.values())));
        for (const Rational& l : s.values()) CHECK(poly::eval(monic, l) == 0);
    }
}

TEST_CASE("multiplicity recovery solves the hand examples") {
    auto profile = solve_multiplicities<Rational>({rational(2), rational(-1)}, {rational(0), rational(6)});
    CHECK(profile.multiplicities == std::vector<int>{1, 2});
    CHECK(profile.n == 3);

    auto single = solve_multiplicities<Rational>({rational(5)}, {rational(15)});
    CHECK(single.multiplicities == std::vector<int>{3});

    CHECK_THROWS_AS(
        solve_multiplicities<Rational>({rational(1), rational(2)}, {rational(0), rational(1)}),
        NonIntegralSolution);
    CHECK_THROWS_AS(
        solve_multiplicities<Rational>({rational(3), rational(3)}, {rational(6), rational(18)}),
        SingularSystem);
}

TEST_CASE("multiplicity recovery round-trips synthetic profiles") {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        auto rng = make_trial_rng(13, 3, trial);
        int g = static_cast<int>(rng.uniform(1, 8));
        std::vector<Rational> values;
        while (static_cast<int>(values.size()) < g) {
            Rational c = sample_rational(rng, 15);
            if (std::find(values.begin(), values.end(), c) == values.end()) values.push_back(c);
        }
        std::vector<int> mults(g);
        for (int& m : mults) m = static_cast<int>(rng.uniform(1, 8));

        std::vector<Rational> c(g, Rational(0));
        for (int k = 1; k <= g; ++k) {
            for (int i = 0; i < g; ++i) c[k - 1] += mults[i] * pow_int(values[i], k);
        }
        auto profile = solve_multiplicities(values, c);
        CHECK(profile.multiplicities == mults);
    }
}

TEST_CASE("multiplicity recovery in float rounds then validates") {
    std::vector<double> values{2.0, -1.0};
    std::vector<double> c{2.0 * 1 + (-1.0) * 2, 4.0 * 1 + 1.0 * 2};
    // Perturb within the residual tolerance.
    c[0] += 2e-7;
    auto profile = solve_multiplicities(values, c, 1e-6);
    CHECK(profile.multiplicities == std::vector<int>{1, 2});

    // Inconsistent data stays inconsistent after rounding.
    CHECK_THROWS_AS(solve_multiplicities<double>({1.0, 2.0}, {0.0, 1.0}), NonIntegralSolution);
}
