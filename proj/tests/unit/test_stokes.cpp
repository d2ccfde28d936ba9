#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigiditykit/sampling.hpp"
#include "rigiditykit/stokes.hpp"

using namespace rigiditykit;

namespace {

Spectrum<Rational> spec(std::initializer_list<long> vals) {
    std::vector<Rational> v;
    for (long x : vals) v.push_back(rational(x));
    return Spectrum<Rational>(std::move(v));
}

GradientData<Rational> grad(std::initializer_list<long> vals) {
    GradientData<Rational> g;
    for (long x : vals) g.f.push_back(rational(x));
    return g;
}

// Oracle: rebuild the triple sum from scratch, deriving each derivative
// vector by its closed form without going through the library.
Rational oracle_triple_sum(const std::vector<Rational>& lam, const std::vector<Rational>& f) {
    const int n = static_cast<int>(lam.size());
    Rational fact(1);
    for (int i = 2; i <= n - 3; ++i) fact *= i;

    auto deriv = [&](int p, int r) {
        Rational prod(1);
        for (int k = 0; k < n; ++k)
            if (k != p) prod *= lam[k] - lam[p];
        Rational lead = f[r] / Rational(n);
        if (n % 2 == 0) lead = -lead;
        return Rational(lead / prod);
    };

    Rational acc(0);
    for (int r = 0; r < n; ++r)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                if (p == q || p == r || q == r) continue;
                acc += deriv(p, r) * deriv(q, r) / ((lam[r] - lam[p]) * (lam[r] - lam[q]));
            }
    return fact * acc;
}

}  // namespace

TEST_CASE("A matches the hand evaluations on (0,1,2)") {
    auto s = spec({0, 1, 2});
    CHECK(A_via_L(s, grad({6, 0, 0})) == rational(-2));
    CHECK(A_via_L(s, grad({0, 0, 0})) == rational(0));
    CHECK(A_via_L(s, grad({6, 6, 6})) == rational(-6));

    CHECK(A_via_triple_sum(s, grad({6, 0, 0})) == rational(-2));
    CHECK(A_via_triple_sum(s, grad({0, 0, 0})) == rational(0));
}

TEST_CASE("A rejects mismatched or degenerate input") {
    CHECK_THROWS_AS(A_via_L(spec({0, 1}), grad({1, 1})), DegenerateSpectrum);
    CHECK_THROWS_AS(A_via_L(spec({0, 1, 2}), grad({1, 1})), InvalidRange);
}

TEST_CASE("both routes and the oracle agree exactly") {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        auto rng = make_trial_rng(43, 11, trial);
        int n = static_cast<int>(rng.uniform(3, 8));
        auto s = sample_spectrum(rng, n, 15);
        GradientData<Rational> g{sample_gradient(rng, n, 15)};

        Rational via_l = A_via_L(s, g);
        CHECK(via_l == A_via_triple_sum(s, g));
        CHECK(via_l == oracle_triple_sum(s.values(), g.f));
        CHECK(via_l <= 0);
    }
}

TEST_CASE("A is quadratically homogeneous in the gradient") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        auto rng = make_trial_rng(47, 12, trial);
        int n = static_cast<int>(rng.uniform(3, 7));
        auto s = sample_spectrum(rng, n, 12);
        GradientData<Rational> g{sample_gradient(rng, n, 12)};
        Rational t = sample_rational(rng, 12);

        GradientData<Rational> scaled;
        for (const auto& x : g.f) scaled.f.push_back(Rational(t * x));
        CHECK(A_via_L(s, scaled) == t * t * A_via_L(s, g));
    }
}

TEST_CASE("the verdict separates rigid from non-rigid exactly") {
    auto s = spec({0, 1, 2});

    auto rigid = rigidity_verdict(s, grad({0, 0, 0}));
    CHECK(rigid.A == 0);
    CHECK(rigid.is_rigid);
    CHECK(rigid.forced_f_zero);

    auto moving = rigidity_verdict(s, grad({6, 0, 0}));
    CHECK(moving.A == rational(-2));
    CHECK_FALSE(moving.is_rigid);
    CHECK_FALSE(moving.forced_f_zero);
}

TEST_CASE("nonzero gradients always give strictly negative A") {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        auto rng = make_trial_rng(53, 13, trial);
        int n = static_cast<int>(rng.uniform(3, 8));
        auto s = sample_spectrum(rng, n, 15);
        GradientData<Rational> g{sample_gradient(rng, n, 15, /*require_nonzero=*/true)};
        auto verdict = rigidity_verdict(s, g);
        CHECK(verdict.A < 0);
        CHECK_FALSE(verdict.is_rigid);
    }
}
