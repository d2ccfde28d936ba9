#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rigiditykit/negativity.hpp"
#include "rigiditykit/sampling.hpp"

using namespace rigiditykit;

namespace {

Spectrum<Rational> spec(std::initializer_list<long> vals) {
    std::vector<Rational> v;
    for (long x : vals) v.push_back(rational(x));
    return Spectrum<Rational>(std::move(v));
}

// Independent oracle: the defining sum evaluated with nothing shared,
// straight from the displayed formula.
Rational oracle_L(const std::vector<Rational>& lam, int r) {
    const int n = static_cast<int>(lam.size());
    Rational acc(0);
    for (int p = 1; p <= n; ++p) {
        if (p == r) continue;
        for (int q = 1; q <= n; ++q) {
            if (q == r || q == p) continue;
            Rational term = (lam[r - 1] - lam[p - 1]) * (lam[r - 1] - lam[q - 1]);
            for (int k = 1; k <= n; ++k)
                if (k != p) term *= lam[k - 1] - lam[p - 1];
            for (int l = 1; l <= n; ++l)
                if (l != q) term *= lam[l - 1] - lam[q - 1];
            acc += 1 / term;
        }
    }
    return acc;
}

}  // namespace

TEST_CASE("L has the hand value -1/2 at every index of (0,1,2)") {
    auto s = spec({0, 1, 2});
    for (int r = 1; r <= 3; ++r) {
        CHECK(L_direct(s, r) == rational(-1, 2));
        CHECK(L_factored(s, r) == rational(-1, 2));
    }
}

TEST_CASE("L rejects degenerate input") {
    CHECK_THROWS_AS(L_direct(spec({0, 1}), 1), DegenerateSpectrum);
    CHECK_THROWS_AS(L_direct(spec({0, 1, 2}), 0), IndexOutOfRange);
    CHECK_THROWS_AS(L_direct(spec({0, 1, 2}), 4), IndexOutOfRange);
}

TEST_CASE("direct evaluation matches the independent oracle") {
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        auto rng = make_trial_rng(17, 4, trial);
        int n = static_cast<int>(rng.uniform(3, 8));
        auto s = sample_spectrum(rng, n, 20);
        int r = static_cast<int>(rng.uniform(1, n));
        CHECK(L_direct(s, r) == oracle_L(s.values(), r));
    }
}

TEST_CASE("b/c/d substitution has the hand values at r = 1") {
    auto t = transform_bcd(spec({0, 1, 2}), 1);
    CHECK(t.p_indices == std::vector<int>{2, 3});
    CHECK(t.b == std::vector<Rational>{rational(1), rational(1, 2)});
    CHECK(t.d == std::vector<Rational>{rational(2), rational(-1, 2)});
    CHECK(t.B == rational(3, 2));

    Rational b_sum(0);
    for (const auto& b : t.b) b_sum += b;
    CHECK(b_sum == t.B);
}

TEST_CASE("c_p / d_p is constant and equals the b product") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        auto rng = make_trial_rng(19, 5, trial);
        int n = static_cast<int>(rng.uniform(3, 7));
        auto s = sample_spectrum(rng, n, 15);
        int r = static_cast<int>(rng.uniform(1, n));
        auto t = transform_bcd(s, r);
        for (std::size_t i = 0; i < t.c.size(); ++i) CHECK(t.c[i] / t.d[i] == t.b_product);
    }
}

TEST_CASE("factored evaluation matches the hand expansion") {
    // (1/2)^2 * ((3/2)^2 - (4 + 1/4)) = -1/2
    CHECK(L_factored(spec({0, 1, 2}), 1) == rational(-1, 2));
    CHECK(L_factored(spec({0, 1, 2}), 2) == L_direct(spec({0, 1, 2}), 2));
}

TEST_CASE("interpolation identity has the hand polynomials at r = 1") {
    auto rep = check_interpolation_identity(spec({0, 1, 2}), 1);
    // H(x) = (3/2)x - 1/2
    CHECK(rep.interpolant == poly::Coeffs<Rational>{rational(-1, 2), rational(3, 2)});
    // x^2 - H(x) = (x - 1)(x - 1/2)
    CHECK(rep.root_product == poly::from_roots<Rational>({rational(1), rational(1, 2)}));
    CHECK(poly::eval(rep.interpolant, rational(1)) == rational(1));
    CHECK(poly::eval(rep.interpolant, rational(1, 2)) == rational(1, 4));
    CHECK(rep.flags.interpolation_values);
    CHECK(rep.flags.interpolation_poly);
    CHECK(rep.flags.trace_matches);
}

TEST_CASE("interpolation identity passes on random exact spectra") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        auto rng = make_trial_rng(23, 6, trial);
        int n = static_cast<int>(rng.uniform(3, 9));
        auto s = sample_spectrum(rng, n, 12);
        int r = static_cast<int>(rng.uniform(1, n));
        CHECK_NOTHROW(check_interpolation_identity(s, r));
    }
}

TEST_CASE("bound chain reproduces the hand evaluation at (0,1,2), r = 1") {
    auto rep = verify_exponential_bound_chain(spec({0, 1, 2}), 1);
    CHECK(rep.max_branch);
    CHECK(rep.B == doctest::Approx(1.5));
    CHECK(rep.p0 == 2);  // the entry with b = 1
    REQUIRE(rep.steps.size() == 3);
    CHECK(rep.steps[0].lhs == doctest::Approx(0.5));
    CHECK(rep.steps[0].rhs == doctest::Approx(std::exp(-0.5)));
    CHECK(rep.steps[1].lhs == doctest::Approx(1.5));
    CHECK(rep.steps[1].rhs == doctest::Approx(std::exp(0.5)));
    CHECK(rep.steps[2].rhs == doctest::Approx(2.0));  // d at p0
    CHECK(rep.all_hold);
}

TEST_CASE("bound chain handles the B = 0 boundary through the argmin branch") {
    auto rep = verify_exponential_bound_chain(spec({-1, 0, 1}), 2);
    CHECK_FALSE(rep.max_branch);
    CHECK(rep.B == doctest::Approx(0.0));
    CHECK(rep.p0 == 1);  // b = (-1, 1), argmin is the first entry
    CHECK(rep.all_hold);
    // Conclusion reduces to |d_p0| > 0.
    CHECK(rep.steps.back().lhs == doctest::Approx(0.0));
    CHECK(rep.steps.back().rhs == doctest::Approx(0.5));
}

TEST_CASE("bound chain holds across random spectra") {
    for (std::uint64_t trial = 0; trial < 60; ++trial) {
        auto rng = make_trial_rng(29, 7, trial);
        int n = static_cast<int>(rng.uniform(3, 8));
        auto s = sample_spectrum(rng, n, 25);
        for (int r = 1; r <= n; ++r) CHECK(verify_exponential_bound_chain(s, r).all_hold);
    }
}

TEST_CASE("certificates carry the full audit trail") {
    auto cert = certify(spec({0, 1, 2}), 1);
    CHECK(cert.r == 1);
    CHECK(cert.L_direct == rational(-1, 2));
    CHECK(cert.L_factored == rational(-1, 2));
    CHECK(cert.sum_d_sq == rational(17, 4));
    CHECK(cert.identity_flags.all());
    CHECK(cert.bound_chain.all_hold);
}

TEST_CASE("certify covers every index of larger spectra") {
    auto certs = certify_all(spec({0, 1, 2, 3}));
    REQUIRE(certs.size() == 4);
    for (const auto& cert : certs) {
        CHECK(cert.L_direct < 0);
        CHECK(cert.identity_flags.all());
    }
}

TEST_CASE("L is invariant under translation and relabeling, covariant under scaling") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        auto rng = make_trial_rng(31, 8, trial);
        int n = static_cast<int>(rng.uniform(3, 7));
        auto s = sample_spectrum(rng, n, 10);
        int r = static_cast<int>(rng.uniform(1, n));
        Rational base = L_direct(s, r);

        Rational shift = sample_rational(rng, 10);
        std::vector<Rational> shifted;
        for (const auto& l : s.values()) shifted.push_back(l + shift);
        CHECK(L_direct(Spectrum<Rational>(shifted), r) == base);

        Rational scale = sample_rational(rng, 10);
        std::vector<Rational> scaled;
        for (const auto& l : s.values()) scaled.push_back(l * scale);
        CHECK(L_direct(Spectrum<Rational>(scaled), r) == pow_int(scale, -2L * n) * base);

        // Rotate the labels; r follows its eigenvalue.
        std::vector<Rational> rotated(s.values().begin() + 1, s.values().end());
        rotated.push_back(s.values().front());
        int rotated_r = r == 1 ? n : r - 1;
        CHECK(L_direct(Spectrum<Rational>(rotated), rotated_r) == base);
    }
}
