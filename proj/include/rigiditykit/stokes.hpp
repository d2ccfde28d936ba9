#pragma once

// The pointwise nonpositive quantity behind the rigidity conclusion.
// Given a spectrum and the gradient components f = (f_1..f_n), define
//
//   A = ((n-3)!/n^2) * sum_r L(r) f_r^2,
//
// or equivalently, with x^{(r)} the derivative vector driven by f_r,
//
//   A = (n-3)! * sum over ordered triples (p,q,r), pairwise distinct, of
//       x^{(r)}_p x^{(r)}_q / [(l_r - l_p)(l_r - l_q)].
//
// Both routes are computed and must agree exactly. Since every L(r) is
// strictly negative, A <= 0 always, with A = 0 exactly when f = 0 --
// which is the rigidity statement at a single point.

#include <vector>

#include "rigiditykit/negativity.hpp"
#include "rigiditykit/vandermonde.hpp"

namespace rigiditykit {

template <class K>
struct GradientData {
    std::vector<K> f;
};

struct RigidityVerdict {
    Rational A{0};
    bool is_rigid = false;       // A == 0
    bool forced_f_zero = false;  // equivalent to is_rigid because every L(r) < 0
};

namespace detail {

template <class K>
void require_stokes_input(const Spectrum<K>& s, const GradientData<K>& g) {
    s.require_distinct();
    if (s.n() < 3) throw DegenerateSpectrum("need n >= 3");
    if (static_cast<int>(g.f.size()) != s.n())
        throw InvalidRange("gradient length must match the spectrum size");
    for (const K& x : g.f) {
        if (!is_finite_value(x)) throw InvalidRange("non-finite gradient component");
    }
}

template <class K>
K factorial_value(int m) {
    K acc(1);
    for (int i = 2; i <= m; ++i) acc = acc * K(i);
    return acc;
}

}  // namespace detail

template <class K>
K A_via_L(const Spectrum<K>& s, const GradientData<K>& g) {
    detail::require_stokes_input(s, g);
    const int n = s.n();
    auto w = detail::node_weights(s.values());
    K acc(0);
    for (int r = 0; r < n; ++r) {
        K l = detail::L_direct_impl(s.values(), r, w);
        acc = acc + l * g.f[r] * g.f[r];
    }
    return detail::factorial_value<K>(n - 3) / (K(n) * K(n)) * acc;
}

template <class K>
K A_via_triple_sum(const Spectrum<K>& s, const GradientData<K>& g) {
    detail::require_stokes_input(s, g);
    const auto& lam = s.values();
    const int n = s.n();

    // derivs[r][p]: derivative vector driven by f_r.
    std::vector<std::vector<K>> derivs;
    derivs.reserve(n);
    for (int r = 0; r < n; ++r)
        derivs.push_back(derivatives_closed_form(s, g.f[r]).lambda_derivs);

    K acc(0);
    for (int r = 0; r < n; ++r) {
        for (int p = 0; p < n; ++p) {
            if (p == r) continue;
            for (int q = 0; q < n; ++q) {
                if (q == r || q == p) continue;
                K numer = derivs[r][p] * derivs[r][q];
                K denom = (lam[r] - lam[p]) * (lam[r] - lam[q]);
                acc = acc + numer / denom;
            }
        }
    }
    return detail::factorial_value<K>(n - 3) * acc;
}

// Exact verdict: A <= 0 is certified, and A = 0 forces f = 0.
RigidityVerdict rigidity_verdict(const Spectrum<Rational>& s, const GradientData<Rational>& g);

}  // namespace rigiditykit
