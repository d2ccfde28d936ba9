#pragma once

// Certification of the fundamental negativity inequality.
//
// For a spectrum of n >= 3 distinct values and a distinguished index r
// (1-based), define over ordered pairs (p, q) with p != q, p != r, q != r:
//
//   L(r) = sum  1 / [ (l_r - l_p)(l_r - l_q)
//                     * prod_{k != p}(l_k - l_p) * prod_{k != q}(l_k - l_q) ]
//
// L(r) is strictly negative for every spectrum and every r. The proof is
// a chain of exact algebraic identities plus one strict comparison, and
// the certificate records every link:
//
//   b_p = 1/(l_p - l_r)                          (n-1 distinct nonzero values)
//   c_p = 1/[(l_r - l_p) prod_{k != p}(l_k - l_p)]
//   d_p = b_p^{n-1} / prod_{k != p, r}(b_p - b_k)
//   c_p = d_p * prod_{k != r} b_k                 (checked exactly)
//   L(r) = (prod b_k)^2 * [ (sum d_p)^2 - sum d_p^2 ]
//
// The interpolation polynomial H(x) = sum_q d_q prod_{k != q,r}(x - b_k)
// satisfies H(b_p) = b_p^{n-1}, hence x^{n-1} - H(x) = prod_{k != r}(x - b_k)
// coefficient-for-coefficient, and comparing the x^{n-2} coefficients gives
// B := sum d_p = sum b_p. The strict step is sum d_p^2 > B^2, obtained from
// the exponential bounds 1 - x < e^{-x} (x != 0) and y <= e^{y-1} applied at
// the extremal b entry; those bounds involve exp and are therefore checked
// in float64 with a strictness margin, informative rather than load-bearing.
// The load-bearing conclusion L(r) < 0 is certified in exact rationals.

#include <string>
#include <vector>

#include "rigiditykit/polynomial.hpp"
#include "rigiditykit/spectrum.hpp"

namespace rigiditykit {

inline constexpr double kDefaultStrictnessMargin = 1e-12;

// One float-evaluated inequality in the bound chain: claim is
// `lhs < rhs` (strict) or `lhs <= rhs`, tested with a relative margin.
struct BoundStep {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    bool strict = true;
    bool holds = false;
};

struct BoundChainReport {
    double B = 0.0;          // float image of the exact B
    int p0 = 0;              // 1-based index of the extremal b entry
    bool max_branch = true;  // true: p0 = argmax b (B > 0); false: argmin (B <= 0)
    std::vector<BoundStep> steps;
    bool all_hold = false;
};

// The b/c/d substitution at a fixed r. Vectors run over p = 1..n
// skipping r, in ascending p order.
template <class K>
struct BcdTransform {
    std::vector<int> p_indices;  // original 1-based p for each slot
    std::vector<K> b;
    std::vector<K> c;
    std::vector<K> d;
    K B{0};          // sum of d_p (= sum of b_p)
    K b_product{0};  // prod_{k != r} b_k
};

struct IdentityFlags {
    bool c_matches_d_product = false;   // c_p == d_p * prod b_k for every p
    bool interpolation_values = false;  // H(b_p) == b_p^{n-1} for every p
    bool interpolation_poly = false;    // x^{n-1} - H(x) == prod(x - b_k), coefficientwise
    bool trace_matches = false;         // sum d_p == sum b_p
    bool factorization_matches = false; // direct and factored L agree
    bool sum_d_sq_dominates = false;    // sum d_p^2 > B^2, the strict step
    bool negative = false;              // L < 0

    bool all() const {
        return c_matches_d_product && interpolation_values && interpolation_poly &&
               trace_matches && factorization_matches && sum_d_sq_dominates && negative;
    }
};

template <class K>
struct InterpolationReport {
    poly::Coeffs<K> interpolant;  // H(x)
    poly::Coeffs<K> root_product; // prod_{k != r}(x - b_k)
    IdentityFlags flags;          // only the three interpolation-related flags are set
};

// Complete audit trail for one (spectrum, r) pair. Only constructed when
// every identity holds and the inequality is strict; the flags are the
// recorded evidence, not a partial-failure channel.
struct InequalityCertificate {
    int r = 0;
    std::vector<Rational> lambdas;
    BcdTransform<Rational> bcd;
    Rational sum_d_sq{0};
    Rational L_direct{0};
    Rational L_factored{0};
    IdentityFlags identity_flags;
    BoundChainReport bound_chain;
};

namespace detail {

template <class K>
void require_certifiable(const Spectrum<K>& s, int r) {
    s.require_distinct();
    if (s.n() < 3) throw DegenerateSpectrum("need n >= 3 (the defining sum is empty below that)");
    if (r < 1 || r > s.n()) throw IndexOutOfRange("index r must lie in 1..n");
}

// w_p = prod_{k != p}(l_k - l_p), the node weight under every term.
template <class K>
std::vector<K> node_weights(const std::vector<K>& lam) {
    const int n = static_cast<int>(lam.size());
    std::vector<K> w(n, K(1));
    for (int p = 0; p < n; ++p) {
        for (int k = 0; k < n; ++k) {
            if (k != p) w[p] = w[p] * (lam[k] - lam[p]);
        }
    }
    return w;
}

template <class K>
K L_direct_impl(const std::vector<K>& lam, int r0, const std::vector<K>& w) {
    const int n = static_cast<int>(lam.size());
    K acc(0);
    for (int p = 0; p < n; ++p) {
        if (p == r0) continue;
        for (int q = 0; q < n; ++q) {
            if (q == r0 || q == p) continue;
            K denom = (lam[r0] - lam[p]) * (lam[r0] - lam[q]);
            denom = denom * w[p];
            denom = denom * w[q];
            acc = acc + K(1) / denom;
        }
    }
    return acc;
}

template <class K>
BcdTransform<K> transform_bcd_impl(const std::vector<K>& lam, int r0, const std::vector<K>& w,
                                   double rel_tol) {
    const int n = static_cast<int>(lam.size());
    BcdTransform<K> t;
    for (int p = 0; p < n; ++p) {
        if (p == r0) continue;
        t.p_indices.push_back(p + 1);
        t.b.push_back(K(1) / (lam[p] - lam[r0]));
        t.c.push_back(K(1) / ((lam[r0] - lam[p]) * w[p]));
    }
    const int m = n - 1;
    t.b_product = K(1);
    for (const K& bk : t.b) t.b_product = t.b_product * bk;
    t.B = K(0);
    for (int i = 0; i < m; ++i) {
        K prod(1);
        for (int k = 0; k < m; ++k) {
            if (k != i) prod = prod * (t.b[i] - t.b[k]);
        }
        K d = pow_int(t.b[i], m) / prod;
        t.d.push_back(d);
        t.B = t.B + d;
    }
    // c_p = d_p * prod b_k is forced by the substitution; a mismatch is a bug.
    for (int i = 0; i < m; ++i) {
        K rhs = t.d[i] * t.b_product;
        if (!kind_equal(t.c[i], rhs, rel_tol))
            throw IdentityViolation("c_p != d_p * prod(b_k) at p = " + std::to_string(t.p_indices[i]));
    }
    return t;
}

template <class K>
K L_factored_impl(const BcdTransform<K>& t) {
    K sum_sq(0);
    for (const K& d : t.d) sum_sq = sum_sq + d * d;
    return t.b_product * t.b_product * (t.B * t.B - sum_sq);
}

template <class K>
InterpolationReport<K> interpolation_impl(const BcdTransform<K>& t, double rel_tol) {
    const int m = static_cast<int>(t.b.size());  // = n - 1
    InterpolationReport<K> rep;
    rep.root_product = poly::from_roots(t.b);

    // H(x) = sum_q d_q * prod_{k != q}(x - b_k); each factor is the full
    // product deflated by one root.
    poly::Coeffs<K> h(m, K(0));
    for (int q = 0; q < m; ++q) {
        poly::Coeffs<K> basis = poly::deflate(rep.root_product, t.b[q]);
        h = poly::add(std::move(h), poly::scale(std::move(basis), t.d[q]));
    }
    rep.interpolant = h;

    rep.flags.interpolation_values = true;
    for (int p = 0; p < m; ++p) {
        K expected = pow_int(t.b[p], m);
        if (!kind_equal(poly::eval(h, t.b[p]), expected, rel_tol)) {
            rep.flags.interpolation_values = false;
            throw IdentityViolation("H(b_p) != b_p^(n-1) at p = " + std::to_string(t.p_indices[p]));
        }
    }

    // x^{n-1} - H(x) must equal prod(x - b_k) coefficient for coefficient.
    poly::Coeffs<K> lhs(m + 1, K(0));
    lhs[m] = K(1);
    for (std::size_t i = 0; i < h.size(); ++i) lhs[i] = lhs[i] - h[i];
    rep.flags.interpolation_poly = poly::equal(lhs, rep.root_product);
    if (!rep.flags.interpolation_poly)
        throw IdentityViolation("x^(n-1) - H(x) != prod(x - b_k)");

    K b_sum(0);
    for (const K& bk : t.b) b_sum = b_sum + bk;
    rep.flags.trace_matches = kind_equal(t.B, b_sum, rel_tol);
    if (!rep.flags.trace_matches) throw IdentityViolation("sum d_p != sum b_p");
    return rep;
}

inline bool step_holds(double lhs, double rhs, bool strict, double margin) {
    double slack = margin * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    return strict ? lhs < rhs + slack : lhs <= rhs + slack;
}

template <class K>
BoundChainReport bound_chain_impl(const BcdTransform<K>& t, double margin) {
    const int m = static_cast<int>(t.b.size());
    BoundChainReport rep;
    rep.B = to_double(t.B);
    // B = 0 runs through the argmin branch; both arguments are valid there
    // and the minimum is guaranteed negative once B <= 0.
    rep.max_branch = t.B > K(0);

    int i0 = 0;
    for (int i = 1; i < m; ++i) {
        if (rep.max_branch ? t.b[i] > t.b[i0] : t.b[i] < t.b[i0]) i0 = i;
    }
    rep.p0 = t.p_indices[i0];

    const double b0 = to_double(t.b[i0]);
    const double d0 = to_double(t.d[i0]);
    if (!std::isfinite(b0) || !std::isfinite(d0) || !std::isfinite(rep.B))
        throw BoundViolation("non-finite value entering the bound chain");
    if (rep.max_branch ? !(b0 > 0.0) : !(b0 < 0.0))
        throw BoundViolation("extremal b entry has the wrong sign");

    auto push = [&](std::string label, double lhs, double rhs, bool strict) {
        if (!std::isfinite(lhs) || !std::isfinite(rhs))
            throw BoundViolation("non-finite bound value: " + label);
        BoundStep step{std::move(label), lhs, rhs, strict, step_holds(lhs, rhs, strict, margin)};
        if (!step.holds) throw BoundViolation("bound failed: " + step.label);
        rep.steps.push_back(std::move(step));
    };

    // The argmin branch mirrors the argmax one with absolute values; both
    // sides of each mirrored inequality are negative before taking |.|.
    const double scale = std::fabs(b0);
    for (int k = 0; k < m; ++k) {
        if (k == i0) continue;
        double bk = to_double(t.b[k]);
        double gap = rep.max_branch ? b0 - bk : std::fabs(b0 - bk);
        push("gap(" + std::to_string(t.p_indices[k]) + ")", gap, scale * std::exp(-bk / b0), true);
    }
    if (rep.max_branch) {
        push("B_bound", rep.B, scale * std::exp(rep.B / b0 - 1.0), false);
        push("conclusion", rep.B, d0, true);
    } else {
        push("B_bound", std::fabs(rep.B), scale * std::exp(rep.B / b0 - 1.0), false);
        push("conclusion", std::fabs(rep.B), std::fabs(d0), true);
    }
    rep.all_hold = true;
    return rep;
}

}  // namespace detail

// The defining ordered-pair sum, evaluated literally.
template <class K>
K L_direct(const Spectrum<K>& s, int r) {
    detail::require_certifiable(s, r);
    return detail::L_direct_impl(s.values(), r - 1, detail::node_weights(s.values()));
}

template <class K>
BcdTransform<K> transform_bcd(const Spectrum<K>& s, int r, double rel_tol = 1e-9) {
    detail::require_certifiable(s, r);
    return detail::transform_bcd_impl(s.values(), r - 1, detail::node_weights(s.values()), rel_tol);
}

// (prod b_k)^2 * [(sum d_p)^2 - sum d_p^2], the factored route.
template <class K>
K L_factored(const Spectrum<K>& s, int r) {
    return detail::L_factored_impl(transform_bcd(s, r));
}

template <class K>
InterpolationReport<K> check_interpolation_identity(const Spectrum<K>& s, int r) {
    return detail::interpolation_impl(transform_bcd(s, r), 1e-9);
}

// Float evaluation of the exponential bounds behind sum d^2 > B^2.
template <class K>
BoundChainReport verify_exponential_bound_chain(const Spectrum<K>& s, int r,
                                                double strictness_margin = kDefaultStrictnessMargin) {
    return detail::bound_chain_impl(transform_bcd(s, r), strictness_margin);
}

// Runs every check above in exact arithmetic and packages the audit
// trail. Throws IdentityViolation / BoundViolation on implementation
// bugs and VerificationFailure if the strict inequality fails.
InequalityCertificate certify(const Spectrum<Rational>& s, int r,
                              double strictness_margin = kDefaultStrictnessMargin);

// Certificates for every r of one spectrum, sharing the node weights.
std::vector<InequalityCertificate> certify_all(const Spectrum<Rational>& s,
                                               double strictness_margin = kDefaultStrictnessMargin);

}  // namespace rigiditykit
