#pragma once

// Minimal dense univariate polynomial helpers, ascending coefficient
// order (coeffs[i] multiplies x^i). Degrees here never exceed the
// spectrum size, so everything is plain O(n^2) vector arithmetic.

#include <vector>

#include "rigiditykit/errors.hpp"

namespace rigiditykit::poly {

template <class K>
using Coeffs = std::vector<K>;

template <class K>
K eval(const Coeffs<K>& c, const K& x) {
    K acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// c(x) * (x - root)
template <class K>
Coeffs<K> mul_linear(const Coeffs<K>& c, const K& root) {
    Coeffs<K> out(c.size() + 1, K(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i + 1] = out[i + 1] + c[i];
        out[i] = out[i] - root * c[i];
    }
    return out;
}

// Monic product (x - r_1)...(x - r_m).
template <class K>
Coeffs<K> from_roots(const std::vector<K>& roots) {
    Coeffs<K> c{K(1)};
    for (const K& r : roots) c = mul_linear(c, r);
    return c;
}

// Synthetic division of c(x) by (x - root). The root must be exact; a
// nonzero remainder means the caller's algebra is broken.
template <class K>
Coeffs<K> deflate(const Coeffs<K>& c, const K& root) {
    if (c.size() < 2) throw InvalidRange("deflate: degree < 1");
    Coeffs<K> q(c.size() - 1, K(0));
    K carry = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c[i] + root * carry;
    }
    if (!(carry == K(0))) throw IdentityViolation("deflate: nonzero remainder");
    return q;
}

template <class K>
Coeffs<K> add(Coeffs<K> a, const Coeffs<K>& b) {
    if (a.size() < b.size()) a.resize(b.size(), K(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
    return a;
}

template <class K>
Coeffs<K> scale(Coeffs<K> c, const K& s) {
    for (K& x : c) x = x * s;
    return c;
}

template <class K>
bool equal(const Coeffs<K>& a, const Coeffs<K>& b) {
    std::size_t m = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        K lhs = i < a.size() ? a[i] : K(0);
        K rhs = i < b.size() ? b[i] : K(0);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace rigiditykit::poly
