#pragma once

// The eigenvalue-derivative system. When the first n-1 power sums of a
// spectrum are constant, the derivative vector x = (l_1', ..., l_n')
// along any direction satisfies
//
//   D x = (0, ..., 0, f/n)^T,   D row k = (l_1^k, ..., l_n^k), k = 0..n-1,
//
// where f is the derivative of the n-th power sum in that direction.
// Two independent routes produce x: dense elimination on D, and the
// closed form
//
//   x_i = (-1)^{n+1} * (f/n) / prod_{k != i}(l_k - l_i).
//
// Both are kept and cross-validated; in exact arithmetic they agree
// bit-for-bit.

#include <vector>

#include "rigiditykit/spectrum.hpp"

namespace rigiditykit {

template <class K>
struct DerivativeSolution {
    std::vector<K> lambda_derivs;
    K f_j{0};
    double residual = 0.0;  // max-norm of D*x - rhs; exactly 0 in the exact kind
};

template <class K>
bool is_ill_conditioned(const DerivativeSolution<K>& sol, double residual_tol = 1e-6) {
    return sol.residual > residual_tol;
}

// Row k holds the k-th powers, k = 0..n-1 (first row all ones).
template <class K>
std::vector<std::vector<K>> vandermonde_matrix(const Spectrum<K>& s) {
    const int n = s.n();
    std::vector<std::vector<K>> d(n, std::vector<K>(n, K(1)));
    for (int k = 1; k < n; ++k) {
        for (int i = 0; i < n; ++i) d[k][i] = d[k - 1][i] * s.values()[i];
    }
    return d;
}

namespace detail {

// Determinant by elimination, used to cross-check the product formula.
template <class K>
K det_by_elimination(std::vector<std::vector<K>> a) {
    const int n = static_cast<int>(a.size());
    K det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!(a[row][col] == K(0))) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return K(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        for (int row = col + 1; row < n; ++row) {
            if (a[row][col] == K(0)) continue;
            K factor = a[row][col] / a[col][col];
            for (int j = col; j < n; ++j) a[row][j] = a[row][j] - factor * a[col][j];
        }
    }
    return det;
}

}  // namespace detail

// prod_{k > l}(l_k - l_l); nonzero by distinctness. The exact kind also
// re-derives the value by elimination and insists the two agree.
template <class K>
K vandermonde_det(const Spectrum<K>& s) {
    s.require_distinct();
    const auto& lam = s.values();
    const int n = s.n();
    K prod(1);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < k; ++l) prod = prod * (lam[k] - lam[l]);
    if (prod == K(0)) throw SingularSystem("vanishing Vandermonde determinant");
    if constexpr (is_exact_v<K>) {
        if (!(prod == detail::det_by_elimination(vandermonde_matrix(s))))
            throw IdentityViolation("product formula disagrees with elimination determinant");
    }
    return prod;
}

// Elimination solve of D x = (0, ..., 0, f_j/n).
template <class K>
DerivativeSolution<K> solve_derivatives_generic(const Spectrum<K>& s, const K& f_j) {
    s.require_distinct();
    const int n = s.n();
    auto d = vandermonde_matrix(s);
    std::vector<K> rhs(n, K(0));
    rhs[n - 1] = f_j / K(n);

    DerivativeSolution<K> sol;
    sol.f_j = f_j;
    sol.lambda_derivs = detail::solve_dense(d, rhs);

    // Re-substitution residual. Exact solves must come back clean.
    double max_err = 0.0;
    for (int k = 0; k < n; ++k) {
        K acc(0);
        for (int i = 0; i < n; ++i) acc = acc + d[k][i] * sol.lambda_derivs[i];
        K err = acc - rhs[k];
        if constexpr (is_exact_v<K>) {
            if (!(err == K(0))) throw IdentityViolation("exact Vandermonde solve left a residual");
        } else {
            max_err = std::max(max_err, std::fabs(to_double(err)));
        }
    }
    sol.residual = max_err;
    return sol;
}

// x_i = (-1)^{n+1} * (f_j/n) / prod_{k != i}(l_k - l_i).
template <class K>
DerivativeSolution<K> derivatives_closed_form(const Spectrum<K>& s, const K& f_j) {
    s.require_distinct();
    const auto& lam = s.values();
    const int n = s.n();
    K lead = f_j / K(n);
    if (n % 2 == 0) lead = -lead;

    DerivativeSolution<K> sol;
    sol.f_j = f_j;
    sol.lambda_derivs.reserve(n);
    for (int i = 0; i < n; ++i) {
        K prod(1);
        for (int k = 0; k < n; ++k) {
            if (k != i) prod = prod * (lam[k] - lam[i]);
        }
        sol.lambda_derivs.push_back(lead / prod);
    }
    sol.residual = 0.0;
    return sol;
}

// sum_i l_i^s x_i = 0 for s = 0..n-2 and sum_i l_i^{n-1} x_i = f_j/n.
template <class K>
bool moment_identities_hold(const Spectrum<K>& s, const DerivativeSolution<K>& sol,
                            double rel_tol = 1e-9) {
    const auto& lam = s.values();
    const int n = s.n();
    if (static_cast<int>(sol.lambda_derivs.size()) != n) return false;
    std::vector<K> powers(n, K(1));
    for (int k = 0; k < n; ++k) {
        K acc(0);
        for (int i = 0; i < n; ++i) acc = acc + powers[i] * sol.lambda_derivs[i];
        K expected = k == n - 1 ? K(sol.f_j / K(n)) : K(0);
        if (!kind_equal(acc, expected, rel_tol)) return false;
        for (int i = 0; i < n; ++i) powers[i] = powers[i] * lam[i];
    }
    return true;
}

}  // namespace rigiditykit
