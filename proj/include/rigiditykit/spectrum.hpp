#pragma once

// Spectra, power sums, Newton's identities, and recovery of eigenvalue
// multiplicities from leading power sums.
//
// A Spectrum is an ordered tuple of n >= 2 scalars of one kind. The
// certification modules require pairwise-distinct entries because every
// downstream formula divides by pairwise differences; distinctness is
// enforced at construction (exact inequality for rationals, a minimum
// pairwise gap for floats). Multiplicity-expanded curvature lists use
// the `expanded` factory, which checks finiteness only — such spectra
// are accepted by the power-sum operations but rejected wherever
// distinctness is load-bearing.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "rigiditykit/errors.hpp"
#include "rigiditykit/polynomial.hpp"
#include "rigiditykit/scalar.hpp"

namespace rigiditykit {

inline constexpr double kDefaultDistinctnessTol = 1e-9;

template <class K>
class Spectrum {
  public:
    explicit Spectrum(std::vector<K> values, double distinctness_tol = kDefaultDistinctnessTol)
        : values_(std::move(values)) {
        validate_basic(values_);
        check_distinct(values_, distinctness_tol);
        distinct_ = true;
    }

    // Multiplicity-expanded list: repeats allowed, finiteness still required.
    static Spectrum expanded(std::vector<K> values) {
        Spectrum s;
        s.values_ = std::move(values);
        validate_basic(s.values_);
        s.distinct_ = min_gap_positive(s.values_);
        return s;
    }

    int n() const { return static_cast<int>(values_.size()); }
    const std::vector<K>& values() const { return values_; }
    bool distinct() const { return distinct_; }

    void require_distinct() const {
        if (!distinct_) throw DegenerateSpectrum("spectrum has repeated eigenvalues");
    }

  private:
    Spectrum() = default;

    static void validate_basic(const std::vector<K>& v) {
        if (v.size() < 2) throw DegenerateSpectrum("spectrum needs at least 2 eigenvalues");
        for (const K& x : v) {
            if (!is_finite_value(x)) throw DegenerateSpectrum("non-finite eigenvalue");
        }
    }

    static bool min_gap_positive(const std::vector<K>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i] == v[j]) return false;
        return true;
    }

    static void check_distinct(const std::vector<K>& v, double tol) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                if constexpr (is_exact_v<K>) {
                    if (v[i] == v[j]) throw DegenerateSpectrum("repeated eigenvalue");
                } else {
                    if (!(std::fabs(v[i] - v[j]) > tol))
                        throw DegenerateSpectrum("eigenvalue gap below distinctness tolerance");
                }
            }
        }
    }

    std::vector<K> values_;
    bool distinct_ = false;
};

// p[k-1] = sum_i lambda_i^k, k = 1..m.
template <class K>
struct PowerSums {
    std::vector<K> p;

    int m() const { return static_cast<int>(p.size()); }
};

template <class K>
PowerSums<K> power_sums(const Spectrum<K>& s, int m) {
    if (m < 1) throw InvalidRange("power_sums: m must be >= 1");
    std::vector<K> running(s.values());
    PowerSums<K> out;
    out.p.reserve(m);
    for (int k = 1; k <= m; ++k) {
        if (k > 1) {
            for (int i = 0; i < s.n(); ++i) running[i] = running[i] * s.values()[i];
        }
        out.p.push_back(std::accumulate(running.begin(), running.end(), K(0)));
    }
    return out;
}

// Newton's identities: k*e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i, e_0 = 1.
// Returns (e_1..e_n).
template <class K>
std::vector<K> newton_power_to_elementary(const PowerSums<K>& p, int n) {
    if (n < 1) throw InvalidRange("newton_power_to_elementary: n must be >= 1");
    if (p.m() < n) throw InvalidRange("newton_power_to_elementary: need at least n power sums");
    std::vector<K> e(n + 1, K(0));
    e[0] = K(1);
    for (int k = 1; k <= n; ++k) {
        K acc(0);
        for (int i = 1; i <= k; ++i) {
            K term = e[k - i] * p.p[i - 1];
            if (i % 2 == 1)
                acc = acc + term;
            else
                acc = acc - term;
        }
        e[k] = acc / K(k);
    }
    return {e.begin() + 1, e.end()};
}

// Monic polynomial with the given elementary symmetric values:
// x^n - e_1 x^(n-1) + e_2 x^(n-2) - ... + (-1)^n e_n.
template <class K>
poly::Coeffs<K> monic_from_elementary(const std::vector<K>& e) {
    int n = static_cast<int>(e.size());
    poly::Coeffs<K> c(n + 1, K(0));
    c[n] = K(1);
    for (int k = 1; k <= n; ++k) {
        if (k % 2 == 1)
            c[n - k] = -e[k - 1];
        else
            c[n - k] = e[k - 1];
    }
    return c;
}

template <class K>
struct MultiplicityProfile {
    int g = 0;
    std::vector<K> values;
    std::vector<int> multiplicities;
    int n = 0;

    MultiplicityProfile(std::vector<K> vals, std::vector<int> mults)
        : g(static_cast<int>(vals.size())), values(std::move(vals)), multiplicities(std::move(mults)) {
        if (g < 1 || multiplicities.size() != values.size())
            throw InvalidRange("multiplicity profile: size mismatch");
        for (int m : multiplicities) {
            if (m < 1) throw InvalidRange("multiplicity profile: multiplicities must be >= 1");
            n += m;
        }
        for (int i = 0; i < g; ++i)
            for (int j = i + 1; j < g; ++j)
                if (values[i] == values[j]) throw DegenerateSpectrum("repeated value in profile");
    }
};

namespace detail {

// Dense Gaussian elimination. Exact kind pivots on the first nonzero
// entry; float kind partial-pivots on magnitude. Throws SingularSystem
// when no usable pivot exists.
template <class K>
std::vector<K> solve_dense(std::vector<std::vector<K>> a, std::vector<K> rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        if constexpr (is_exact_v<K>) {
            for (int row = col; row < n; ++row) {
                if (!(a[row][col] == K(0))) {
                    pivot = row;
                    break;
                }
            }
        } else {
            double best = 0.0;
            for (int row = col; row < n; ++row) {
                double mag = std::fabs(to_double(a[row][col]));
                if (mag > best) {
                    best = mag;
                    pivot = row;
                }
            }
        }
        if (pivot < 0) throw SingularSystem("singular linear system");
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (int row = col + 1; row < n; ++row) {
            if (a[row][col] == K(0)) continue;
            K factor = a[row][col] / a[col][col];
            a[row][col] = K(0);
            for (int j = col + 1; j < n; ++j) a[row][j] = a[row][j] - factor * a[col][j];
            rhs[row] = rhs[row] - factor * rhs[col];
        }
    }
    std::vector<K> x(n, K(0));
    for (int row = n - 1; row >= 0; --row) {
        K acc = rhs[row];
        for (int j = row + 1; j < n; ++j) acc = acc - a[row][j] * x[j];
        x[row] = acc / a[row][row];
    }
    return x;
}

}  // namespace detail

// Recovers the multiplicities (m_1..m_g) from the leading power sums
// c_k = sum_i m_i * values_i^k, k = 1..g. The real solution is solved
// first; exact solutions must already be positive integers, float
// solutions are rounded to the nearest integers and accepted only when
// the re-substitution residual stays within `residual_tol`
// componentwise.
template <class K>
MultiplicityProfile<K> solve_multiplicities(const std::vector<K>& values, const std::vector<K>& c,
                                            double residual_tol = 1e-6) {
    const int g = static_cast<int>(values.size());
    if (g < 1) throw InvalidRange("solve_multiplicities: empty value list");
    if (static_cast<int>(c.size()) != g)
        throw InvalidRange("solve_multiplicities: need exactly g power sums");
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            if (values[i] == values[j]) throw SingularSystem("duplicate values");

    std::vector<std::vector<K>> a(g, std::vector<K>(g, K(0)));
    for (int i = 0; i < g; ++i) {
        K p = values[i];
        for (int k = 0; k < g; ++k) {
            a[k][i] = p;
            p = p * values[i];
        }
    }
    std::vector<K> x = detail::solve_dense(a, c);

    std::vector<int> mult(g, 0);
    if constexpr (is_exact_v<K>) {
        for (int i = 0; i < g; ++i) {
            if (x[i].get_den() != 1)
                throw NonIntegralSolution("multiplicity " + to_string(x[i]) + " is not an integer");
            if (x[i] < 1) throw NonIntegralSolution("multiplicity " + to_string(x[i]) + " is not positive");
            mult[i] = static_cast<int>(x[i].get_num().get_si());
        }
    } else {
        for (int i = 0; i < g; ++i) {
            double rounded = std::nearbyint(x[i]);
            if (rounded < 1.0) throw NonIntegralSolution("rounded multiplicity below 1");
            mult[i] = static_cast<int>(rounded);
        }
        // Componentwise residual of the rounded solution.
        for (int k = 1; k <= g; ++k) {
            double lhs = 0.0;
            for (int i = 0; i < g; ++i) lhs += mult[i] * pow_int(values[i], k);
            if (std::fabs(lhs - c[k - 1]) > residual_tol)
                throw NonIntegralSolution("rounded multiplicities fail the residual check");
        }
    }
    return MultiplicityProfile<K>(values, mult);
}

}  // namespace rigiditykit
