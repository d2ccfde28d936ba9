#include "rigiditykit/sampling.hpp"

#include <algorithm>

namespace rigiditykit {

namespace {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t z = mix64(seed + 0x9E3779B97F4A7C15ull);
    z = mix64(z ^ (stream + 0x9E3779B97F4A7C15ull));
    z = mix64(z ^ (index + 0x9E3779B97F4A7C15ull));
    return z;
}

std::uint64_t TrialRng::uniform(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw InvalidRange("uniform: lo > hi");
    std::uint64_t range = hi - lo + 1;
    if (range == 0) return next();  // full 64-bit range
    std::uint64_t reject_below = (0 - range) % range;
    std::uint64_t x = next();
    while (x < reject_below) x = next();
    return lo + x % range;
}

long TrialRng::uniform_int(long lo, long hi) {
    return lo + static_cast<long>(uniform(0, static_cast<std::uint64_t>(hi - lo)));
}

Rational sample_rational(TrialRng& rng, int bound) {
    if (bound < 1) throw InvalidRange("rational bound must be >= 1");
    // 2*bound equally likely numerators, skipping zero.
    long pick = rng.uniform_int(0, 2L * bound - 1);
    long num = pick < bound ? pick - bound : pick - bound + 1;
    long den = rng.uniform_int(1, bound);
    return rational(num, den);
}

Spectrum<Rational> sample_spectrum(TrialRng& rng, int n, int bound) {
    if (n < 2) throw InvalidRange("spectrum size must be >= 2");
    if (n > 2 * bound) throw InvalidRange("bound too small to draw n distinct values");
    std::vector<Rational> values;
    values.reserve(n);
    while (static_cast<int>(values.size()) < n) {
        Rational candidate = sample_rational(rng, bound);
        if (std::find(values.begin(), values.end(), candidate) == values.end())
            values.push_back(candidate);
    }
    return Spectrum<Rational>(std::move(values));
}

std::vector<Rational> sample_gradient(TrialRng& rng, int n, int bound, bool require_nonzero) {
    std::vector<Rational> f(n, Rational(0));
    do {
        for (int i = 0; i < n; ++i) {
            // Zero is a legitimate component; give it the same weight as
            // each nonzero numerator choice.
            if (rng.uniform(0, 2u * bound) == 0)
                f[i] = 0;
            else
                f[i] = sample_rational(rng, bound);
        }
    } while (require_nonzero &&
             std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == 0; }));
    return f;
}

}  // namespace rigiditykit
