#pragma once

// Deterministic random sampling for scans and property sweeps. Every
// trial gets its own engine seeded from (seed, stream, index), so results
// are independent of execution order and identical across platforms
// (mt19937_64's output sequence is fixed by the standard; bounded draws
// below avoid std::uniform_int_distribution, whose mapping is not).

#include <cstdint>
#include <random>
#include <vector>

#include "rigiditykit/spectrum.hpp"

namespace rigiditykit {

class TrialRng {
  public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw from [lo, hi] by modulo rejection.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

    // Uniform from [lo, hi] over signed values, lo <= hi.
    long uniform_int(long lo, long hi);

  private:
    std::mt19937_64 engine_;
};

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

inline TrialRng make_trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return TrialRng(split_seed(seed, stream, index));
}

// Reduced p/q with numerator in [-bound, bound] \ {0}, denominator in [1, bound].
Rational sample_rational(TrialRng& rng, int bound);

// n pairwise-distinct rationals; collisions with earlier entries resample.
Spectrum<Rational> sample_spectrum(TrialRng& rng, int n, int bound);

// Gradient components, zero allowed; with require_nonzero the vector is
// redrawn until some entry is nonzero.
std::vector<Rational> sample_gradient(TrialRng& rng, int n, int bound, bool require_nonzero = false);

}  // namespace rigiditykit
