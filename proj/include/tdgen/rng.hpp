#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace tdgen {

// Deterministic random stream. The raw mt19937_64 sequence is pinned by the
// standard; the distributions below avoid std::uniform_* (whose output varies
// across standard libraries), so equal seeds give byte-identical instances on
// every platform.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi); returns lo exactly when lo == hi
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // uniform in {0, ..., n-1}, unbiased via power-of-two rejection
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t mask = std::bit_ceil(n) - 1;
        for (;;) {
            const std::uint64_t v = eng_() & mask;
            if (v < n) return v;
        }
    }

    // uniform integer in [lo, hi]
    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

// splitmix64 mix of a master seed and a task salt; used to derive independent
// per-task streams (e.g. one per sweep configuration).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace tdgen
