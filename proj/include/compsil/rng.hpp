#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace compsil {

// splitmix64 finalizer; used for seeding and for deriving per-purpose streams.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// xoshiro256** (Blackman & Vigna). All results are platform-independent,
// which keeps every seeded artifact bit-reproducible.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9E3779B97F4A7C15ULL;
            word = mix64(sm);
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = (*this)();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller. No cached spare: call order alone
    // determines the stream, independent of how results are consumed.
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<std::uint64_t, 4> state_{};
};

// Purpose tags for derived streams. Adding a candidate k or a trial never
// perturbs any other stream because each (purpose, a, b) cell is mixed
// independently from the master seed.
enum class Stream : std::uint64_t {
    Synthetic = 1,
    Subsample,
    Kmeans,
    FullData,
    GapReference,
    GapData,
    Convergence,
    Runtime,
};

inline Xoshiro256 make_stream(std::uint64_t master, Stream purpose,
                              std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t x = master;
    x = mix64(x ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(purpose) + 1)));
    x = mix64(x ^ (0xBF58476D1CE4E5B9ULL * (a + 1)));
    x = mix64(x ^ (0x94D049BB133111EBULL * (b + 1)));
    return Xoshiro256(x);
}

}  // namespace compsil
