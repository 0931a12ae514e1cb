#ifndef SPREADLAB_RNG_HPP
#define SPREADLAB_RNG_HPP

#include <cstdint>

namespace spreadlab {

// Counter-based randomness built on the splitmix64 finalizer. Every random
// decision in the project is a pure function of (seed, counter), so runs are
// reproducible across platforms and parallel schedules. std::random engines
// are avoided on purpose: the standard leaves distribution output
// implementation-defined.

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from (master, stream, index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index = 0) {
    return mix64(mix64(master ^ mix64(stream)) + index);
}

/// Keyed uniform draw in [0,1): pure function of (seed, counter).
inline double keyed_uniform(std::uint64_t seed, std::uint64_t counter) {
    return (mix64(seed ^ mix64(counter + 0x632be59bd9b4e019ULL)) >> 11) * 0x1.0p-53;
}

/// Small sequential engine for generators that draw a variable number of
/// values (splitmix64 stream).
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return (next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % bound;
    }

private:
    std::uint64_t state_;
};

}  // namespace spreadlab

#endif
