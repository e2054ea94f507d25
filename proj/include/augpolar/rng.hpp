#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace augpolar {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Counter-based stream derivation: stream i of a base seed is obtained by
// mixing, never by advancing a shared generator, so streams can be consumed
// in any order (or in parallel) without changing their contents.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
    return splitmix64(base_seed ^ (index * 0x9e3779b97f4a7c15ull));
}

// Unbiased draw from [0, bound) via rejection; used where the result is part
// of a code definition and must not depend on the standard library's
// unspecified distribution algorithms.
inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

// Box-Muller, one deviate per call with the partner cached. Explicit so that
// noise sequences are reproducible independent of the standard library build.
class GaussianSampler {
public:
    double operator()(std::mt19937_64& rng) {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_unit(rng);
        const double u2 = uniform_unit(rng);
        const double mag = std::sqrt(-2.0 * std::log1p(-u1));
        const double ang = 6.283185307179586476925286766559 * u2;
        spare_ = mag * std::sin(ang);
        has_spare_ = true;
        return mag * std::cos(ang);
    }

private:
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace augpolar
