#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace srlab {

// Seeded splitmix64 generator. The update is the standard finalizer chain
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
// so streams are bit-reproducible on any platform and trivially re-implemented
// in other languages.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed = 0) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n). Rejection-free modulo is fine at the scales used here
    // but we reject to keep draws exactly uniform.
    uint64_t next_below(uint64_t n) {
        if (n == 0) return 0;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Box-Muller. Draws two uniforms per call; the sine branch is discarded so
    // consecutive calls stay independent of call parity.
    double normal() {
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            const size_t j = static_cast<size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Derived substream: deterministic function of the parent seed and a tag.
    SplitMix64 fork(uint64_t tag) const {
        SplitMix64 g(state_ ^ (0x8F1BBCDCBFA53E0BULL + tag * 0xD6E8FEB86659FD93ULL));
        g.next_u64();
        return g;
    }

    uint64_t state() const { return state_; }

private:
    uint64_t state_;
};

// Stateless 64-bit mix of up to three words, used for counter-based noise
// keyed by (seed, latent, context) so results do not depend on evaluation
// order.
inline uint64_t mix64(uint64_t a, uint64_t b = 0, uint64_t c = 0) {
    uint64_t z = a * 0x9E3779B97F4A7C15ULL + b * 0xC2B2AE3D27D4EB4FULL + c * 0x165667B19E3779F9ULL + 0x27D4EB2F165667C5ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline uint64_t hash_str(std::string_view s, uint64_t seed = 0xCBF29CE484222325ULL) {
    uint64_t h = seed;
    for (const char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001B3ULL;
    }
    return h;
}

} // namespace srlab
