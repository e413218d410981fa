// Counter-based uniform streams. Every draw is a pure hash of
// (seed, tags...), so simulation results do not depend on the order
// in which agents are processed.
#pragma once

#include <cstdint>

namespace marfam {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

// Uniform in [0,1) from 53 random bits.
inline double to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

inline double unit_draw(std::uint64_t seed, std::uint64_t tag, std::uint64_t a,
                        std::uint64_t b) {
    return to_unit(mix64(hash_combine(hash_combine(seed, tag), hash_combine(a, b))));
}

// Small sequential stream for phases that are inherently ordered
// (e.g. the per-period matching shuffle).
class Stream {
  public:
    explicit Stream(std::uint64_t seed) : state_(mix64(seed)) {}

    std::uint64_t next_u64() {
        state_ = mix64(state_);
        return state_;
    }
    double next_unit() { return to_unit(next_u64()); }
    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return next_u64() % n;
    }

  private:
    std::uint64_t state_;
};

}  // namespace marfam
