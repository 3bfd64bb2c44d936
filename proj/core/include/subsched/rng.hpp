#ifndef SUBSCHED_RNG_HPP
#define SUBSCHED_RNG_HPP

#include <cstdint>
#include <initializer_list>

namespace subsched {

/// All randomness in the library flows through SplitMix64 (Steele, Lea &
/// Flood, "Fast splittable pseudorandom number generators", OOPSLA 2014).
/// It is pinned here, rather than <random>, because std::mt19937 seeding and
/// std::uniform_int_distribution are not bit-identical across standard
/// library implementations and every experiment output must be reproducible
/// from a 64-bit seed alone.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a root seed and a list of tags
/// (stage ids, replicate indices, user ids).  Chaining the finalizer keeps
/// streams decorrelated regardless of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> tags) {
    std::uint64_t s = root;
    for (std::uint64_t t : tags) {
        s ^= t + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
        std::uint64_t st = s;
        s = splitmix64(st);
    }
    return s;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Unbiased draw in [0, bound) by rejection; bound > 0.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t limit = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r < limit);
        return r % bound;
    }

    /// Unbiased draw in [0, bound) for 128-bit bounds (color vector entries).
    unsigned __int128 bounded_u128(unsigned __int128 bound) {
        using u128 = unsigned __int128;
        const u128 limit = (u128(0) - bound) % bound;  // 2^128 mod bound
        u128 r;
        do {
            r = (u128(next_u64()) << 64) | next_u64();
        } while (r < limit);
        return r % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace subsched

#endif
