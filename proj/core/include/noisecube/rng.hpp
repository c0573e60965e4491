#pragma once

#include <cstdint>
#include <random>

namespace noisecube {

/// Deterministic cross-platform generator: std::mt19937_64 seeded directly;
/// doubles are (next() >> 11) * 2^-53, fair bits are the top bit. The same
/// stream is produced on every platform for a fixed seed.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t next() { return gen_(); }
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }
    int fair_bit() { return static_cast<int>(gen_() >> 63); }
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(gen_() % bound);
    }

   private:
    std::mt19937_64 gen_;
};

/// splitmix64 finalizer of a ^ (b + golden gamma); derives per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace noisecube
