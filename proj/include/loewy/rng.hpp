#pragma once

#include <cstdint>

namespace loewy {

// splitmix64. Hand-rolled instead of <random> because libstdc++ leaves
// distribution output implementation-defined, and fuzz digests must be
// byte-identical everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform-ish in [0, n), deterministic across platforms
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // in [lo, hi] inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // derive an independent stream (used to decouple per-item generation from
    // evaluation order in parallel sweeps)
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x632be59bd9b4e019ull + index * 0x9e3779b97f4a7c15ull));
        return r.next();
    }

  private:
    std::uint64_t state_;
};

}  // namespace loewy
