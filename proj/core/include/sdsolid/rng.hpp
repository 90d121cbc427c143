#pragma once

#include <cstdint>

namespace sds {

/// splitmix64: tiny deterministic generator. Same seed -> same stream on
/// every platform, which is all the library needs (sampling field elements,
/// retry loops in surface constructors).
class rng {
  public:
    explicit rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) by rejection; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection zone keeps the draw exactly uniform.
        std::uint64_t limit = ~0ULL - (~0ULL % bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

  private:
    std::uint64_t state_;
};

}  // namespace sds
