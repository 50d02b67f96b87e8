#pragma once

#include <cstdint>

namespace barycalc {

// splitmix64. Every sampled instance derives its own generator from
// (seed, stream, instance index), so samples are index-addressable and
// identical no matter how instances are scheduled across threads.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    static SplitMix64 at(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        SplitMix64 r(seed ^ (0xA0761D6478BD642FULL * (stream + 1)));
        r.next();
        r.state_ ^= 0xE7037ED1A0B428DBULL * (index + 1);
        r.next();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace barycalc
