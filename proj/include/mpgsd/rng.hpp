#ifndef MPGSD_RNG_HPP
#define MPGSD_RNG_HPP

#include <cstdint>
#include <random>

namespace mpgsd {

// mt19937_64 plus rejection-sampled bounded draws. std::uniform_int_distribution
// is implementation-defined, so seeded streams would differ between standard
// libraries; these helpers keep one seed producing one stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % bound;
    }

    /// Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) {
        return static_cast<double>(engine_()) / static_cast<double>(UINT64_MAX) < p;
    }

private:
    std::mt19937_64 engine_;
};

/// Stateless mix for deriving per-attempt or per-stream seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace mpgsd

#endif
