#ifndef CHANALLOC_RNG_HPP_
#define CHANALLOC_RNG_HPP_

#include <cstdint>
#include <random>

namespace chanalloc {

/// Seeded random source for instance generation. Wraps std::mt19937_64 (a
/// portable, standardized engine) and derives uniform values from raw 64-bit
/// draws instead of std::uniform_*_distribution, whose output differs across
/// standard libraries. Identical seed therefore means bit-identical draws on
/// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : engine_(seed)
    {
    }

    /// Uniform double in [lo, hi): top 53 bits of one engine draw.
    double uniform(double lo, double hi)
    {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    /// Uniform index in [0, n), n > 0. Multiply-shift on one engine draw.
    std::size_t uniform_index(std::size_t n)
    {
        const unsigned __int128 wide = static_cast<unsigned __int128>(engine_()) * n;
        return static_cast<std::size_t>(wide >> 64);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace chanalloc

#endif // CHANALLOC_RNG_HPP_
