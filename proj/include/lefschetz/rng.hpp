#pragma once
#include <cstdint>
#include <random>

namespace lefschetz {

// Seeded generator with a portable integer draw. std::mt19937_64 output is
// specified by the standard; uniform_int_distribution is not, so we reduce by
// modulo ourselves to keep reports byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // inclusive bounds
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % span);
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

inline constexpr std::uint64_t kDefaultSeed = 1729;

} // namespace lefschetz
