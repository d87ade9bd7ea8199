#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace fraclab {

// SplitMix64 step; used to derive well-mixed seed material.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Addressable random stream: (master_seed, stream_index) fully determines the
// generated sequence. Streams with distinct indices are statistically
// independent; parallel replicates draw from their own stream so results do
// not depend on scheduling.
struct SeedStream {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;

    // Derives a child stream; distinct (parent, k) pairs map to distinct
    // streams via a SplitMix64 mix of the parent index and k.
    [[nodiscard]] SeedStream substream(std::uint64_t k) const {
        std::uint64_t s = stream_index ^ (0xd1b54a32d192ed03ull * (k + 1));
        return SeedStream{master_seed, splitmix64(s)};
    }
};

// Seeded Gaussian/uniform source. The Box-Muller transform is spelled out so
// the byte stream is pinned by this file, not by the standard library's
// unspecified normal_distribution algorithm.
class RandomStream {
public:
    explicit RandomStream(const SeedStream& s) {
        std::uint64_t st = s.master_seed;
        const std::uint64_t a = splitmix64(st);
        st ^= 0x9e3779b97f4a7c15ull * (s.stream_index + 1);
        const std::uint64_t b = splitmix64(st);
        const std::uint64_t c = splitmix64(st);
        const std::uint64_t d = splitmix64(st);
        std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                          static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32),
                          static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(d >> 32)};
        engine_.seed(seq);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1p-53;
    }

    // Standard normal draw (Box-Muller, pair cached).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    void fill_normal(std::span<double> out) {
        for (double& x : out) x = normal();
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace fraclab
