#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace csense {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based substream splitting: one master seed, substreams keyed by
// (stream tag, counter). Substreams are independent of the order or length
// of any other substream, so parallel evaluation stays reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t counter = 0) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ (0x9e3779b97f4a7c15ULL + stream));
    h = splitmix64(h ^ counter);
    return h;
}

// Seeded random stream. Draws go through the raw engine output only, never
// through std::*_distribution, so sequences are bit-identical everywhere.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double prob) { return uniform() < prob; }

    double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Index draw from a probability vector (assumed to sum to ~1).
    int categorical(std::span<const double> probs) {
        const double u = uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace csense
