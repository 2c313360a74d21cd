#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace esnlm {

/// Name of the generator algorithm and value transforms, recorded in checkpoints.
/// Seeds reproduce across implementations that follow the same recipe:
///   - engine: mt19937_64 seeded directly with the 64-bit seed
///   - uniform01: (next_u64() >> 11) * 2^-53, in [0, 1)
///   - normal: Box-Muller, consumes exactly two engine outputs per draw
///   - bernoulli(p): uniform01() < p
///   - below(n): rejection sampling on the high bits
inline constexpr std::string_view kRngFamily = "mt19937_64/boxmuller-v1";

/// Seeded generator with fixed, documented value transforms. std::*_distribution
/// is deliberately avoided: its output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Box-Muller; always consumes two engine outputs, spare value discarded.
    double normal(double mean, double stddev);

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform integer in [0, n); rejection sampling, n >= 1.
    std::uint64_t below(std::uint64_t n);

    /// Fisher-Yates with below(); portable unlike std::shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent stream seed from a master seed and a stream label.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream);

} // namespace esnlm
